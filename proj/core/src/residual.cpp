#include <residua/residual.hpp>

#include <residua/reference_data.hpp>
#include <residua/tableaux.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace residua {

bool is_linear_residual(const RootSystem& rs, const QVec& point, const QVec& kval) {
    if (kval.size() != rs.nparams()) throw std::domain_error("is_linear_residual: bad parameter count");
    long hits = 0, zeros = 0;
    for (std::size_t i = 0; i < rs.npositive(); ++i) {
        Rat v = dot(rs.positive[i], point);
        const Rat& k = kval[static_cast<std::size_t>(rs.pclass[i])];
        if (v == k) ++hits;
        if (-v == k) ++hits;
        if (v == Rat(0)) zeros += 2;
    }
    return hits == zeros + rs.rank;
}

bool is_generic_residual(const RootSystem& rs, const std::vector<LinForm>& point) {
    long hits = 0, zeros = 0;
    for (std::size_t i = 0; i < rs.npositive(); ++i) {
        LinForm v = alpha_value(rs.positive[i], point);
        LinForm k = rs.k_of(i);
        if (v == k) ++hits;
        if (v == -k) ++hits;
        if (v.is_zero()) zeros += 2;
    }
    return hits == zeros + rs.rank;
}

namespace {

// Equation rows are laid out [ a_0 .. a_{dim-1} | rhs_0 .. rhs_{np-1} ]
// meaning  sum a_d x_d = sum rhs_p k_p;  echelon pivots live in the matrix
// part only.
struct EqSolver {
    const RootSystem& rs;
    std::size_t dim, np, width;
    std::vector<QVec> rows;          // pivot-normalized echelon rows
    std::vector<std::size_t> pivs;   // pivot column per row

    explicit EqSolver(const RootSystem& r)
        : rs(r), dim(static_cast<std::size_t>(r.dim)), np(r.nparams()), width(dim + np) {}

    // forward-reduce r against the current rows; returns its pivot column in
    // the matrix part, or `width` when the matrix part vanishes
    std::size_t reduce(QVec& r) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rat& c = r[pivs[i]];
            if (c == Rat(0)) continue;
            Rat f = c;  // rows are pivot-normalized
            for (std::size_t j = 0; j < width; ++j)
                if (rows[i][j] != Rat(0)) r[j] -= f * rows[i][j];
        }
        for (std::size_t j = 0; j < dim; ++j)
            if (r[j] != Rat(0)) return j;
        return width;
    }

    void push(QVec r, std::size_t piv) {
        Rat inv = Rat(1) / r[piv];
        for (auto& x : r) x *= inv;
        rows.push_back(std::move(r));
        pivs.push_back(piv);
    }

    std::vector<LinForm> back_substitute() const {
        std::vector<std::size_t> order(rows.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return pivs[a] > pivs[b]; });
        std::vector<LinForm> x(dim, LinForm(np));
        for (std::size_t oi : order) {
            const QVec& r = rows[oi];
            std::size_t p = pivs[oi];
            LinForm acc(np);
            for (std::size_t q = 0; q < np; ++q) acc.coeff[q] = r[dim + q];
            for (std::size_t c = p + 1; c < dim; ++c)
                if (r[c] != Rat(0)) acc -= x[c] * r[c];
            x[p] = std::move(acc);
        }
        return x;
    }
};

}  // namespace

std::vector<std::vector<LinForm>> solve_residual_candidates(const RootSystem& rs) {
    EqSolver es(rs);

    // the ambient complement constraints are part of every system
    for (const auto& row : rs.complement_rows) {
        QVec r(es.width, Rat(0));
        for (std::size_t d = 0; d < es.dim; ++d) r[d] = row[d];
        std::size_t p = es.reduce(r);
        if (p == es.width) throw invariant_error("dependent complement row");
        es.push(std::move(r), p);
    }

    // equations alpha(x) = k_alpha over all roots, both signs
    std::vector<QVec> eqs;
    for (std::size_t i = 0; i < rs.npositive(); ++i) {
        for (int sign : {1, -1}) {
            QVec r(es.width, Rat(0));
            for (std::size_t d = 0; d < es.dim; ++d) r[d] = Rat(sign) * rs.positive[i][d];
            r[es.dim + static_cast<std::size_t>(rs.pclass[i])] = Rat(1);
            eqs.push_back(std::move(r));
        }
    }

    std::set<std::vector<LinForm>> found;
    std::size_t target = static_cast<std::size_t>(rs.rank);

    auto rec = [&](auto&& self, std::size_t start, std::size_t chosen) -> void {
        if (chosen == target) {
            found.insert(es.back_substitute());
            return;
        }
        for (std::size_t j = start; j + (target - chosen) <= eqs.size(); ++j) {
            QVec r = eqs[j];
            std::size_t p = es.reduce(r);
            if (p == es.width) continue;  // dependent on the chosen flat
            es.push(std::move(r), p);
            self(self, j + 1, chosen + 1);
            es.rows.pop_back();
            es.pivs.pop_back();
        }
    };
    rec(rec, 0, 0);

    return {found.begin(), found.end()};
}

std::vector<std::vector<LinForm>> enumerate_generic_points(const RootSystem& rs) {
    QVec sample = default_sample(rs);
    // Replay first: points of one orbit collapse to few replays (one per coset
    // of the shadow stabilizer), so the wall sweep runs on a handful of points.
    std::set<std::vector<LinForm>> replayed;
    for (auto& cand : solve_residual_candidates(rs))
        if (is_generic_residual(rs, cand)) replayed.insert(dominant_replay(rs, cand, sample));
    std::set<std::vector<LinForm>> reps;
    for (const auto& pt : replayed) reps.insert(canonical_orbit_point(rs, pt, sample));
    return {reps.begin(), reps.end()};
}

std::vector<LinForm> regularity_hyperplanes(const RootSystem& rs, const std::vector<LinForm>& coords) {
    std::set<LinForm> candidates;
    for (std::size_t i = 0; i < rs.npositive(); ++i) {
        LinForm v = alpha_value(rs.positive[i], coords);
        LinForm k = rs.k_of(i);
        for (const LinForm& c : {v, v - k, v + k})
            if (!c.is_zero()) candidates.insert(c.normalized());
    }

    std::vector<LinForm> singular;
    for (const LinForm& h : candidates) {
        QVec sample;
        if (rs.nparams() == 1) {
            sample = {Rat(0)};  // the only parameter hyperplane is k = 0
        } else {
            sample = {-h.coeff[1], h.coeff[0]};
            if (sample[0] == Rat(0) && sample[1] == Rat(0))
                throw invariant_error("degenerate hyperplane candidate");
        }
        QVec point = evaluate_point(coords, sample);
        if (!is_linear_residual(rs, point, sample)) singular.push_back(h);
    }
    std::sort(singular.begin(), singular.end());
    singular.erase(std::unique(singular.begin(), singular.end()), singular.end());
    return singular;
}

QVec evaluate_point(const std::vector<LinForm>& coords, const QVec& kval) {
    QVec v;
    v.reserve(coords.size());
    for (const auto& f : coords) v.push_back(f.eval(kval));
    return v;
}

namespace {

std::vector<LinForm> reconstruct_from_simple_values(const RootSystem& rs,
                                                    const std::vector<LinForm>& values) {
    QMat sys;
    std::vector<LinForm> rhs;
    for (int i = 0; i < rs.rank; ++i) {
        sys.push_back(rs.simple[static_cast<std::size_t>(i)]);
        rhs.push_back(values[static_cast<std::size_t>(i)]);
    }
    for (const auto& row : rs.complement_rows) {
        sys.push_back(row);
        rhs.push_back(LinForm(values.empty() ? 0 : values[0].nparams()));
    }
    auto sol = solve_square(sys, rhs);
    if (!sol) throw invariant_error("simple-value reconstruction is singular");
    return *sol;
}

std::vector<GenericFamily> exceptional_families(const RootSystem& rs,
                                                const std::vector<LabeledValues>& table) {
    QVec sample = default_sample(rs);
    auto points = enumerate_generic_points(rs);
    std::map<std::vector<LinForm>, std::string> labels;
    for (const auto& row : table) {
        auto pt = reconstruct_from_simple_values(rs, row.simple_values);
        if (!is_generic_residual(rs, pt))
            throw invariant_error("reference row " + row.label + " is not residual");
        auto canon = canonical_orbit_point(rs, pt, sample);
        if (!labels.emplace(canon, row.label).second)
            throw invariant_error("reference rows collide at " + row.label);
    }
    if (labels.size() != points.size())
        throw invariant_error("enumeration does not match the reference table for " + rs.label());

    std::vector<GenericFamily> out;
    for (const auto& [canon, label] : labels) {
        if (!std::binary_search(points.begin(), points.end(), canon))
            throw invariant_error("reference orbit " + label + " not found by enumeration");
        out.push_back({label, canon, regularity_hyperplanes(rs, canon)});
    }
    std::sort(out.begin(), out.end(),
              [](const GenericFamily& a, const GenericFamily& b) { return a.label < b.label; });
    return out;
}

}  // namespace

std::vector<GenericFamily> enumerate_families(const RootSystem& rs) {
    std::vector<GenericFamily> out;
    switch (rs.type) {
        case RSType::A: {
            // the single regular orbit: coordinates k (j - n/2), j = 0..n
            std::vector<LinForm> xi;
            for (int j = 0; j <= rs.rank; ++j) {
                LinForm f(1);
                f.coeff[0] = Rat(j) - Rat(rs.rank, 2);
                xi.push_back(std::move(f));
            }
            out.push_back({to_string(Partition{rs.rank + 1}), xi, {}});
            break;
        }
        case RSType::B:
        case RSType::C: {
            bool halve = rs.type == RSType::C;
            std::vector<LinForm> images{LinForm::unit(2, 0),
                                        LinForm::unit(2, 1, halve ? rat(1, 2) : Rat(1))};
            for (const auto& lam : partitions_of(rs.rank)) {
                auto xi = xi_from_partition(lam);
                if (halve)
                    for (auto& f : xi) f = f.substitute(images);
                out.push_back({to_string(lam), std::move(xi), {}});
            }
            break;
        }
        case RSType::D: {
            // only slope-0-regular ("sharp") partitions stay residual once k2
            // is frozen to 0; conjugate partitions give the same orbit
            QVec sample = default_sample(rs);
            std::set<std::vector<LinForm>> seen;
            for (const auto& lam : partitions_of(rs.rank)) {
                if (is_m_singular(lam, Rat(0))) continue;
                std::vector<LinForm> xi;
                for (long c : contents(lam)) {
                    LinForm f(1);
                    f.coeff[0] = Rat(c);
                    xi.push_back(std::move(f));
                }
                auto canon = canonical_orbit_point(rs, xi, sample);
                if (seen.insert(canon).second) out.push_back({to_string(lam), std::move(xi), {}});
            }
            break;
        }
        case RSType::F4:
            return exceptional_families(rs, f4_simple_value_table());
        case RSType::G2:
            return exceptional_families(rs, g2_simple_value_table());
    }
    for (auto& fam : out) fam.singular = regularity_hyperplanes(rs, fam.coords);
    return out;
}

std::vector<ConfluenceRow> confluence_table(const RootSystem& rs,
                                            const std::vector<GenericFamily>& families,
                                            const QVec& kval) {
    std::vector<ConfluenceRow> out;
    std::map<QVec, std::size_t> index;
    for (const auto& fam : families) {
        QVec v = evaluate_point(fam.coords, kval);
        QVec dom = make_dominant(rs, v).first;
        auto [it, fresh] = index.emplace(dom, out.size());
        if (fresh) {
            QVec sv;
            for (int i = 0; i < rs.rank; ++i) sv.push_back(dot(rs.simple[static_cast<std::size_t>(i)], dom));
            out.push_back({dom, std::move(sv), {}});
        }
        out[it->second].labels.push_back(fam.label);
    }
    // Largest diagram first: descending lexicographic order on the values at
    // the simple roots, so the fully regular orbit heads the table.
    std::sort(out.begin(), out.end(),
              [](const ConfluenceRow& a, const ConfluenceRow& b) { return b.simple_values < a.simple_values; });
    return out;
}

}  // namespace residua
