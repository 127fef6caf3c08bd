#include <residua/root_system.hpp>

#include <algorithm>
#include <set>

namespace residua {

std::string type_letter(RSType t) {
    switch (t) {
        case RSType::A: return "A";
        case RSType::B: return "B";
        case RSType::C: return "C";
        case RSType::D: return "D";
        case RSType::F4: return "F4";
        case RSType::G2: return "G2";
    }
    throw std::domain_error("unknown type");
}

TypeRank parse_type_label(std::string_view label) {
    if (label == "F4") return {RSType::F4, 4};
    if (label == "G2") return {RSType::G2, 2};
    if (label.size() >= 2) {
        RSType t;
        switch (label[0]) {
            case 'A': t = RSType::A; break;
            case 'B': t = RSType::B; break;
            case 'C': t = RSType::C; break;
            case 'D': t = RSType::D; break;
            default: throw std::domain_error("bad type label: '" + std::string(label) + "'");
        }
        int r = 0;
        for (char ch : label.substr(1)) {
            if (ch < '0' || ch > '9') throw std::domain_error("bad type label: '" + std::string(label) + "'");
            r = r * 10 + (ch - '0');
        }
        if (r < 1 || (t == RSType::D && r < 2) || r > 64)
            throw std::domain_error("rank out of range: '" + std::string(label) + "'");
        return {t, r};
    }
    throw std::domain_error("bad type label: '" + std::string(label) + "'");
}

namespace {

QVec unit_vec(int dim, int i, Rat c = Rat(1)) {
    QVec v(static_cast<std::size_t>(dim), Rat(0));
    v[static_cast<std::size_t>(i)] = c;
    return v;
}

std::vector<QVec> simple_roots(RSType t, int n, int dim) {
    std::vector<QVec> s;
    switch (t) {
        case RSType::A:
            for (int i = 0; i < n; ++i) {
                QVec v(static_cast<std::size_t>(dim), Rat(0));
                v[i] = Rat(1);
                v[i + 1] = Rat(-1);
                s.push_back(v);
            }
            break;
        case RSType::B:
        case RSType::C:
        case RSType::D:
            for (int i = 0; i + 1 < n; ++i) {
                QVec v(static_cast<std::size_t>(dim), Rat(0));
                v[i] = Rat(1);
                v[i + 1] = Rat(-1);
                s.push_back(v);
            }
            if (t == RSType::B) s.push_back(unit_vec(dim, n - 1));
            if (t == RSType::C) s.push_back(unit_vec(dim, n - 1, Rat(2)));
            if (t == RSType::D) {
                QVec v(static_cast<std::size_t>(dim), Rat(0));
                v[n - 2] = Rat(1);
                v[n - 1] = Rat(1);
                s.push_back(v);
            }
            break;
        case RSType::F4:
            s.push_back({Rat(0), Rat(1), Rat(-1), Rat(0)});
            s.push_back({Rat(0), Rat(0), Rat(1), Rat(-1)});
            s.push_back({Rat(0), Rat(0), Rat(0), Rat(1)});
            s.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
            break;
        case RSType::G2:
            s.push_back({Rat(-2), Rat(1), Rat(1)});
            s.push_back({Rat(1), Rat(-1), Rat(0)});
            break;
    }
    return s;
}

// parameter class by squared length, per type
int class_of_length(RSType t, const Rat& len2) {
    switch (t) {
        case RSType::A:
        case RSType::D:
            if (len2 == Rat(2)) return 0;
            break;
        case RSType::B:
            if (len2 == Rat(2)) return 0;
            if (len2 == Rat(1)) return 1;
            break;
        case RSType::C:
            if (len2 == Rat(2)) return 0;
            if (len2 == Rat(4)) return 1;
            break;
        case RSType::F4:
            if (len2 == Rat(2)) return 0;
            if (len2 == Rat(1)) return 1;
            break;
        case RSType::G2:
            if (len2 == Rat(6)) return 0;
            if (len2 == Rat(2)) return 1;
            break;
    }
    throw invariant_error("unexpected root length for type " + type_letter(t));
}

std::size_t expected_positive_count(RSType t, int n) {
    switch (t) {
        case RSType::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
        case RSType::B:
        case RSType::C: return static_cast<std::size_t>(n) * n;
        case RSType::D: return static_cast<std::size_t>(n) * (n - 1);
        case RSType::F4: return 24;
        case RSType::G2: return 6;
    }
    return 0;
}

}  // namespace

RootSystem make_root_system(RSType t, int rank) {
    if (rank < 1 || (t == RSType::D && rank < 2)) throw std::domain_error("rank out of range");
    if (t == RSType::F4 && rank != 4) throw std::domain_error("F4 has rank 4");
    if (t == RSType::G2 && rank != 2) throw std::domain_error("G2 has rank 2");

    RootSystem rs;
    rs.type = t;
    rs.rank = rank;
    rs.dim = (t == RSType::A) ? rank + 1 : (t == RSType::G2 ? 3 : rank);
    rs.param_names = (t == RSType::A || t == RSType::D) ? std::vector<std::string>{"k"}
                                                        : std::vector<std::string>{"k1", "k2"};
    rs.simple = simple_roots(t, rank, rs.dim);

    // reflection closure of the simples
    std::set<QVec> roots(rs.simple.begin(), rs.simple.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<QVec> batch(roots.begin(), roots.end());
        for (const auto& a : rs.simple) {
            Rat a2 = dot(a, a);
            for (const auto& v : batch) {
                Rat c = Rat(2) * dot(v, a) / a2;
                QVec w = v;
                for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * a[i];
                if (roots.insert(w).second) grew = true;
            }
        }
    }

    // coordinates in the simple basis: G c = S v with G the Gram matrix
    QMat smat(rs.simple.size());
    for (std::size_t i = 0; i < rs.simple.size(); ++i) smat[i] = rs.simple[i];
    QMat gram(rs.simple.size(), QVec(rs.simple.size()));
    for (std::size_t i = 0; i < rs.simple.size(); ++i)
        for (std::size_t j = 0; j < rs.simple.size(); ++j) gram[i][j] = dot(rs.simple[i], rs.simple[j]);
    QMat ginv = inverse(gram);
    rs.root_coord_map.assign(static_cast<std::size_t>(rank), QVec(static_cast<std::size_t>(rs.dim), Rat(0)));
    for (int i = 0; i < rank; ++i)
        for (int d = 0; d < rs.dim; ++d) {
            Rat s(0);
            for (int j = 0; j < rank; ++j) s += ginv[i][j] * smat[j][d];
            rs.root_coord_map[i][d] = s;
        }
    rs.complement_rows = null_space(smat);

    // split positive/negative by simple-root coordinates; integrality and
    // sign-coherence are structural checks on the closure
    struct PosRoot {
        QVec v;
        QVec coords;
        long height;
    };
    std::vector<PosRoot> pos;
    for (const auto& v : roots) {
        QVec c = mat_apply(rs.root_coord_map, v);
        int sign = 0;
        long h = 0;
        for (const auto& x : c) {
            if (!is_integer(x)) throw invariant_error("non-integral root coordinate");
            if (x != Rat(0)) {
                int s = rat_sign(x);
                if (sign == 0) sign = s;
                if (s != sign) throw invariant_error("sign-incoherent root");
            }
            h += static_cast<long>(x.numerator().convert_to<long long>());
        }
        if (sign == 0) throw invariant_error("zero vector in root closure");
        if (sign > 0) pos.push_back({v, c, h});
    }
    if (pos.size() != expected_positive_count(t, rank))
        throw invariant_error("unexpected number of positive roots for " + rs.label());
    if (roots.size() != 2 * pos.size()) throw invariant_error("root closure not symmetric");

    std::sort(pos.begin(), pos.end(), [](const PosRoot& a, const PosRoot& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.v < b.v;
    });
    // simples first, in their own order
    std::stable_sort(pos.begin(), pos.end(),
                     [](const PosRoot& a, const PosRoot& b) { return (a.height == 1) > (b.height == 1); });
    for (std::size_t i = 0; i < rs.simple.size(); ++i)
        if (pos[i].v != rs.simple[i]) {
            auto it = std::find_if(pos.begin(), pos.end(), [&](const PosRoot& p) { return p.v == rs.simple[i]; });
            std::iter_swap(pos.begin() + static_cast<long>(i), it);
        }

    for (std::size_t i = 0; i < pos.size(); ++i) {
        rs.positive.push_back(pos[i].v);
        rs.pclass.push_back(class_of_length(t, dot(pos[i].v, pos[i].v)));
        rs.positive_index[pos[i].v] = i;
    }

    rs.cartan.assign(static_cast<std::size_t>(rank), std::vector<long>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rat c = Rat(2) * dot(rs.simple[i], rs.simple[j]) / dot(rs.simple[j], rs.simple[j]);
            if (!is_integer(c)) throw invariant_error("non-integral Cartan entry");
            rs.cartan[i][j] = static_cast<long>(c.numerator().convert_to<long long>());
        }

    // highest root = unique maximal height (irreducible types only)
    const PosRoot& top = pos.back();
    rs.highest_root = top.v;
    for (const auto& x : top.coords) rs.marks.push_back(static_cast<long>(x.numerator().convert_to<long long>()));

    // fundamental coweights: alpha_i(w_j) = delta_ij within span(R)
    QMat sys = smat;
    for (const auto& row : rs.complement_rows) sys.push_back(row);
    for (int j = 0; j < rank; ++j) {
        std::vector<Rat> rhs(sys.size(), Rat(0));
        rhs[static_cast<std::size_t>(j)] = Rat(1);
        auto sol = solve_square(sys, rhs);
        if (!sol) throw invariant_error("coweight system singular");
        rs.fundamental_coweights.push_back(*sol);
    }

    return rs;
}

std::optional<std::pair<std::size_t, int>> RootSystem::find_root(const QVec& v) const {
    auto it = positive_index.find(v);
    if (it != positive_index.end()) return std::make_pair(it->second, 1);
    QVec w = v;
    for (auto& x : w) x = -x;
    it = positive_index.find(w);
    if (it != positive_index.end()) return std::make_pair(it->second, -1);
    return std::nullopt;
}

bool RootSystem::in_span(const QVec& ambient) const {
    for (const auto& row : complement_rows)
        if (dot(row, ambient) != Rat(0)) return false;
    return true;
}

QVec RootSystem::root_coords(const QVec& ambient) const {
    if (!in_span(ambient)) throw std::domain_error("vector outside the root span");
    return mat_apply(root_coord_map, ambient);
}

}  // namespace residua
