#include <residua/classify.hpp>

#include <residua/diagrams.hpp>
#include <residua/reference_data.hpp>
#include <residua/tableaux.hpp>
#include <residua/weyl.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace residua {

namespace {

std::string type_rank_label(RSType t, int rank) {
    switch (t) {
        case RSType::A: return "A" + std::to_string(rank);
        case RSType::B: return "B" + std::to_string(rank);
        case RSType::C: return "C" + std::to_string(rank);
        case RSType::D: return "D" + std::to_string(rank);
        case RSType::F4: return "F4";
        case RSType::G2: return "G2";
    }
    throw invariant_error("unknown type");
}

long positive_count(RSType t, long rank) {
    switch (t) {
        case RSType::A: return rank * (rank + 1) / 2;
        case RSType::B:
        case RSType::C: return rank * rank;
        case RSType::D: return rank * (rank - 1);
        case RSType::F4: return 24;
        case RSType::G2: return 6;
    }
    throw invariant_error("unknown type");
}

// Count/label machinery shared by the graded entry point and the per-vertex
// affine counts.  `k` holds one value per parameter class.
GradedCount typed_count(RSType t, int rank, const QVec& k) {
    GradedCount out;
    auto add = [&](std::string label, long mult) {
        out.families.emplace_back(std::move(label), mult);
        out.total += mult;
    };
    if (rank == 1 && (t == RSType::A || t == RSType::B || t == RSType::C)) {
        // a single root class; the one-box family survives off k = 0
        if (k.at(0) != Rat(0)) add(t == RSType::A ? "2" : "1", 1);
        return out;
    }
    switch (t) {
        case RSType::A:
            if (k.at(0) != Rat(0)) add(to_string(Partition{rank + 1}), 1);
            break;
        case RSType::B:
        case RSType::C: {
            const Rat k1 = k.at(0), k2 = k.at(1);
            for (const auto& lam : partitions_of(rank)) {
                bool regular;
                if (k1 == Rat(0)) {
                    regular = k2 != Rat(0);
                } else {
                    const Rat m = k2 / k1;
                    const auto sing =
                        t == RSType::B ? singular_ratios(lam) : cn_singular_ratios(lam);
                    regular = !sing.count(m);
                }
                if (regular) add(to_string(lam), 1);
            }
            break;
        }
        case RSType::D:
            if (k.at(0) != Rat(0))
                for (const auto& orbit : dn_sharp_orbits(rank)) add(to_string(orbit.first), 1);
            break;
        case RSType::F4:
        case RSType::G2: {
            const auto table = t == RSType::F4 ? f4_regularity_table() : g2_regularity_table();
            for (const auto& row : table) {
                bool regular = true;
                for (const auto& f : row.factors)
                    if (f.eval(k) == Rat(0)) regular = false;
                // the generic central character map is 2:1 over the
                // rank-degenerate F4 orbit and injective everywhere else
                if (regular) add(row.label, row.label == "f8" ? 2 : 1);
            }
            break;
        }
    }
    return out;
}


}  // namespace

std::vector<GenericFamily> known_families(const RootSystem& rs) {
    if (rs.type != RSType::F4 && rs.type != RSType::G2) return enumerate_families(rs);
    const auto values = rs.type == RSType::F4 ? f4_simple_value_table() : g2_simple_value_table();
    const auto factors = rs.type == RSType::F4 ? f4_regularity_table() : g2_regularity_table();
    std::vector<GenericFamily> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        // xi = sum v_i omega_i^vee reproduces the simple values
        std::vector<LinForm> coords(static_cast<std::size_t>(rs.dim),
                                    LinForm(rs.nparams()));
        for (int d = 0; d < rs.dim; ++d)
            for (int j = 0; j < rs.rank; ++j) {
                LinForm term = values[i].simple_values[static_cast<std::size_t>(j)];
                term *= rs.fundamental_coweights[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
                coords[static_cast<std::size_t>(d)] += term;
            }
        if (factors[i].label != values[i].label)
            throw invariant_error("reference tables disagree on labels");
        out.push_back({values[i].label, std::move(coords), factors[i].factors});
    }
    return out;
}

GradedCount count_graded_ds(const RootSystem& rs, const QVec& kval) {
    if (kval.size() != rs.nparams())
        throw std::domain_error("expected " + std::to_string(rs.nparams()) +
                                " parameter values for " + rs.label());
    return typed_count(rs.type, rs.rank, kval);
}

std::vector<GccRow> gcc_table(const RootSystem& rs, const QVec& kval) {
    if (kval.size() != rs.nparams())
        throw std::domain_error("expected " + std::to_string(rs.nparams()) +
                                " parameter values for " + rs.label());
    std::vector<GenericFamily> regular;
    for (auto& fam : known_families(rs)) {
        bool ok = true;
        for (const auto& f : fam.singular)
            if (f.eval(kval) == Rat(0)) ok = false;
        if (ok) regular.push_back(std::move(fam));
    }
    std::map<std::string, long> mult;
    for (const auto& [label, m] : count_graded_ds(rs, kval).families) mult[label] = m;
    std::vector<GccRow> out;
    for (auto& row : confluence_table(rs, regular, kval)) {
        GccRow g{std::move(row.dominant), std::move(row.simple_values), {}, 0};
        for (auto& label : row.labels) {
            auto it = mult.find(label);
            if (it == mult.end())
                throw invariant_error("family " + label + " has no multiplicity at this k");
            g.families.emplace_back(std::move(label), it->second);
            g.weight += it->second;
        }
        out.push_back(std::move(g));
    }
    return out;
}

EllipticComparison generic_total_vs_elliptic(const RootSystem& rs) {
    // 1/7 avoids every singular slope of the supported ranks: the slopes are
    // half-integers for B/C and the exceptional walls have single-digit
    // integer coefficients
    QVec sample{Rat(1)};
    if (rs.nparams() == 2) sample.push_back(rat(1, 7));
    EllipticComparison cmp;
    cmp.generic_count = count_graded_ds(rs, sample).total;
    cmp.elliptic_count = elliptic_class_count(rs);
    cmp.equal = cmp.generic_count == cmp.elliptic_count;
    return cmp;
}

// ---------------------------------------------------------------------------
// Affine level
// ---------------------------------------------------------------------------

std::string AffineDatum::label() const {
    return type_rank_label(type, rank) +
           (lattice == LatticeTag::weight ? "(weight)" : "(root)");
}

std::string AffineFactor::label() const { return type_rank_label(type, rank); }

LatticeTag parse_lattice_tag(std::string_view text) {
    if (text == "weight") return LatticeTag::weight;
    if (text == "root") return LatticeTag::root;
    throw std::domain_error("unknown lattice tag: '" + std::string(text) + "'");
}

AffineDatum make_affine_datum(std::string_view r1, LatticeTag lattice) {
    const TypeRank tr = parse_type_label(r1);
    const bool twisted_end = tr.type == RSType::C;
    bool ok = false;
    switch (tr.type) {
        case RSType::B: ok = tr.rank >= 2 && lattice == LatticeTag::weight; break;
        case RSType::C: ok = tr.rank >= 2; break;
        case RSType::F4:
        case RSType::G2: ok = lattice == LatticeTag::weight; break;
        default: break;  // simply laced: equal-parameter territory, out of scope
    }
    if (!ok)
        throw std::domain_error("unsupported affine datum: " + std::string(r1) + " / " +
                                (lattice == LatticeTag::weight ? "weight" : "root"));
    AffineDatum d{tr.type, tr.rank, lattice, {}, };
    if (twisted_end && lattice == LatticeTag::weight)
        d.params = {"f0", "f1", "f2"};
    else
        d.params = {"f1", "f2"};
    return d;
}

namespace {

// Parameter attached to diagram node `node` (0 = affine).  For a C-type
// spectral system the long end nodes carry the two independent end
// parameters f2 -+ f0 (collapsing to the single f2 on the root lattice);
// every class shared with the reduced system carries twice its log-parameter.
LinForm node_weight(const AffineDatum& datum, int node, int cls) {
    const auto np = datum.params.size();
    if (datum.type == RSType::C && cls == 1) {
        if (datum.lattice == LatticeTag::root) return LinForm::unit(np, 1);
        LinForm w = LinForm::unit(np, 2);
        if (node == 0)
            w -= LinForm::unit(np, 0);
        else
            w += LinForm::unit(np, 0);
        return w;
    }
    std::size_t index = cls;
    if (datum.type == RSType::C && datum.lattice == LatticeTag::weight) index = 1;
    return LinForm::unit(np, index, Rat(2));
}

struct DiagramNode {
    QVec root;      // gradient of the node's affine root
    LinForm weight;
    Rat len2;
};

std::vector<DiagramNode> diagram_nodes(const AffineDatum& datum, const RootSystem& rs) {
    std::vector<DiagramNode> nodes;
    auto class_of = [&](const QVec& root) {
        auto idx = rs.find_root(root);
        if (!idx) throw invariant_error("diagram root missing from the system");
        return rs.pclass[idx->first];
    };
    QVec minus_theta = rs.highest_root;
    for (auto& x : minus_theta) x = -x;
    nodes.push_back({minus_theta, node_weight(datum, 0, class_of(rs.highest_root)),
                     dot(rs.highest_root, rs.highest_root)});
    for (int i = 0; i < rs.rank; ++i) {
        const QVec& s = rs.simple[static_cast<std::size_t>(i)];
        nodes.push_back({s, node_weight(datum, i + 1, class_of(s)), dot(s, s)});
    }
    return nodes;
}

struct BasisNode {
    int node;  // diagram node index
    const DiagramNode* data;
};

// Type of one connected component of a vertex basis, with the parameter
// forms read off its nodes (long class first for B/F4/G2, short first for C).
AffineFactor identify_component(const std::vector<BasisNode>& comp) {
    AffineFactor f;
    f.rank = static_cast<int>(comp.size());
    if (f.rank == 1) {
        f.type = RSType::A;
        f.k = {comp[0].data->weight};
        return f;
    }
    Rat lmin = comp[0].data->len2;
    for (const auto& b : comp) lmin = std::min(lmin, b.data->len2);
    std::vector<const BasisNode*> longs, shorts;
    for (const auto& b : comp)
        (b.data->len2 == lmin ? shorts : longs).push_back(&b);
    auto common_weight = [](const std::vector<const BasisNode*>& side) {
        for (const auto* b : side)
            if (!(b->data->weight == side[0]->data->weight))
                throw invariant_error("unequal parameters on one root class");
        return side[0]->data->weight;
    };
    if (longs.empty()) {
        // simply laced: chain = A, single (1,1,*) fork = D, anything else is
        // outside the supported data
        std::vector<int> degree(comp.size(), 0);
        int fork = -1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t j = 0; j < comp.size(); ++j)
                if (i != j && dot(comp[i].data->root, comp[j].data->root) != Rat(0)) ++degree[i];
            if (degree[i] >= 3) fork = static_cast<int>(i);
        }
        if (fork < 0) {
            f.type = RSType::A;
        } else {
            int leaves_at_fork = 0;
            for (std::size_t i = 0; i < comp.size(); ++i)
                if (degree[i] == 1 && dot(comp[i].data->root, comp[static_cast<std::size_t>(fork)].data->root) != Rat(0))
                    ++leaves_at_fork;
            if (degree[static_cast<std::size_t>(fork)] != 3 || leaves_at_fork < 2)
                throw std::domain_error("subsystem of type E is out of scope");
            f.type = RSType::D;
        }
        f.k = {common_weight(shorts)};
        return f;
    }
    const Rat ratio = longs[0]->data->len2 / lmin;
    for (const auto* b : longs)
        if (b->data->len2 != longs[0]->data->len2)
            throw invariant_error("three root lengths in one component");
    if (ratio == Rat(3)) {
        f.type = RSType::G2;
        f.k = {common_weight(longs), common_weight(shorts)};
    } else if (longs.size() == 2 && shorts.size() == 2) {
        f.type = RSType::F4;
        f.k = {common_weight(longs), common_weight(shorts)};
    } else if (longs.size() == 1) {
        f.type = RSType::C;
        f.k = {common_weight(shorts), common_weight(longs)};
    } else if (shorts.size() == 1) {
        f.type = RSType::B;
        f.k = {common_weight(longs), common_weight(shorts)};
    } else {
        throw invariant_error("unrecognized mixed-length component");
    }
    return f;
}

AlcoveVertex build_vertex(const RootSystem& rs, const std::vector<DiagramNode>& nodes, int j) {
    AlcoveVertex v;
    v.label = "e" + std::to_string(j);
    v.point = j == 0 ? QVec(static_cast<std::size_t>(rs.dim), Rat(0))
                     : rs.fundamental_coweights[static_cast<std::size_t>(j - 1)];
    if (j > 0)
        for (auto& x : v.point) x /= Rat(rs.marks[static_cast<std::size_t>(j - 1)]);

    std::vector<BasisNode> basis;
    for (int i = 0; i <= rs.rank; ++i)
        if (i != j) basis.push_back({i, &nodes[static_cast<std::size_t>(i)]});

    // connected components of the basis diagram
    std::vector<int> comp_of(basis.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (comp_of[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp_of[i] = ncomp;
        while (!stack.empty()) {
            auto a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (comp_of[b] < 0 && dot(basis[a].data->root, basis[b].data->root) != Rat(0)) {
                    comp_of[b] = ncomp;
                    stack.push_back(b);
                }
        }
        ++ncomp;
    }
    long expected = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<BasisNode> comp;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (comp_of[i] == c) comp.push_back(basis[i]);
        auto f = identify_component(comp);
        expected += positive_count(f.type, f.rank);
        v.factors.push_back(std::move(f));
    }

    // the basis must generate exactly the integral subsystem at the vertex
    long integral = 0;
    for (const auto& alpha : rs.positive)
        if (is_integer(dot(alpha, v.point))) ++integral;
    if (integral != expected)
        throw invariant_error("vertex " + v.label + ": basis spans " + std::to_string(expected) +
                              " positive roots, the integral subsystem has " +
                              std::to_string(integral));
    long total_rank = 0;
    for (const auto& f : v.factors) total_rank += f.rank;
    if (total_rank != rs.rank)
        throw invariant_error("vertex " + v.label + " subsystem is not of full rank");
    return v;
}

std::string subsystem_label(const AlcoveVertex& v) {
    std::string s;
    for (std::size_t i = 0; i < v.factors.size(); ++i) {
        if (i) s += " x ";
        s += v.factors[i].label();
    }
    return s;
}

std::vector<std::string> sorted_factor_labels(const AlcoveVertex& v) {
    std::vector<std::string> labels;
    for (const auto& f : v.factors) labels.push_back(f.label());
    std::sort(labels.begin(), labels.end());
    return labels;
}

}  // namespace

std::vector<AlcoveVertex> alcove_vertices(const AffineDatum& datum) {
    const RootSystem rs = make_root_system(datum.type, datum.rank);
    const auto nodes = diagram_nodes(datum, rs);
    std::vector<AlcoveVertex> all;
    for (int j = 0; j <= rs.rank; ++j) all.push_back(build_vertex(rs, nodes, j));
    if (!(datum.type == RSType::C && datum.lattice == LatticeTag::root)) return all;

    // the parameter-preserving diagram flip folds e_j onto e_{n-j}
    std::vector<AlcoveVertex> reps;
    for (int j = 0; 2 * j <= rs.rank; ++j) {
        const auto& mirror = all[static_cast<std::size_t>(rs.rank - j)];
        if (sorted_factor_labels(all[static_cast<std::size_t>(j)]) != sorted_factor_labels(mirror))
            throw invariant_error("fold mismatch between e" + std::to_string(j) + " and " +
                                  mirror.label);
        AlcoveVertex v = std::move(all[static_cast<std::size_t>(j)]);
        if (2 * j == rs.rank) {
            v.orbit_size = 1;
            v.folded_middle = true;
            if (v.factors.size() != 2 || !(v.factors[0].k == v.factors[1].k) ||
                v.factors[0].rank != v.factors[1].rank)
                throw invariant_error("folded middle vertex is not a doubled leg");
        } else {
            v.orbit_size = 2;
        }
        reps.push_back(std::move(v));
    }
    return reps;
}

SpectralDiagram spectral_diagram(const AffineDatum& datum) {
    const RootSystem rs = make_root_system(datum.type, datum.rank);
    const auto nodes = diagram_nodes(datum, rs);
    SpectralDiagram d{datum, {}};
    const bool folded = datum.type == RSType::C && datum.lattice == LatticeTag::root;
    for (int i = 0; i <= rs.rank; ++i) {
        SpectralNode n;
        n.index = i;
        n.root = nodes[static_cast<std::size_t>(i)].root;
        n.weight = nodes[static_cast<std::size_t>(i)].weight;
        for (int j = 0; j <= rs.rank; ++j)
            if (j != i &&
                dot(nodes[static_cast<std::size_t>(i)].root, nodes[static_cast<std::size_t>(j)].root) != Rat(0))
                n.adjacent.push_back(j);
        n.fold_image = folded ? rs.rank - i : i;
        d.nodes.push_back(std::move(n));
    }
    return d;
}

AffineCount count_affine_ds(const AffineDatum& datum, const QVec& fval) {
    if (fval.size() != datum.params.size())
        throw std::domain_error("expected " + std::to_string(datum.params.size()) +
                                " log-parameter values for " + datum.label());
    AffineCount out;
    for (const auto& v : alcove_vertices(datum)) {
        VertexCount vc{v.label, subsystem_label(v), {}, 1};
        std::vector<long> counts;
        for (const auto& f : v.factors) {
            QVec kv;
            for (const auto& form : f.k) kv.push_back(form.eval(fval));
            counts.push_back(typed_count(f.type, f.rank, kv).total);
            vc.k_e.emplace_back(f.label(), std::move(kv));
        }
        if (v.folded_middle) {
            // unordered pairs from two identical legs, diagonal counted twice
            if (counts[0] != counts[1])
                throw invariant_error("folded legs disagree at " + v.label);
            const long d = counts[0];
            vc.count = (d * d + 3 * d) / 2;
        } else {
            for (long c : counts) vc.count *= c;
        }
        out.vertices.push_back(std::move(vc));
        out.total += out.vertices.back().count;
    }
    return out;
}

}  // namespace residua
