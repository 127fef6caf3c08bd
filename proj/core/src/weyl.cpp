#include <residua/weyl.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace residua {

IMat imat_identity(int n) {
    IMat m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    std::size_t n = a.size();
    IMat r(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long aik = a[i][k];
            if (!aik) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

bool imat_is_identity(const IMat& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

IMat simple_reflection_rc(const RootSystem& rs, int i) {
    IMat m = imat_identity(rs.rank);
    for (int j = 0; j < rs.rank; ++j) m[i][j] -= rs.cartan[j][i];
    return m;
}

std::vector<IMat> generated_subgroup(const RootSystem& rs, const std::vector<int>& gens) {
    std::vector<IMat> gen_mats;
    for (int g : gens) gen_mats.push_back(simple_reflection_rc(rs, g));
    std::set<IMat> seen;
    std::vector<IMat> out;
    out.push_back(imat_identity(rs.rank));
    seen.insert(out[0]);
    for (std::size_t head = 0; head < out.size(); ++head) {
        IMat cur = out[head];
        for (const auto& g : gen_mats) {
            IMat nxt = imat_mul(g, cur);
            if (seen.insert(nxt).second) out.push_back(std::move(nxt));
        }
        if (out.size() > 3000000) throw invariant_error("subgroup enumeration exploded");
    }
    return out;
}

std::vector<IMat> weyl_elements(const RootSystem& rs) {
    std::vector<int> all(static_cast<std::size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i) all[static_cast<std::size_t>(i)] = i;
    return generated_subgroup(rs, all);
}

bool is_elliptic(const IMat& m) {
    std::size_t n = m.size();
    QMat a(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j] - (i == j ? 1 : 0));
    return determinant(a) != Rat(0);
}

long elliptic_class_count(const RootSystem& rs) {
    std::vector<IMat> w = weyl_elements(rs);
    std::map<IMat, std::size_t> index;
    for (std::size_t i = 0; i < w.size(); ++i) index[w[i]] = i;
    std::vector<IMat> gens;
    for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection_rc(rs, i));

    std::vector<bool> visited(w.size(), false);
    long count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (visited[i]) continue;
        // conjugation orbit of w[i] under the generators (involutions)
        std::vector<std::size_t> stack{i};
        visited[i] = true;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                IMat conj = imat_mul(imat_mul(g, w[cur]), g);
                std::size_t ci = index.at(conj);
                if (!visited[ci]) {
                    visited[ci] = true;
                    stack.push_back(ci);
                }
            }
        }
        if (is_elliptic(w[i])) ++count;
    }
    return count;
}

QVec reflect_point(const RootSystem& rs, int i, const QVec& v) {
    const QVec& a = rs.simple[static_cast<std::size_t>(i)];
    Rat c = Rat(2) * dot(a, v) / dot(a, a);
    QVec r = v;
    for (std::size_t d = 0; d < r.size(); ++d) r[d] -= c * a[d];
    return r;
}

std::vector<LinForm> reflect_point(const RootSystem& rs, int i, const std::vector<LinForm>& xi) {
    const QVec& a = rs.simple[static_cast<std::size_t>(i)];
    LinForm c = alpha_value(a, xi) * (Rat(2) / dot(a, a));
    std::vector<LinForm> r = xi;
    for (std::size_t d = 0; d < r.size(); ++d)
        if (a[d] != Rat(0)) r[d] -= c * a[d];
    return r;
}

std::pair<QVec, std::vector<int>> make_dominant(const RootSystem& rs, QVec v) {
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (dot(rs.simple[static_cast<std::size_t>(i)], v) < Rat(0)) {
                v = reflect_point(rs, i, v);
                word.push_back(i);
                moved = true;
            }
        }
    }
    return {std::move(v), std::move(word)};
}

QVec default_sample(const RootSystem& rs) {
    // 1/7 keeps the ratio k2/k1 away from every singular ratio of the small-rank
    // tables, so shadows of distinct orbits rarely collide on a wall.
    QVec s;
    s.push_back(Rat(1));
    if (rs.nparams() == 2) s.push_back(rat(1, 7));
    return s;
}

std::vector<LinForm> dominant_replay(const RootSystem& rs, std::vector<LinForm> xi,
                                     const QVec& sample_k) {
    QVec shadow;
    shadow.reserve(xi.size());
    for (const auto& f : xi) shadow.push_back(f.eval(sample_k));
    auto [vdom, word] = make_dominant(rs, shadow);
    (void)vdom;
    for (int i : word) xi = reflect_point(rs, i, xi);
    return xi;
}

std::vector<LinForm> canonical_orbit_point(const RootSystem& rs, std::vector<LinForm> xi,
                                           const QVec& sample_k) {
    QVec shadow;
    shadow.reserve(xi.size());
    for (const auto& f : xi) shadow.push_back(f.eval(sample_k));

    auto [vdom, word] = make_dominant(rs, shadow);
    for (int i : word) xi = reflect_point(rs, i, xi);

    // stabilizer of the dominant shadow is the parabolic on its vanishing walls
    std::vector<int> walls;
    for (int i = 0; i < rs.rank; ++i)
        if (dot(rs.simple[static_cast<std::size_t>(i)], vdom) == Rat(0)) walls.push_back(i);
    if (walls.empty()) return xi;

    std::set<std::vector<LinForm>> seen;
    std::vector<std::vector<LinForm>> queue{xi};
    seen.insert(xi);
    std::vector<LinForm> best = xi;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<LinForm> cur = queue[head];
        for (int j : walls) {
            auto nxt = reflect_point(rs, j, cur);
            if (seen.insert(nxt).second) {
                if (nxt < best) best = nxt;
                queue.push_back(std::move(nxt));
            }
        }
        if (queue.size() > 1000000) throw invariant_error("stabilizer orbit exploded");
    }
    return best;
}

}  // namespace residua
