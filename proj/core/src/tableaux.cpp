#include <residua/tableaux.hpp>

#include <algorithm>

namespace residua {

std::vector<long> contents(const Partition& lam) {
    std::vector<long> c;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (long j = 0; j < lam[i]; ++j) c.push_back(j - static_cast<long>(i));
    return c;
}

std::vector<LinForm> xi_from_partition(const Partition& lam) {
    std::vector<LinForm> xi;
    for (long c : contents(lam)) {
        LinForm f(2);
        f.coeff[0] = Rat(c);
        f.coeff[1] = Rat(1);
        xi.push_back(std::move(f));
    }
    return xi;
}

std::vector<Rat> extremities(const Partition& lam, const Rat& m) {
    bool half = is_half_integer(m);
    if (!half && !is_integer(m)) throw std::domain_error("extremities: slope must be in Z/2");
    Rat lo = half ? rat(-1, 2) : Rat(0);  // col-bottom threshold: c+m <= lo
    Rat hi = half ? rat(1, 2) : Rat(0);   // row-end threshold:   c+m >= hi

    std::vector<Rat> out;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        for (long j = 0; j < lam[i]; ++j) {
            Rat v = Rat(j - static_cast<long>(i)) + m;
            bool row_end = (j == lam[i] - 1);
            bool col_bottom = (i + 1 == lam.size()) || (lam[i + 1] <= j);
            if (row_end && v >= hi) out.push_back(rat_abs(v));
            if (col_bottom && v <= lo) out.push_back(rat_abs(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_m_singular(const Partition& lam, const Rat& m) {
    if (!is_integer(m) && !is_half_integer(m)) return false;
    auto e = extremities(lam, m);
    return std::adjacent_find(e.begin(), e.end()) != e.end();
}

std::set<Rat> singular_ratios(const Partition& lam) {
    std::set<Rat> out;
    long n = weight(lam);
    for (long s = -2 * (n - 1); s <= 2 * (n - 1); ++s) {
        Rat m(Int(s), Int(2));
        if (is_m_singular(lam, m)) out.insert(m);
    }
    return out;
}

std::set<Rat> cn_singular_ratios(const Partition& lam) {
    std::set<Rat> out;
    for (const Rat& m : singular_ratios(lam)) out.insert(Rat(2) * m);
    return out;
}

}  // namespace residua
