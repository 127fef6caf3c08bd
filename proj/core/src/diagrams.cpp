#include <residua/diagrams.hpp>

#include <residua/tableaux.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace residua {

namespace {

long ceil_long(const Rat& x) {
    return static_cast<long>(-floor_int(-x));
}

void check_slope(const Rat& m) {
    if (!is_integer(m) && !is_half_integer(m))
        throw std::domain_error("slope k2/k1 must be half-integral, got " + to_string(m));
}

// 0 for integral m, -1/2 for strictly half-integral m.
Rat pad_value(const Rat& m) { return is_half_integer(m) ? rat(-1, 2) : Rat(0); }

}  // namespace

long WeightedDiagramB::size() const {
    long n = 0;
    for (const auto& [p, c] : mu) n += c;
    return n;
}

long WeightedDiagramB::at(const Rat& p) const {
    auto it = mu.find(p);
    return it == mu.end() ? 0 : it->second;
}

std::vector<Rat> WeightedDiagramB::coordinates() const {
    std::vector<Rat> out;
    for (auto it = mu.rbegin(); it != mu.rend(); ++it)
        out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
    return out;
}

WeightedDiagramB diagram_from_coordinates(const std::vector<Rat>& coords) {
    WeightedDiagramB d;
    for (const Rat& p : coords) {
        if (p < Rat(0)) throw std::domain_error("diagram coordinates must be nonnegative");
        ++d.mu[p];
    }
    return d;
}

std::string to_string(const WeightedDiagramB& d) {
    std::string s;
    for (const Rat& p : d.coordinates()) {
        if (!s.empty()) s += ',';
        s += to_string(p);
    }
    return s;
}

bool is_kweighted_dynkin(const WeightedDiagramB& d, const Rat& m) {
    check_slope(m);
    Rat base = is_half_integer(m) ? rat(1, 2) : Rat(0);
    for (const auto& [p, c] : d.mu)
        if (c <= 0 || p < base || !is_integer(p - base))
            throw std::domain_error("diagram support must lie in nonnegative m + Z");
    if (d.mu.empty()) return false;

    Rat am = rat_abs(m);
    Rat top = d.mu.rbegin()->first;
    if (d.mu.rbegin()->second != 1) return false;

    // above |m| (and above 0, where the floor rules take over): multiplicity
    // steps down by 0 or 1
    for (Rat p = is_integer(m) ? std::max(am, Rat(1)) : am; p <= top; p += Rat(1)) {
        long diff = d.at(p) - d.at(p + Rat(1));
        if (diff < 0 || diff > 1) return false;
    }
    // strictly between 0 and |m|: multiplicity steps up by 0 or 1
    for (Rat p = base == Rat(0) ? Rat(1) : base; p < am; p += Rat(1)) {
        long diff = d.at(p + Rat(1)) - d.at(p);
        if (diff < 0 || diff > 1) return false;
    }
    if (is_integer(m)) {
        long mu0 = m == Rat(0) ? (d.at(Rat(1)) + 1) / 2 : d.at(Rat(1)) / 2;
        if (d.at(Rat(0)) != mu0) return false;
    }
    return true;
}

std::vector<Rat> jumps_of(const WeightedDiagramB& d, const Rat& m) {
    if (!is_kweighted_dynkin(d, m))
        throw std::domain_error("not a weighted diagram for slope " + to_string(m));
    Rat am = rat_abs(m);
    Rat base = is_half_integer(m) ? rat(1, 2) : Rat(0);
    Rat top = d.mu.rbegin()->first;
    std::vector<Rat> j;
    for (Rat p = base; p <= top; p += Rat(1)) {
        bool jump = (p >= am && d.at(p) == d.at(p + Rat(1)) + 1) ||
                    (p > Rat(0) && p < am && d.at(p) == d.at(p + Rat(1)));
        if (jump) j.push_back(p);
    }
    if (static_cast<long>(j.size()) % 2 != ceil_long(am) % 2) {
        Rat pad = pad_value(m);
        if (!j.empty() && j.front() == pad)
            throw invariant_error("jump list cannot be padded to the required parity");
        j.insert(j.begin(), pad);
    }
    return j;
}

WeightedDiagramB reconstruct_from_jumps(const std::vector<Rat>& jumps, const Rat& m) {
    check_slope(m);
    bool half = is_half_integer(m);
    Rat pad = pad_value(m);
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        if ((half ? !is_half_integer(jumps[i]) : !is_integer(jumps[i])) || jumps[i] < pad)
            throw std::domain_error("jump entries must lie in m + Z above the pad value");
        if (i > 0 && jumps[i] <= jumps[i - 1])
            throw std::domain_error("jumps must be strictly increasing");
    }
    if (jumps.empty() || jumps.back() == pad)
        throw std::domain_error("jump list has no entry above the pad value");

    std::set<Rat> jumpset(jumps.begin(), jumps.end());
    Rat am = rat_abs(m);
    Rat low = half ? rat(1, 2) : Rat(1);
    WeightedDiagramB d;
    Rat jmax = jumps.back();
    d.mu[jmax] = 1;
    long cur = 1;
    for (Rat p = jmax - Rat(1); p >= low; p -= Rat(1)) {
        long val = p >= am ? cur + (jumpset.count(p) ? 1 : 0)
                           : cur - (jumpset.count(p) ? 0 : 1);
        if (val < 0) throw std::domain_error("jump list forces a negative multiplicity");
        if (val > 0) d.mu[p] = val;
        cur = val;
    }
    if (!half) {
        long mu0 = m == Rat(0) ? (cur + 1) / 2 : cur / 2;
        if (mu0 > 0) d.mu[Rat(0)] = mu0;
    }

    auto strip = [&](std::vector<Rat> v) {
        if (!v.empty() && v.front() == pad) v.erase(v.begin());
        return v;
    };
    if (strip(jumps_of(d, m)) != strip(jumps))
        throw std::domain_error("list is not the jump list of any diagram");
    return d;
}

std::string to_string(const DistinguishedUnipotent& u) {
    std::string s;
    for (long p : u.parts) {
        if (!s.empty()) s += ',';
        s += std::to_string(p);
    }
    return s;
}

bool is_distinguished_unipotent(const DistinguishedUnipotent& u, long n, const Rat& m) {
    check_slope(m);
    bool half = is_half_integer(m);
    Rat target = Rat(2 * n) + m * m - (half ? rat(1, 4) : Rat(0));
    Int sum = 0;
    for (std::size_t i = 0; i < u.parts.size(); ++i) {
        long p = u.parts[i];
        if (p <= 0 || p % 2 != (half ? 0 : 1)) return false;
        if (i > 0 && p <= u.parts[i - 1]) return false;
        sum += p;
    }
    if (Rat(sum) != target) return false;
    long minlen = static_cast<long>(floor_int(rat_abs(m)));
    return static_cast<long>(u.parts.size()) >= minlen;
}

std::vector<DistinguishedUnipotent> enumerate_distinguished_unipotent(long n, const Rat& m) {
    check_slope(m);
    bool half = is_half_integer(m);
    Rat total_r = Rat(2 * n) + m * m - (half ? rat(1, 4) : Rat(0));
    long total = static_cast<long>(floor_int(total_r));
    long minlen = static_cast<long>(floor_int(rat_abs(m)));

    std::vector<DistinguishedUnipotent> out;
    std::vector<long> parts;
    std::function<void(long, long)> rec = [&](long next, long remaining) {
        if (remaining == 0) {
            if (static_cast<long>(parts.size()) >= minlen) out.push_back({parts});
            return;
        }
        for (long p = next; p <= remaining; p += 2) {
            parts.push_back(p);
            rec(p + 2, remaining - p);
            parts.pop_back();
        }
    };
    rec(half ? 2 : 1, total);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Ascending jump list of u, zero-padding the half-integral case to reach
// ceil(|m|) + 2 nu parts.
std::vector<Rat> unipotent_jumps(const DistinguishedUnipotent& u, const Rat& m) {
    std::vector<long> parts = u.parts;
    while (!parts.empty() && parts.front() == 0) parts.erase(parts.begin());
    long n2 = 0;
    for (long p : parts) n2 += p;
    Rat nr = (Rat(n2) - m * m + (is_half_integer(m) ? rat(1, 4) : Rat(0))) / Rat(2);
    if (!is_integer(nr) || nr < Rat(1) ||
        !is_distinguished_unipotent({parts}, static_cast<long>(floor_int(nr)), m))
        throw std::domain_error("not a distinguished unipotent for slope " + to_string(m));

    long parity = ceil_long(rat_abs(m)) % 2;
    if (static_cast<long>(parts.size()) % 2 != parity) {
        if (!is_half_integer(m))
            throw invariant_error("integral-slope unipotent with wrong part parity");
        parts.insert(parts.begin(), 0);
    }
    std::vector<Rat> j;
    for (long p : parts) j.push_back(rat(p - 1, 2));
    return j;
}

Partition collect_partition(std::vector<Rat> entries) {
    Partition out;
    for (const Rat& e : entries) {
        if (!is_integer(e) || e < Rat(0))
            throw invariant_error("bipartition entry " + to_string(e) + " is not a nonnegative integer");
        long v = static_cast<long>(floor_int(e));
        if (v > 0) out.push_back(v);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace

WeightedDiagramB bala_carter(const DistinguishedUnipotent& u, const Rat& m) {
    return reconstruct_from_jumps(unipotent_jumps(u, m), m);
}

DistinguishedUnipotent bala_carter_inverse(const WeightedDiagramB& d, const Rat& m) {
    std::vector<long> parts;
    for (const Rat& j : jumps_of(d, m)) {
        Rat p = Rat(2) * j + Rat(1);
        long v = static_cast<long>(floor_int(p));
        if (v > 0) parts.push_back(v);
    }
    return {parts};
}

Bipartition phi_bipartition(const DistinguishedUnipotent& u, const Rat& m) {
    if (m < Rat(0)) {
        auto [xi, eta] = phi_bipartition(u, -m);
        return {eta, xi};
    }
    std::vector<Rat> j = unipotent_jumps(u, m);
    long len = static_cast<long>(j.size());
    long nu = (len - ceil_long(m)) / 2;
    auto jat = [&](long i) { return j[static_cast<std::size_t>(i - 1)]; };  // 1-based

    std::vector<Rat> xi, eta;
    if (is_integer(m)) {
        for (long i = 1; i <= 2 * nu - 1; i += 2) xi.push_back(jat(i));
        for (long t = 1; t <= static_cast<long>(floor_int(m)); ++t)
            xi.push_back(jat(2 * nu + t) - Rat(t - 1));
        for (long i = 2; i <= 2 * nu; i += 2) eta.push_back(jat(i) + Rat(1));
    } else {
        for (long i = 1; i <= 2 * nu + 1; i += 2) xi.push_back(jat(i) + rat(1, 2));
        long tail = static_cast<long>(floor_int(m));  // m - 1/2 entries
        for (long t = 1; t <= tail; ++t)
            xi.push_back(jat(2 * nu + 1 + t) - (Rat(t) - rat(1, 2)));
        for (long i = 2; i <= 2 * nu; i += 2) eta.push_back(jat(i) + rat(1, 2));
    }
    Bipartition out{collect_partition(xi), collect_partition(eta)};

    long sum = 0;
    for (long p : u.parts) sum += p;
    Rat expected_n = (Rat(sum) - m * m + (is_half_integer(m) ? rat(1, 4) : Rat(0))) / Rat(2);
    if (Rat(weight(out.first) + weight(out.second)) != expected_n)
        throw invariant_error("bipartition weight differs from the unipotent's rank");
    return out;
}

Int fiber_size(const DistinguishedUnipotent& u, const Rat& m) {
    std::vector<Rat> j = unipotent_jumps(u, m);
    long len = static_cast<long>(j.size());
    long nu = (len - ceil_long(rat_abs(m))) / 2;
    // a leading -1/2 jump is the zero pad of the half-integral case; a leading
    // 0 jump at integral slope comes from a genuine part equal to 1
    bool starts_zero = is_half_integer(m) && j.front() == rat(-1, 2);
    return binomial(starts_zero ? len - 1 : len, nu);
}

std::vector<Partition> fiber_partitions(const WeightedDiagramB& d, const Rat& m, long n) {
    check_slope(m);
    std::vector<Partition> out;
    for (const Partition& lam : partitions_of(n)) {
        if (is_m_singular(lam, m)) continue;
        std::vector<Rat> coords;
        for (long c : contents(lam)) coords.push_back(rat_abs(Rat(c) + m));
        if (diagram_from_coordinates(coords) == d) out.push_back(lam);
    }
    return out;
}

std::vector<std::pair<Partition, Partition>> dn_sharp_orbits(long n) {
    std::set<std::pair<Partition, Partition>> seen;
    for (const Partition& lam : partitions_of(n)) {
        if (is_m_singular(lam, Rat(0))) continue;
        Partition conj = conjugate(lam);
        if (conj == lam)
            throw invariant_error("0-regular partition " + to_string(lam) + " is self-conjugate");
        seen.insert({std::max(lam, conj), std::min(lam, conj)});
    }
    return {seen.begin(), seen.end()};
}

}  // namespace residua
