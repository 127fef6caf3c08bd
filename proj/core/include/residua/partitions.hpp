#pragma once

#include <residua/numeric.hpp>

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace residua {

// Weakly decreasing positive parts; {} is the empty partition of 0.
using Partition = std::vector<long>;

inline long weight(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline long multiplicity(const Partition& p, long part) {
    return static_cast<long>(std::count(p.begin(), p.end(), part));
}

inline Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    q.resize(static_cast<std::size_t>(p[0]));
    for (long j = 0; j < p[0]; ++j)
        q[static_cast<std::size_t>(j)] =
            static_cast<long>(std::count_if(p.begin(), p.end(), [&](long x) { return x > j; }));
    return q;
}

// Reverse-lexicographic order, starting with (n) and ending with (1^n).
inline std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    auto rec = [&](auto&& self, long rem, long maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (long k = std::min(rem, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rem - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline long partition_count(long n) {
    if (n < 0) return 0;
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (long k = 1; k <= n; ++k)
        for (long m = k; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
    return p[static_cast<std::size_t>(n)];
}

inline std::string to_string(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

// "3,1" -> {3,1}; "" -> {}.  Parts must form a genuine partition.
inline Partition parse_partition(std::string_view text) {
    Partition p;
    if (text.empty()) return p;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty()) throw std::domain_error("bad partition: '" + std::string(text) + "'");
        long v = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') throw std::domain_error("bad partition: '" + std::string(text) + "'");
            v = v * 10 + (ch - '0');
        }
        p.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (!is_partition(p)) throw std::domain_error("not weakly decreasing: '" + std::string(text) + "'");
    return p;
}

using Bipartition = std::pair<Partition, Partition>;

inline std::string to_string(const Bipartition& b) {
    return to_string(b.first) + "|" + to_string(b.second);
}

inline Bipartition parse_bipartition(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw std::domain_error("bad bipartition (missing '|'): '" + std::string(text) + "'");
    return {parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
}

inline std::vector<Bipartition> bipartitions_of(long n) {
    std::vector<Bipartition> out;
    for (long a = n; a >= 0; --a)
        for (const auto& l : partitions_of(a))
            for (const auto& r : partitions_of(n - a)) out.emplace_back(l, r);
    return out;
}

}  // namespace residua
