#pragma once

#include <residua/linform.hpp>
#include <residua/partitions.hpp>

#include <set>
#include <vector>

namespace residua {

// Content c(b) = column - row of each box, reading order (rows left to
// right, top to bottom).
std::vector<long> contents(const Partition& lam);

// The family attached to lam: coordinates c(b) k1 + k2 in reading order.
std::vector<LinForm> xi_from_partition(const Partition& lam);

// Extremity multiset at slope m (integer case: row ends with c+m >= 0 and
// column bottoms with c+m <= 0 each contribute |c+m|, so a box that is both
// contributes 0 twice; half-integer case: thresholds +-1/2).  Sorted.
std::vector<Rat> extremities(const Partition& lam, const Rat& m);

// Repeat in the extremity multiset <=> the evaluation at k2 = m k1, k1 != 0
// stops being residual.
bool is_m_singular(const Partition& lam, const Rat& m);

// All singular slopes; always within |m| <= n-1 and m in Z/2.
std::set<Rat> singular_ratios(const Partition& lam);

// Singular slopes in the long-root normalization, where the family lives at
// (k1, k2/2): every slope doubles.
std::set<Rat> cn_singular_ratios(const Partition& lam);

}  // namespace residua
