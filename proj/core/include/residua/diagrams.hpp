#pragma once

#include <residua/numeric.hpp>
#include <residua/partitions.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace residua {

// Dominant evaluation of a two-parameter family on the line k2 = m k1, stored
// as multiplicities of its coordinate values in units of |k1|.
struct WeightedDiagramB {
    std::map<Rat, long> mu;  // value p -> multiplicity > 0

    long size() const;                     // number of coordinates
    long at(const Rat& p) const;           // multiplicity, 0 when absent
    std::vector<Rat> coordinates() const;  // descending, with repeats

    bool operator==(const WeightedDiagramB& o) const { return mu == o.mu; }
    bool operator<(const WeightedDiagramB& o) const { return mu < o.mu; }
};

// Counts the values of a coordinate list; entries must be >= 0.
WeightedDiagramB diagram_from_coordinates(const std::vector<Rat>& coords);

std::string to_string(const WeightedDiagramB& d);

// Multiplicity conditions selecting the diagrams that are residual at
// (k1, m k1) with k1 != 0.  The support must lie in (m + Z) intersected with
// the nonnegative half-line.
bool is_kweighted_dynkin(const WeightedDiagramB& d, const Rat& m);

// Strictly increasing jump list of a valid diagram: p >= |m| with
// mu_p = mu_{p+1} + 1, or 0 < p < |m| with mu_p = mu_{p+1}; padded in front
// with 0 (integral m) or -1/2 (strictly half-integral m) when needed so the
// length is ceil(|m|) + 2 nu.
std::vector<Rat> jumps_of(const WeightedDiagramB& d, const Rat& m);

// Inverse of jumps_of: multiplicities recovered top-down from the list.  The
// optional front pad carries no information and is accepted either way;
// anything else that is not the jump list of a diagram is rejected.
WeightedDiagramB reconstruct_from_jumps(const std::vector<Rat>& jumps, const Rat& m);

// Strictly increasing positive parts, odd for integral m (summing to
// 2n + m^2), even for strictly half-integral m (summing to 2n + m^2 - 1/4).
// The zero pad of the half-integral case is applied internally, never stored.
struct DistinguishedUnipotent {
    std::vector<long> parts;

    bool operator==(const DistinguishedUnipotent&) const = default;
    auto operator<=>(const DistinguishedUnipotent&) const = default;
};

std::string to_string(const DistinguishedUnipotent& u);

bool is_distinguished_unipotent(const DistinguishedUnipotent& u, long n, const Rat& m);

// All unipotents for (n, m) in ascending lexicographic order.
std::vector<DistinguishedUnipotent> enumerate_distinguished_unipotent(long n, const Rat& m);

// Unipotent <-> diagram correspondence through jump lists, j_i = (u_i - 1)/2.
// The diagram is expressed in |k1| units, so the sign of k1 never enters.
WeightedDiagramB bala_carter(const DistinguishedUnipotent& u, const Rat& m);
DistinguishedUnipotent bala_carter_inverse(const WeightedDiagramB& d, const Rat& m);

// Bipartition carved out of the jump list: for m >= 0 the odd positions give
// the first component and the even positions (shifted) the second, with the
// top ceil(m) jumps folded into a staircase; negative m swaps the components.
Bipartition phi_bipartition(const DistinguishedUnipotent& u, const Rat& m);

// Number of families evaluating onto bala_carter(u) at (k1, m k1):
// binom(ceil|m| + 2 nu, nu), one less in the top argument when the padded
// unipotent starts with a zero part.
Int fiber_size(const DistinguishedUnipotent& u, const Rat& m);

// All lambda |- n that stay residual at slope m and evaluate onto d.
std::vector<Partition> fiber_partitions(const WeightedDiagramB& d, const Rat& m, long n);

// 0-regular partitions of n grouped into conjugation pairs {lambda, lambda'};
// a 0-regular partition is never self-conjugate.
std::vector<std::pair<Partition, Partition>> dn_sharp_orbits(long n);

}  // namespace residua
