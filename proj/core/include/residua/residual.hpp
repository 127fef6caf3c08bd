#pragma once

#include <residua/root_system.hpp>
#include <residua/weyl.hpp>

#include <string>
#include <vector>

namespace residua {

// A parameter-generic residual orbit: coordinates are forms in the
// deformation parameters; `singular` lists the (normalized, homogeneous)
// parameter hyperplanes where the evaluated point stops being residual.
struct GenericFamily {
    std::string label;
    std::vector<LinForm> coords;
    std::vector<LinForm> singular;
};

// Residual test at fixed parameter values: #| roots with alpha(x) = k_alpha |
// = #| roots with alpha(x) = 0 | + rank, counted over both signs.
bool is_linear_residual(const RootSystem& rs, const QVec& point, const QVec& kval);

// Same count required as an identity in the parameters.
bool is_generic_residual(const RootSystem& rs, const std::vector<LinForm>& point);

// All intersection points of rank-many independent root-equality hyperplanes
// { alpha(x) = k_alpha }, as parameter-dependent points, deduplicated exactly.
std::vector<std::vector<LinForm>> solve_residual_candidates(const RootSystem& rs);

// Candidates filtered by is_generic_residual and reduced to canonical orbit
// representatives, sorted.
std::vector<std::vector<LinForm>> enumerate_generic_points(const RootSystem& rs);

// Labeled families with singular loci attached.  B/C/D use the partition
// parametrization (D collapses conjugate pairs); A has its single orbit; F4
// and G2 are enumerated by solving and labeled against the built-in tables.
std::vector<GenericFamily> enumerate_families(const RootSystem& rs);

// Normalized homogeneous parameter forms whose zero sets make the family
// non-residual; candidates come from the vanishing of alpha(xi) and
// alpha(xi) -+ k_alpha.
std::vector<LinForm> regularity_hyperplanes(const RootSystem& rs, const std::vector<LinForm>& coords);

QVec evaluate_point(const std::vector<LinForm>& coords, const QVec& kval);

struct ConfluenceRow {
    QVec dominant;                     // ambient dominant representative
    QVec simple_values;                // alpha_i(dominant), the table form
    std::vector<std::string> labels;   // families evaluating into this orbit
};

// Groups the families' evaluations at kval by W-orbit.  Rows are sorted by
// descending lexicographic order of simple_values (largest diagram first);
// labels within a row keep family order.
std::vector<ConfluenceRow> confluence_table(const RootSystem& rs,
                                            const std::vector<GenericFamily>& families,
                                            const QVec& kval);

}  // namespace residua
