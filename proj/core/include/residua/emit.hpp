#pragma once

#include <residua/classify.hpp>
#include <residua/mfunction.hpp>
#include <residua/residual.hpp>
#include <residua/verify.hpp>

#include <optional>
#include <string>
#include <vector>

namespace residua {

// Renderings of the library's results as markdown tables or JSON documents.
// Output is deterministic: fixed column order, rows in input order, rationals
// as "p" / "p/q" strings, and every string ends with exactly one newline.

enum class EmitFormat { md, json };

EmitFormat parse_emit_format(std::string_view text);

// One row per family: label, then the value forms alpha_i(xi) at the simple
// roots.  JSON adds the ambient coordinate forms.
std::string emit_families(const RootSystem& rs, const std::vector<GenericFamily>& fams,
                          EmitFormat fmt);

// One row per family: label and the parameter forms cutting its singular
// locus.
std::string emit_regularity(const RootSystem& rs, const std::vector<GenericFamily>& fams,
                            EmitFormat fmt);

// Dominant orbit representatives of family evaluations at a regular kval.
std::string emit_evaluation(const RootSystem& rs, const QVec& kval,
                            const std::vector<std::pair<std::string, QVec>>& values,
                            EmitFormat fmt);

// Evaluation at kval grouped by orbit: dominant representative (as values at
// the simple roots) and the families it absorbs.
std::string emit_confluence(const RootSystem& rs, const QVec& kval,
                            const std::vector<ConfluenceRow>& rows, EmitFormat fmt);

// Type-B fiber listing at slope m: one row per weighted diagram with the
// partitions evaluating onto it.  Diagram coordinates are in |k1| units.
std::string emit_fibers(long n, const Rat& m,
                        const std::vector<std::pair<QVec, std::vector<std::string>>>& rows,
                        EmitFormat fmt);

std::string emit_graded_count(const RootSystem& rs, const QVec& kval, const GradedCount& count,
                              EmitFormat fmt);

std::string emit_gcc(const RootSystem& rs, const QVec& kval, const std::vector<GccRow>& rows,
                     EmitFormat fmt);

// One family's degree factor: shape, canonical factored text, optional
// evaluation.
struct MfunEntry {
    std::string label;
    ResidualShape shape;
    CanonicalForm canon;
    std::optional<MEvaluation> eval;
};

// fval and q describe the evaluation point; they are printed only when an
// entry carries an evaluation.
std::string emit_mfunctions(const RootSystem& rs, const std::vector<MfunEntry>& entries,
                            const QVec& fval, const Rat& q, EmitFormat fmt);

std::string emit_affine_count(const AffineDatum& datum, const QVec& fval,
                              const AffineCount& count, EmitFormat fmt);

std::string emit_spectral_diagram(const SpectralDiagram& diagram, EmitFormat fmt);

// "[PASS] name: detail" lines with a trailing suite summary (md), or the
// equivalent JSON document.
std::string emit_report(const SuiteReport& report, EmitFormat fmt);

}  // namespace residua
