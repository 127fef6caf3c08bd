#pragma once

#include <residua/residual.hpp>
#include <residua/root_system.hpp>

#include <string>
#include <utility>
#include <vector>

namespace residua {

// ---------------------------------------------------------------------------
// Graded level: discrete-series counts through generic central characters.
// ---------------------------------------------------------------------------

// Count at fixed parameter values, broken down by the generic families that
// stay regular there.  The multiplicity is the fiber size of the generic
// central character map over that family (2 over F4's rank-degenerate orbit,
// 1 everywhere else).
struct GradedCount {
    std::vector<std::pair<std::string, long>> families;  // label -> multiplicity
    long total = 0;
};

GradedCount count_graded_ds(const RootSystem& rs, const QVec& kval);

// Labeled families with singular loci, like enumerate_families, but trusting
// the built-in exceptional tables instead of re-running the generic solve.
std::vector<GenericFamily> known_families(const RootSystem& rs);

// Confluence restricted to the families regular at kval, each row weighted by
// the multiplicities of the families it absorbs.  The weights sum to
// count_graded_ds(rs, kval).total.
struct GccRow {
    QVec dominant;
    QVec simple_values;
    std::vector<std::pair<std::string, long>> families;
    long weight = 0;
};

std::vector<GccRow> gcc_table(const RootSystem& rs, const QVec& kval);

// Family count at a regular parameter sample vs. the brute-forced number of
// elliptic conjugacy classes of the Weyl group.  The two agree for the types
// whose parameter space carries every elliptic class (A, B/C, F4, G2); for
// D_n with self-conjugate partitions the family count falls short, so the
// comparison reports both sides instead of asserting.
struct EllipticComparison {
    long generic_count = 0;
    long elliptic_count = 0;
    bool equal = false;
};

EllipticComparison generic_total_vs_elliptic(const RootSystem& rs);

// ---------------------------------------------------------------------------
// Affine level: alcove vertices of the spectral diagram and the localized
// counts attached to them.
// ---------------------------------------------------------------------------

enum class LatticeTag { weight, root };

// Supported spectral data: B_n (n >= 2), C_n (n >= 2, both lattices), F4, G2;
// the root lattice is only distinguished for C_n, where it folds the diagram.
struct AffineDatum {
    RSType type = RSType::A;
    int rank = 0;
    LatticeTag lattice = LatticeTag::weight;
    std::vector<std::string> params;  // log-parameter names ("f0", "f1", ...)
    std::string label() const;
};

AffineDatum make_affine_datum(std::string_view r1, LatticeTag lattice);
LatticeTag parse_lattice_tag(std::string_view text);

// One irreducible factor of a vertex subsystem.  `k` holds one form per
// parameter class of the factor (long class first for B/F4/G2, short first
// for C), expressed in the datum's log-parameters.
struct AffineFactor {
    RSType type = RSType::A;
    int rank = 0;
    std::vector<LinForm> k;
    std::string label() const;
};

struct AlcoveVertex {
    std::string label;                  // "e0" .. "en"
    QVec point;                         // vertex of the fundamental alcove
    std::vector<AffineFactor> factors;  // type decomposition of the integral subsystem
    long orbit_size = 1;                // diagram-symmetry orbit it represents
    bool folded_middle = false;         // fixed vertex of the C_n fold, n even
};

// One vertex per diagram-symmetry orbit; e0 first, then by node index.
std::vector<AlcoveVertex> alcove_vertices(const AffineDatum& datum);

// The affine diagram of the spectral system with its parameter weights.
// Node 0 is the added affine node; node i >= 1 carries simple root i-1.
struct SpectralNode {
    int index = 0;
    QVec root;         // gradient of the node's affine root
    LinForm weight;    // parameter attached to the node
    std::vector<int> adjacent;
    int fold_image = 0;  // == index when the diagram symmetry is trivial
};

struct SpectralDiagram {
    AffineDatum datum;
    std::vector<SpectralNode> nodes;
};

SpectralDiagram spectral_diagram(const AffineDatum& datum);

// Per-vertex discrete-series breakdown at fixed log-parameter values.  Each
// vertex contributes the product of its factors' counts; the folded middle
// vertex of even root-lattice C_n contributes (d^2+3d)/2 where d is one
// leg's count (unordered pairs, diagonal twice).
struct VertexCount {
    std::string vertex;
    std::string subsystem;                           // "A1 x C2"
    std::vector<std::pair<std::string, QVec>> k_e;   // factor label -> values
    long count = 0;
};

struct AffineCount {
    std::vector<VertexCount> vertices;
    long total = 0;
};

AffineCount count_affine_ds(const AffineDatum& datum, const QVec& fval);

}  // namespace residua
