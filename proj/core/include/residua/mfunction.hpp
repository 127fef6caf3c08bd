#pragma once

#include <residua/partitions.hpp>
#include <residua/residual.hpp>
#include <residua/root_system.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace residua {

// Multiplicative term  eps * q^expo + offset  with eps, offset in {-1,+1}.
// expo is a form in the log-parameters f_s of the deformation q_s = q^{f_s};
// the linear parameters enter as k = 2f.  For q > 1 the term vanishes iff
// eps == -offset and expo vanishes at the evaluation point.
struct MFactor {
    int eps = 1;
    LinForm expo;
    int offset = -1;

    friend bool operator==(const MFactor&, const MFactor&) = default;
};

bool factor_vanishes(const MFactor& t, const QVec& f);

// Signed roots sorted by which term of the degree formula degenerates
// identically on the family:
//   zero        alpha(xi) == 0, the numerator term drops out;
//   pole_minus  the order-one denominator term vanishes identically, so only
//               its positive, never-vanishing cofactor survives;
//   pole_plus   the mirror case; it needs a non-reduced system, so it stays
//               empty here but still enters the count identity.
// #pole_plus + #pole_minus - #zero == rank certifies that the family (with
// its sign twist) is generically residual; the builders throw
// invariant_error when the identity fails.
struct ResidualShape {
    std::vector<QVec> zero;
    std::vector<QVec> pole_minus;
    std::vector<QVec> pole_plus;
};

// signs: one entry in {-1,+1} per parameter class (the value of the twist on
// that root class); empty means all +1.
ResidualShape residual_shape(const RootSystem& rs, const std::vector<LinForm>& coords,
                             const std::vector<int>& signs = {});

// scalar * q^leading * prod(numerator) / prod(denominator), exact over the
// log-parameters.  Denominator terms for roots outside pole_minus hold the
// product of the two square-root cofactors, which is rational in q^{f_s}.
struct FactoredRational {
    std::size_t nparams = 0;
    Rat scalar{1};
    LinForm leading;
    std::vector<MFactor> numerator;
    std::vector<MFactor> denominator;
};

FactoredRational build_m_function(const RootSystem& rs, const std::vector<LinForm>& coords,
                                  const std::vector<int>& signs = {});

struct MEvaluation {
    long num_order = 0;
    long den_order = 0;
    int sign = 0;        // exact sign of the limit value
    bool exact = false;  // whether `value` holds the exact result
    Rat value{};         // exact value; 0 exactly when num_order > den_order
    double approx = 0;   // floating shadow, always filled
};

// Limit of the factored expression at f, cancelling matched vanishing
// factors exactly.  Requires q > 1.  Throws invariant_error if the
// denominator vanishes to higher order than the numerator, or if a vanishing
// denominator factor has no proportional numerator partner (the limit would
// then depend on the approach direction).
MEvaluation evaluate_m(const FactoredRational& M, const QVec& f, const Rat& q);

// (numerator, denominator) vanishing orders at f, counted on the factored
// expression as built, before any cancellation.
std::pair<long, long> vanishing_order(const FactoredRational& M, const QVec& f);

// Equal vanishing orders <=> the evaluation at k = 2f is still residual.
bool is_regular_via_m(const RootSystem& rs, const std::vector<LinForm>& coords, const QVec& f);

// q^expo + offset with expo sign-canonical and nonzero.
struct CanonicalFactor {
    LinForm expo;
    int offset = -1;

    friend bool operator==(const CanonicalFactor& a, const CanonicalFactor& b) {
        return a.offset == b.offset && a.expo == b.expo;
    }
    friend bool operator<(const CanonicalFactor& a, const CanonicalFactor& b) {
        if (!(a.expo == b.expo)) return a.expo < b.expo;
        return a.offset < b.offset;
    }
};

// Every factor rewritten as +-q^E (q^L + offset) with L sign-canonical;
// the signs and monomials fold into scalar/leading and the factor lists are
// sorted.  Two builds describe the same function iff the forms are equal.
struct CanonicalForm {
    std::size_t nparams = 0;
    Rat scalar{1};
    LinForm leading;
    std::vector<CanonicalFactor> numerator;
    std::vector<CanonicalFactor> denominator;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const FactoredRational& M);

// Log-parameter names matching the linear ones: k1, k2 -> f1, f2; k -> f.
std::vector<std::string> log_param_names(const RootSystem& rs);

// "1/2 * q^{-4*f1} * (q^{2*f1} - 1)^2 / (q^{4*f1} - 1)"
std::string to_string(const CanonicalForm& M, const std::vector<std::string>& names);

// Box contents of the type-B family behind M, read off the short-root
// numerator factors (q^{2i*f1 + 2*f2} - 1): a box of content i contributes
// that factor twice.  Throws invariant_error on odd factor counts.
std::map<long, long> short_root_contents(const CanonicalForm& M);

// The partition of n with the given content multiset, if it is unique.
std::optional<Partition> partition_from_contents(const std::map<long, long>& boxes, long n);

struct SeparationReport {
    bool distinct = false;   // canonical factor data pairwise distinct
    bool recovered = false;  // every partition recovered from its own factors
    std::string detail;
};

// Builds the degree factor of every type-B_n family and checks the family is
// readable off the normalized factorization alone.
SeparationReport separation_check(long n);

}  // namespace residua
