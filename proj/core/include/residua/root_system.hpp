#pragma once

#include <residua/linalg.hpp>
#include <residua/linform.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace residua {

enum class RSType { A, B, C, D, F4, G2 };

std::string type_letter(RSType t);

struct TypeRank {
    RSType type;
    int rank;
};

// "A3", "B2", ..., "F4", "G2"
TypeRank parse_type_label(std::string_view label);

// Reduced irreducible root system in a fixed Euclidean realization:
//   A_n in the sum-zero hyperplane of R^{n+1}; B/C/D_n in R^n;
//   F4 in R^4; G2 in the sum-zero hyperplane of R^3.
// Parameter classes (= W-orbits of roots, indexing the deformation
// parameters): one class "k" for A/D; for B/C the class of +-e_i+-e_j is k1
// and the other length is k2; for F4/G2, k1 on long and k2 on short roots.
struct RootSystem {
    RSType type = RSType::A;
    int rank = 0;  // Cartan rank
    int dim = 0;   // ambient dimension
    std::vector<std::string> param_names;

    std::vector<QVec> simple;    // ambient coordinates
    std::vector<QVec> positive;  // simples first, then by (height, lex)
    std::vector<int> pclass;     // parameter class per positive root

    std::vector<std::vector<long>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
    QMat root_coord_map;                    // (rank x dim): span(R) -> simple-root coords
    std::vector<QVec> complement_rows;      // Euclidean equations cutting out span(R)

    QVec highest_root;
    std::vector<long> marks;  // highest root in simple-root coordinates
    std::vector<QVec> fundamental_coweights;  // alpha_i(w_j) = delta_ij, in span(R)

    std::map<QVec, std::size_t> positive_index;

    bool two_params() const { return param_names.size() == 2; }
    std::string label() const {
        bool classical = type == RSType::A || type == RSType::B || type == RSType::C || type == RSType::D;
        return type_letter(type) + (classical ? std::to_string(rank) : "");
    }
    std::size_t nparams() const { return param_names.size(); }
    std::size_t npositive() const { return positive.size(); }

    // k_alpha as a form in the parameters (equal for alpha and -alpha).
    LinForm k_of(std::size_t pos_index) const {
        return LinForm::unit(nparams(), static_cast<std::size_t>(pclass.at(pos_index)));
    }

    // (positive index, +-1) when v is a root, nullopt otherwise.
    std::optional<std::pair<std::size_t, int>> find_root(const QVec& v) const;

    bool in_span(const QVec& ambient) const;
    QVec root_coords(const QVec& ambient) const;  // throws if outside span(R)
};

RootSystem make_root_system(RSType t, int rank);
inline RootSystem make_root_system(TypeRank tr) { return make_root_system(tr.type, tr.rank); }
inline RootSystem make_root_system(std::string_view label) { return make_root_system(parse_type_label(label)); }

// Euclidean pairing of a root (numeric) with a parameter-dependent point.
inline LinForm alpha_value(const QVec& root, const std::vector<LinForm>& xi) {
    if (root.size() != xi.size()) throw std::domain_error("alpha_value: dimension mismatch");
    LinForm r(xi.empty() ? 0 : xi[0].nparams());
    for (std::size_t i = 0; i < root.size(); ++i)
        if (root[i] != Rat(0)) r += xi[i] * root[i];
    return r;
}

}  // namespace residua
