#pragma once

#include <residua/root_system.hpp>

namespace residua {

// Weyl-group element as an integer matrix in simple-root coordinates,
// column j = image of alpha_j.
using IMat = std::vector<std::vector<long>>;

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
bool imat_is_identity(const IMat& m);

IMat simple_reflection_rc(const RootSystem& rs, int i);

// Full group via BFS on the given simple generators (all of them by default).
std::vector<IMat> generated_subgroup(const RootSystem& rs, const std::vector<int>& gens);
std::vector<IMat> weyl_elements(const RootSystem& rs);

// det(w - 1) != 0, i.e. no nonzero fixed vector.
bool is_elliptic(const IMat& m);

// Number of elliptic conjugacy classes, brute force over the whole group.
long elliptic_class_count(const RootSystem& rs);

// s_i acting on points of span(R) (numeric or parameter-dependent).
QVec reflect_point(const RootSystem& rs, int i, const QVec& v);
std::vector<LinForm> reflect_point(const RootSystem& rs, int i, const std::vector<LinForm>& xi);

// Simple-reflection word (applied left to right) taking v to the dominant
// chamber; returns the dominant point and the word.
std::pair<QVec, std::vector<int>> make_dominant(const RootSystem& rs, QVec v);

// Generic parameter sample used when a numeric shadow of a symbolic point is
// needed (orbit canonicalization).
QVec default_sample(const RootSystem& rs);

// First canonicalization stage: apply the word that makes the shadow at
// sample_k dominant.  Points of one orbit can land on several replays, all
// related by the shadow's stabilizer.
std::vector<LinForm> dominant_replay(const RootSystem& rs, std::vector<LinForm> xi,
                                     const QVec& sample_k);

// Lexicographically least point of W xi among those whose shadow at sample_k
// is dominant.  Two parameter-dependent points are W-conjugate iff their
// canonical forms (at the same sample) coincide.
std::vector<LinForm> canonical_orbit_point(const RootSystem& rs, std::vector<LinForm> xi,
                                           const QVec& sample_k);

}  // namespace residua
