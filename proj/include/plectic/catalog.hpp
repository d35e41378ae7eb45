#pragma once

#include <string>
#include <vector>

#include "plectic/plectic.hpp"

namespace plectic {

/// R^{2k} with omega = sum_i dx_i ^ dx_{k+i}; 1-plectic.
PlecticStructure make_symplectic(int k);

/// R^{n+1} with omega = dx_1 ^ ... ^ dx_{n+1}; n-plectic.
PlecticStructure make_volume(int n);

/// Chart of the n-th exterior power of T*R^k: coordinates x_1..x_k followed
/// by p_I for the n-subsets I of {1..k} in lexicographic order. With
/// theta = sum_I p_I dx_I, omega = -d theta. Throws InvalidInput unless
/// 1 <= n <= k.
PlecticStructure make_multiphase(int n, int k);
/// Chart index of p_I; I holds 0-based x indices.
int multiphase_momentum_index(int k, const MultiIndex& subset);

/// nu(e1, e2, e3) = B(e1, [e2, e3]) on su(2), with [e_i, e_j] = eps_ijk e_k
/// and B the Killing form tr(ad_a ad_b).
Rational cartan3_coefficient();
/// R^3 with omega = cartan3_coefficient() dx_1 ^ dx_2 ^ dx_3; 2-plectic.
PlecticStructure make_cartan3();

/// The three flat quaternionic Kahler forms on R^4.
std::vector<Form> hyperkahler_kahler_forms();
/// R^4 with omega = sum_i theta_i ^ theta_i; 3-plectic.
PlecticStructure make_hyperkahler_flat();

/// Looks up "symplectic:k", "volume:n", "multiphase:n:k", "cartan3" or
/// "hyperkahler". Throws InvalidInput for anything else.
PlecticStructure catalog_lookup(const std::string& key);

/// One key per constructor family with small parameters, in a fixed order.
std::vector<std::string> catalog_sample_keys();

}  // namespace plectic
