#pragma once

#include "omf/permgrp.hpp"
#include "omf/scalars.hpp"

namespace omf {

// map given by matrix A on the labeled basis (row i = image of label vector
// i in label coordinates) with frobenius twist k, expressed in ambient
// coordinates
Semilinear in_labels(const QuadraticSpace& sp, const Mat& A, int k);

// Omega^-(V) from Eichler transformations off the labeled standard basis.
// With gate = true the stabilizer-chain order must match the closed-form
// order (the gate enlarges the set deterministically and throws if it still
// falls short); gate = false skips the chain for large ambient spaces where
// the caller certifies through orbit counts instead.
GroupHandle omega_minus_gens(const QuadraticSpace& sp, bool gate = true);

// SU(V_sharp) from unitary transvections plus torus/swap/root elements,
// chain-gated against the closed-form order
GroupHandle su_gens(const HermitianSpace& hs);

// the same generators pushed through the restriction-of-scalars bridge
GroupHandle su_gens_blownup(const ScalarBridge& br, const HermitianSpace& hs);

// blow-down of the coordinatewise p-power map on the extension side
Semilinear frobenius_element(const ScalarBridge& br);

// graph-field style extension element for q = 4 spaces: frobenius twist with
// a correction supported on <d, d'>; fixes e_i, f_i, d and commutes with
// r_{e1+f1}; order divides 2f
Semilinear phi_like_element(const QuadraticSpace& sp);

enum class RhoVariant { plain, twisted };
// coset representative extending Omega(V)_{...} towards GammaO(V):
// q = 2 -> the reflection r_{e1+f1}; q = 4 -> the phi-like element (plain)
// or r_{e1+f1} composed with it (twisted)
Semilinear rho_element(const QuadraticSpace& sp, RhoVariant variant = RhoVariant::plain);

// fully deleted permutation module of S12 over GF(2): the 10-dimensional
// quotient of the even-weight subspace of GF(2)^12 by the all-ones vector,
// carrying Q(class of v) = wt(v)/2 mod 2
struct PermModule {
    QuadraticSpace space;
    // image of the permutation i -> perm[i] of {0..11} as a linear isometry
    Semilinear lift(const std::vector<int>& perm) const;
};
PermModule deleted_perm_module();

// A12 = <(0,1,2), (1,2,...,11)> lifted into the module; chain-gated
GroupHandle alternating12_gens(const PermModule& pm);
// M12 generators read from a static data file (rows of 12 one-based images);
// chain-gated against 95040
GroupHandle mathieu12_gens(const PermModule& pm, const std::string& data_path);
std::string default_m12_data_path();

}  // namespace omf
