#pragma once

#include <span>
#include <vector>

#include "schubop/partition.hpp"
#include "schubop/polynomial.hpp"
#include "schubop/weyl.hpp"

namespace schubop {

/// Y_alpha over n variables, alpha zero-padded. Throws RangeError unless alpha fits in [n-1,...,0].
Polynomial schubert_Y(std::span<const int> alpha, int n);
/// Same polynomial for any alpha: computed over a larger alphabet and then restricted to n variables.
/// Throws RangeError if the result involves variables beyond x_n.
Polynomial schubert_Y_stable(std::span<const int> alpha, int n);
/// Y_alpha with the variables reversed.
Polynomial schubert_Y_omega(std::span<const int> alpha, int n);

/// Schur polynomial s_lambda(x_1..x_k), placed in an alphabet of n >= k variables.
Polynomial schur_S(const Partition& lambda, int k, int n);
inline Polynomial schur_S(const Partition& lambda, int k) { return schur_S(lambda, k, k); }

enum class PairingForm { A, D_v, D_full, B_nabla, B_full };

/// f g followed by the divided difference of the given form.
Polynomial pair(const Polynomial& f, const Polynomial& g, PairingForm form, int n);

/// x^rho P~_rho d_{w0 w}.
Polynomial schubert_X(const SignedPermutation& w, GroupType t, int n);

SignedPermutation v_of_I(const StrictPartition& I, int n, GroupType t);
/// v(I)^{-1} w0.
SignedPermutation w_of_I(const StrictPartition& I, int n, GroupType t);
/// The maximal Grassmannian element whose X polynomial is a multiple of P~_I.
SignedPermutation grassmannian_element(const StrictPartition& I, int n, GroupType t);

/// Value of X_id: (-1)^C(n,2) for D, (-1)^C(n+1,2) for B.
int identity_sign(GroupType t, int n);

/// X_w(n+1) with x_{n+1} = 0 equals X_w(n), both scaled so that X_id = 1.
bool stability_check(const SignedPermutation& w, GroupType t, int n);

/// x^rho with rho = [n-1, ..., 0].
Polynomial staircase_monomial(int n);

}  // namespace schubop
