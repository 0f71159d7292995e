#pragma once

#include <map>
#include <vector>

#include "schubop/partition.hpp"
#include "schubop/polynomial.hpp"
#include "schubop/symmetric.hpp"
#include "schubop/weyl.hpp"

namespace schubop {

enum class QtildeMethod { Recursion, Pfaffian };

/// e_k(x_1..x_n) in the monomial basis of the polynomial ring.
Polynomial elementary(int k, int n);

/// Q~_{i,j} for i >= j >= 0. Throws RangeError if i < j.
Polynomial qtilde_pair(int i, int j, int n);

/// Q~_I(x_1..x_n) for any partition I. The recursion path is cached per (I, n).
Polynomial qtilde(const Partition& I, int n, QtildeMethod method = QtildeMethod::Recursion);
/// 2^{-l(I)} Q~_I.
Polynomial ptilde(const Partition& I, int n);
/// Cached symmetric forms.
SymPoly qtilde_sym(const Partition& I, int n);
SymPoly ptilde_sym(const Partition& I, int n);

struct BranchTerm {
  Partition J;
  int power = 0;  // exponent of x_m, |I| - |J|
};

struct BranchResult {
  bool holds = false;
  std::vector<BranchTerm> terms;
};

/// Checks Q~_I(x_1..x_m) = sum_J x_m^{|I|-|J|} Q~_J(x_1..x_{m-1}) over J contained in I with
/// at most one box removed per row.
BranchResult branch(const StrictPartition& I, int m);

/// f = sum c_J P~_J via the duality pairing; coefficients lie in the invariant ring of type t.
/// Throws MembershipError unless f is symmetric.
std::map<StrictPartition, Polynomial> ptilde_decompose(const Polynomial& f, int n, GroupType t);

/// Same decomposition by solving a linear system in the monomial symmetric basis.
/// Coefficients are combinations of e_k(x^2) (and e_n for type D).
std::map<StrictPartition, Polynomial> ptilde_expand(const Polynomial& f, int n, GroupType t);

/// sum c_J P~_J.
Polynomial ptilde_recompose(const std::map<StrictPartition, Polynomial>& c, int n);

/// Size of the staircase indexing the P~ basis: n-1 for D, n for B.
int staircase_size(GroupType t, int n);

/// Kernels over 2n variables x_1..x_n, y_1..y_n (y_i is variable n+i).
Polynomial kernel_F(int n, GroupType t);
Polynomial kernel_Ptilde(int n, GroupType t);

/// f(X) placed in the first or second half of a doubled alphabet.
Polynomial in_x(const Polynomial& f);
Polynomial in_y(const Polynomial& f);

/// f over 2n variables vanishes under y_i := x_i^w for every w in the group of type t.
bool congruent_mod_ideal(const Polynomial& f, GroupType t);

}  // namespace schubop
