#pragma once

#include <vector>

#include <absl/container/flat_hash_map.h>

#include "schubop/partition.hpp"
#include "schubop/polynomial.hpp"

namespace schubop {

/// Symmetric polynomial in n variables, stored by its coefficients on dominant
/// (weakly decreasing) monomials, i.e. in the monomial symmetric basis.
class SymPoly {
 public:
  explicit SymPoly(int n = 1) : n_(n) {}

  static SymPoly one(int n);
  /// e_k(x_1..x_n); zero for k > n.
  static SymPoly elementary(int k, int n);
  /// Throws MembershipError if f is not symmetric.
  static SymPoly from_polynomial(const Polynomial& f);

  int alphabet_size() const noexcept { return n_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Dyadic coefficient(const Monomial& dominant) const;

  /// Multiplies by m_{(c^k)} = sum of x_{i_1}^c...x_{i_k}^c; c = 1 gives e_k, c = 2 gives e_k(x^2).
  SymPoly times_box(int c, int k) const;
  SymPoly times_elementary(int k) const { return times_box(1, k); }

  SymPoly& operator+=(const SymPoly& rhs);
  SymPoly& operator-=(const SymPoly& rhs);
  SymPoly& operator*=(const Dyadic& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Dyadic& c) { return a *= c; }
  friend bool operator==(const SymPoly& a, const SymPoly& b);

  /// Dominant terms in decreasing grevlex order.
  std::vector<Term> sorted_terms() const;
  /// Full expansion over the orbit of each dominant monomial.
  Polynomial expand() const;

 private:
  void add(const Monomial& m, const Dyadic& c);
  int n_;
  absl::flat_hash_map<Monomial, Dyadic> coeffs_;
};

/// Sorts the first n exponents decreasingly.
Monomial dominant(const Monomial& m, int n);
bool is_symmetric(const Polynomial& f);

}  // namespace schubop
