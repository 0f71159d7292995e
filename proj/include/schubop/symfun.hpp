#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "schubop/partition.hpp"
#include "schubop/polynomial.hpp"

namespace schubop {

/// Symmetric function in countably many variables, in the power-sum basis, truncated above a degree cap.
class SymFun {
 public:
  explicit SymFun(int cap = 8) : cap_(cap) {}

  static SymFun constant(const mpq_class& c, int cap);
  /// p_lambda.
  static SymFun power(const Partition& lambda, int cap);

  int cap() const noexcept { return cap_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::map<Partition, mpq_class>& coefficients() const noexcept { return coeffs_; }
  mpq_class coefficient(const Partition& lambda) const;
  /// Largest degree present, -1 for zero.
  int degree() const;

  SymFun& operator+=(const SymFun& rhs);
  SymFun& operator-=(const SymFun& rhs);
  SymFun& operator*=(const mpq_class& c);
  SymFun operator-() const;
  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  /// Product, dropping terms above the smaller cap.
  friend SymFun operator*(const SymFun& a, const SymFun& b);
  friend SymFun operator*(SymFun a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const SymFun& a, const SymFun& b) { return a.coeffs_ == b.coeffs_; }

  /// "3/2*p[2,1] - p[1]".
  std::string to_string() const;

 private:
  void add(const Partition& lambda, const mpq_class& c);
  int cap_;
  std::map<Partition, mpq_class> coeffs_;
};

enum class Generator { P, E, S, Q, PRow };

/// p_k, e_k, s_(k), q_k or P_k in degree k. Throws RangeError when k exceeds the cap.
SymFun generator(Generator kind, int k, int cap);

/// Hall scalar product, <p_l, p_m> = z_l delta.
mpq_class hall_pair(const SymFun& a, const SymFun& b);
/// z_lambda = prod_i i^{m_i} m_i!.
mpz_class z_lambda(const Partition& lambda);

/// g D_f, where D_f is the adjoint of multiplication by f.
SymFun foulkes_D(const SymFun& f, const SymFun& g);

enum class Vertex { Us, Ue, Ve };
/// f - (f D_{A_1}) B_1 + (f D_{A_2}) B_2 - ... for (A, B) = (P, s), (P, e), (e, P).
SymFun vertex(Vertex kind, const SymFun& f);

enum class SchurKind { P, Q };
/// Schur Q_I by the Pfaffian rule over q_k; P_I = 2^{-l(I)} Q_I.
SymFun schur_PQ(const StrictPartition& I, int cap, SchurKind kind);
/// Q~_I with e_k in place of q_k.
SymFun qtilde_symfun(const Partition& I, int cap);

/// p_k -> x_1^k + ... + x_n^k. Throws NonDyadic when a coefficient is not dyadic.
Polynomial realize(const SymFun& f, int n);

/// The rows d_q..d_{n-1}, ..., d_1..d_r of the rectangle, top row first, n = q + r.
GeneratorWord rectangle_word(int q, int r);
Polynomial rectangle_apply(const Polynomial& f, int q, int r);
/// Coefficient d of the rectangle formula; throws RangeError outside 0<q<n, 0<=k<=q, 0<=h<=r.
long long d_coefficient(int q, int r, int k, int h);

}  // namespace schubop
