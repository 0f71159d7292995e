#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "schubop/dyadic.hpp"
#include "schubop/weyl.hpp"

namespace schubop {

inline constexpr int kMaxVariables = 16;
inline constexpr int kMaxExponent = 255;

/// Exponent vector over at most kMaxVariables variables. Index 0 is x_1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  int operator[](int i) const noexcept { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);
  void add(int i, int delta) { set(i, e_[static_cast<std::size_t>(i)] + delta); }

  int degree() const noexcept;
  /// Index one past the last nonzero exponent.
  int support_end() const noexcept;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const noexcept;

  std::vector<int> exponents(int n) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }

  template <typename H>
  friend H AbslHashValue(H h, const Monomial& m) {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    static_assert(sizeof(m.e_) == 2 * sizeof(std::uint64_t));
    __builtin_memcpy(&lo, m.e_.data(), 8);
    __builtin_memcpy(&hi, m.e_.data() + 8, 8);
    return H::combine(std::move(h), lo, hi);
  }

 private:
  std::array<std::uint8_t, kMaxVariables> e_{};
};

/// Graded reverse lexicographic comparison with x_1 > x_2 > ... : true when a > b.
bool grevlex_greater(const Monomial& a, const Monomial& b) noexcept;

struct Term {
  Monomial monomial;
  Dyadic coeff;
};

/// Sparse polynomial over Z[1/2] in a fixed alphabet of n variables.
///
/// Terms are kept sorted in decreasing grevlex order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(int alphabet_size = 1);

  static Polynomial constant(const Dyadic& c, int n);
  /// x_i, 1-based.
  static Polynomial variable(int i, int n);
  static Polynomial monomial(std::span<const int> exponents, const Dyadic& c = 1);
  /// Combines duplicates and drops zeros.
  static Polynomial from_terms(int n, std::vector<Term> terms);
  /// Terms must have pairwise distinct monomials and nonzero coefficients.
  static Polynomial from_distinct_terms(int n, std::vector<Term> terms);

  int alphabet_size() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }

  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  Dyadic coefficient(const Monomial& m) const;
  /// Largest index of a variable that occurs.
  int support_end() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Dyadic& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Dyadic& c) { return a *= c; }
  friend Polynomial operator*(const Dyadic& c, Polynomial a) { return a *= c; }

  /// Multiplies every monomial by m.
  Polynomial shifted(const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  friend class PolynomialBuilder;
  int n_;
  std::vector<Term> terms_;
};

/// Hash-based accumulator; the usual way to build large polynomials.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(int n, std::size_t reserve = 0);

  void add(const Monomial& m, const Dyadic& c);
  void add(const Polynomial& f);
  void add_scaled(const Polynomial& f, const Dyadic& c);

  int alphabet_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return map_.size(); }

  /// Sorts and validates against the SCHUBOP_MAX_TERMS guard.
  Polynomial build();

 private:
  int n_;
  absl::flat_hash_map<Monomial, Dyadic> map_;
};

/// Current SCHUBOP_MAX_TERMS limit (0 means unlimited).
std::size_t max_terms();

/// Image of one variable under a signed substitution: x_i -> sign * x_target.
/// sign 0 sends the variable to zero.
struct VariableImage {
  int target = 0;  // 0-based index into the new alphabet
  int sign = 1;
};

/// Applies x_i -> image[i] for every variable of f, landing in new_n variables.
Polynomial substitute(const Polynomial& f, std::span<const VariableImage> image, int new_n);

/// f^w, where w acts as a ring homomorphism with x_{|w(j)|} -> sgn(w(j)) x_j.
Polynomial act(const Polynomial& f, const SignedPermutation& w);
/// The same action restricted to the block of variables offset+1 .. offset+w.size().
Polynomial act_block(const Polynomial& f, const SignedPermutation& w, int offset);

/// Re-indexes f into new_n variables, x_i -> x_{i+offset}.
Polynomial embed(const Polynomial& f, int new_n, int offset = 0);
/// Sets x_i = 0 (1-based) keeping the alphabet size.
Polynomial set_zero(const Polynomial& f, int i);
/// Drops trailing variables; throws RangeError when one of them occurs.
Polynomial restrict_alphabet(const Polynomial& f, int new_n);

/// Quotient q with f = q g; throws NonDivisible otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Variable naming for text I/O. Doubled alphabets print x1..xm, y1..ym.
enum class Alphabet { Single, Doubled };

std::string to_text(const Polynomial& f, Alphabet a = Alphabet::Single);
Polynomial parse_polynomial(std::string_view text, int n, Alphabet a = Alphabet::Single);
std::string to_latex(const Polynomial& f, Alphabet a = Alphabet::Single);
std::string to_json(const Polynomial& f);
Polynomial from_json(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Dyadic& c);
std::ostream& operator<<(std::ostream& os, const SignedPermutation& w);

}  // namespace schubop
