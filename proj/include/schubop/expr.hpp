#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "schubop/polynomial.hpp"
#include "schubop/symfun.hpp"
#include "schubop/weyl.hpp"

namespace schubop {

/// Scalar: a bare number. Kernel: a polynomial over x_1..x_n, y_1..y_n.
enum class ValueKind { Scalar, Polynomial, Kernel, SymFun };

struct Value {
  ValueKind kind = ValueKind::Scalar;
  Polynomial poly;  // Scalar, Polynomial and Kernel
  SymFun sym;       // SymFun
};

struct ExprNode;

/// Parsed expression bound to an ambient rank n.
///
///   pipeline := sum ('|' op)*
///   sum      := term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := '-' factor | primary ('!' int)?
///   primary  := atom | '(' pipeline ')'
///
/// Atoms: Qt[I] Pt[I] Y[a] x^[a] s[l]@k SP[I] SQ[I] p[k] e[k] q[k] XB[w] XD[w] F@n:t K@n:t,
/// integers and dyadic literals m/2^k.
/// Operators: d i, d0, dh, d0c, dw "letters", nablaB(k), nablaD(k), dv, dmaxA, dmaxB, dmaxD, Us, Ue, Ve.
class Expression {
 public:
  /// Throws ParseError (with position) on syntax, type, arity or range problems.
  static Expression parse(std::string_view text, int n);

  int rank() const noexcept { return n_; }
  ValueKind kind() const;
  /// Degree cap used for symmetric-function subexpressions.
  int symfun_cap() const noexcept { return cap_; }
  Value evaluate() const;

 private:
  std::shared_ptr<const ExprNode> root_;
  int n_ = 1;
  int cap_ = 1;
};

enum class OutputFormat { Plain, Json, Latex };
OutputFormat parse_output_format(std::string_view text);

std::string render(const Value& v, OutputFormat format);

/// f = sum c_J P~_J written as "4*Qt[4,3,2]" (type B, Q~ basis) or "-Pt[6,2]" (type D).
/// Throws MembershipError unless the value is a symmetric polynomial over n variables.
std::string render_expansion(const Value& v, int n, GroupType t, OutputFormat format);

}  // namespace schubop
