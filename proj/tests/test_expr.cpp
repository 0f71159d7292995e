#include <gtest/gtest.h>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "schubop/expr.hpp"
#include "schubop/ptilde.hpp"
#include "schubop/schubert.hpp"
#include "support.hpp"

using namespace schubop;
using schubop::testing::x;

namespace {

Polynomial eval_poly(const std::string& text, int n) {
  Value v = Expression::parse(text, n).evaluate();
  EXPECT_NE(v.kind, ValueKind::SymFun);
  return v.poly;
}

std::string plain(const std::string& text, int n) {
  return render(Expression::parse(text, n).evaluate(), OutputFormat::Plain);
}

std::size_t error_position(const std::string& text, int n) {
  try {
    Expression::parse(text, n);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

}  // namespace

TEST(Expr, Atoms) {
  EXPECT_EQ(eval_poly("x^[1,0] | d1", 2), Polynomial::constant(1, 2));
  EXPECT_EQ(eval_poly("x^[1,0] | d 1", 2), Polynomial::constant(1, 2));
  EXPECT_EQ(eval_poly("Qt[2,1]", 3), qtilde(Partition({2, 1}), 3));
  EXPECT_EQ(eval_poly("Pt[2,1,0]", 3), ptilde(Partition({2, 1}), 3));
  EXPECT_EQ(eval_poly("Y[0,1]", 3), x(1, 3) + x(2, 3));
  EXPECT_EQ(eval_poly("s[2,1]@2", 3), embed(schur_S(Partition({2, 1}), 2), 3));
  EXPECT_EQ(eval_poly("XD[-1,-2]", 2), schubert_X(SignedPermutation(std::vector<int>{-1, -2}), GroupType::D, 2));
  EXPECT_EQ(eval_poly("XB[1]", 1), Polynomial::constant(-1, 1));
  EXPECT_EQ(eval_poly("3/2^2", 2), Polynomial::constant(Dyadic::pow2(-2) * Dyadic(3), 2));
  EXPECT_EQ(eval_poly("1/2*x^[2]", 2), x(1, 2) * x(1, 2) * Dyadic::pow2(-1));
  EXPECT_EQ(eval_poly("e[2]!2", 2), x(1, 2) * x(2, 2));
  EXPECT_EQ(eval_poly("SQ[1]!2", 2), (x(1, 2) + x(2, 2)) * Dyadic(2));
}

TEST(Expr, ArithmeticAndPrecedence) {
  EXPECT_EQ(eval_poly("x^[1] + x^[0,1] * 2", 2), x(1, 2) + x(2, 2) * Dyadic(2));
  EXPECT_EQ(eval_poly("-x^[1] - -x^[0,1]", 2), x(2, 2) - x(1, 2));
  EXPECT_EQ(eval_poly("(x^[2] + x^[1,1]) | d1", 2), x(1, 2) + x(2, 2));
  // the pipe binds looser than the sum
  EXPECT_EQ(eval_poly("x^[1] + x^[0,1] | d1", 2), Polynomial(2));
  EXPECT_EQ(eval_poly("x^[1] + (x^[0,1] | d1)", 2), x(1, 2) - Polynomial::constant(1, 2));
}

TEST(Expr, Operators) {
  const Polynomial f = eval_poly("Qt[3,2,1]*x^[2,1,0]", 3);
  EXPECT_EQ(eval_poly("Qt[3,2,1]*x^[2,1,0] | nablaB(2)", 3), nabla_B(f, 2, 3));
  EXPECT_EQ(eval_poly("Qt[3,2,1]*x^[2,1,0] | nablaD(1)", 3), nabla_D(f, 1, 3));
  EXPECT_EQ(eval_poly("Qt[3,2,1]*x^[2,1,0] | dv", 3), partial_v(f, 3));
  EXPECT_EQ(eval_poly("Qt[3,2,1]*x^[2,1,0] | dw \"0 1 h\"", 3),
            apply_word(f, GeneratorWord::parse("0 1 h", 3)));
  EXPECT_EQ(eval_poly("Qt[3,2,1]*x^[2,1,0] | d0 | dh | d0c | d2", 3),
            apply_word(f, GeneratorWord::parse("0 h 0c 2", 3)));
  EXPECT_EQ(eval_poly("x^[2,1,0] | dmaxA", 3), Polynomial::constant(1, 3));
  EXPECT_EQ(eval_poly("Pt[2,1]*x^[2,1,0] | dmaxD", 3),
            apply_element(ptilde(Partition({2, 1}), 3) * staircase_monomial(3), longest(GroupType::D, 3), GroupType::D));
  EXPECT_EQ(eval_poly("Pt[3,2,1]*x^[2,1,0] | dmaxB", 3),
            apply_element(ptilde(Partition({3, 2, 1}), 3) * staircase_monomial(3), longest(GroupType::B, 3),
                          GroupType::B));
}

TEST(Expr, SymmetricFunctions) {
  EXPECT_EQ(plain("p[1]*p[2] - 2", 3), "-2 + p[2,1]");
  EXPECT_EQ(plain("SP[2,1] | Ve", 3), plain("SP[2,1]", 3));
  EXPECT_EQ(plain("SP[2] | Ve", 3), "0");
  EXPECT_EQ(plain("1 | Us", 3), "1");
  // the degree cap follows the expression
  EXPECT_EQ(Expression::parse("SP[3,2,1]*e[4]", 3).symfun_cap(), 10);
  EXPECT_EQ(eval_poly("(SP[3,2,1]*e[4])!3", 3),
            realize(schur_PQ(StrictPartition(std::vector<int>{3, 2, 1}), 10, SchurKind::P), 3) * elementary(4, 3));
}

TEST(Expr, Kernels) {
  Value k = Expression::parse("F@2:D", 2).evaluate();
  EXPECT_EQ(k.kind, ValueKind::Kernel);
  EXPECT_EQ(k.poly, kernel_F(2, GroupType::D));
  EXPECT_EQ(render(k, OutputFormat::Plain), "1/2^1*x1 + 1/2^1*x2 + 1/2^1*y1 + 1/2^1*y2");
  // polynomials join the x block; operators act there too
  EXPECT_EQ(Expression::parse("x^[1,1]*K@2:D | dh", 2).evaluate().poly,
            apply_simple(in_x(x(1, 2) * x(2, 2)) * kernel_Ptilde(2, GroupType::D), Letter::heart()));
}

TEST(Expr, Expansion) {
  auto expand = [](const std::string& text, int n, GroupType t) {
    return render_expansion(Expression::parse(text, n).evaluate(), n, t, OutputFormat::Plain);
  };
  EXPECT_EQ(expand("Qt[5,4,3,2,1]*Y[2,5] | nablaB(2)", 7, GroupType::B), "4*Qt[4,3,2]");
  EXPECT_EQ(expand("Pt[6,5,4,3,2,1]*Y[1,1,1,2] | nablaD(2)", 7, GroupType::D), "-Pt[6,2]");
  EXPECT_EQ(expand("Pt[6,5,4,3,2,1]*Y[1,1,1,3] | nablaD(2)", 7, GroupType::D), "Pt[6,2,1]");
  EXPECT_EQ(expand("s[1]@2", 2, GroupType::D), "2*Pt[1]");
  EXPECT_EQ(expand("Pt[2,1]*x^[1,1,1] - 1/2*Pt[1]", 3, GroupType::D), "(x1*x2*x3)*Pt[2,1] - 1/2^1*Pt[1]");
  EXPECT_EQ(expand("0", 2, GroupType::B), "0");
  EXPECT_EQ(expand("x^[2]+x^[0,2]+3", 2, GroupType::B), "x1^2 + x2^2 + 3");
  EXPECT_THROW(expand("x^[1]", 2, GroupType::D), MembershipError);
  EXPECT_THROW(expand("F@2:D", 2, GroupType::D), MembershipError);
}

TEST(Expr, Errors) {
  EXPECT_EQ(error_position("Qt[2,1", 3), 6u);
  EXPECT_EQ(error_position("x^[1] | d3", 3), 8u);
  EXPECT_EQ(error_position("SP[2] + Qt[1]", 3), 6u);
  EXPECT_EQ(error_position("Qt[1,2]", 3), 0u);
  EXPECT_EQ(error_position("SP[1,1]", 3), 0u);
  EXPECT_EQ(error_position("x^[1,0,0,0]", 3), 0u);
  EXPECT_EQ(error_position("Qt[1] | Us", 3), 8u);
  EXPECT_EQ(error_position("SP[1] | d1", 3), 8u);
  EXPECT_EQ(error_position("x^[1] | nablaD(2)", 3), 8u);
  EXPECT_EQ(error_position("XD[-1,2]", 2), 0u);
  EXPECT_EQ(error_position("XB[1,2]", 3), 0u);
  EXPECT_EQ(error_position("F@3:D", 2), 0u);
  EXPECT_EQ(error_position("x^[1] # 2", 2), 6u);
  EXPECT_EQ(error_position("3/3", 2), 0u);
  EXPECT_EQ(error_position("s[1,1,1]@2", 3), 0u);
  EXPECT_EQ(error_position("SP[1]!4", 3), 5u);
  EXPECT_EQ(error_position("x^[1] |", 2), 7u);
  EXPECT_EQ(error_position("dw", 2), 0u);
  EXPECT_EQ(error_position("x^[1] | dw \"5\"", 2), 11u);
  EXPECT_EQ(error_position("x^[1] | nablaD(3)", 2), 8u);
  EXPECT_THROW(Expression::parse("Y[0,0,1]", 2).evaluate(), Error);
}

TEST(Expr, OutputIsDeterministic) {
  const std::string text = "Qt[3,1]*Y[0,2,1]*s[2]@3 + Pt[2]";
  const Value a = Expression::parse(text, 4).evaluate();
  const Value b = Expression::parse(text, 4).evaluate();
  for (OutputFormat f : {OutputFormat::Plain, OutputFormat::Json, OutputFormat::Latex}) {
    EXPECT_EQ(render(a, f), render(b, f));
  }
  EXPECT_EQ(from_json(render(a, OutputFormat::Json)), a.poly);
  EXPECT_EQ(parse_polynomial(render(a, OutputFormat::Plain), 4), a.poly);
  EXPECT_EQ(parse_output_format("latex"), OutputFormat::Latex);
  EXPECT_THROW(parse_output_format("xml"), RangeError);
}
