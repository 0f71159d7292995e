#include <gtest/gtest.h>

#include <cstdlib>

#include "schubop/error.hpp"
#include "schubop/polynomial.hpp"
#include "support.hpp"

using namespace schubop;
using schubop::testing::random_element;
using schubop::testing::random_polynomial;
using schubop::testing::x;

TEST(Polyring, Arithmetic) {
  EXPECT_TRUE((x(1, 2) + (-x(1, 2))).is_zero());
  EXPECT_EQ((x(1, 2) + x(2, 2)) * (x(1, 2) - x(2, 2)), x(1, 2) * x(1, 2) - x(2, 2) * x(2, 2));
  const Polynomial half_x1 = x(1, 2) * Dyadic::pow2(-1);
  EXPECT_EQ(half_x1 * half_x1, Polynomial::monomial(std::vector{2, 0}, Dyadic::pow2(-2)));
  EXPECT_THROW(x(1, 2) + x(1, 3), AlphabetMismatch);
}

TEST(Polyring, Action) {
  const SignedPermutation s0({-1, 2});
  const SignedPermutation sh({-2, -1});
  EXPECT_EQ(act(x(1, 2), s0), -x(1, 2));
  EXPECT_EQ(act(x(1, 2), sh), -x(2, 2));
  EXPECT_EQ(act(x(2, 2), sh), -x(1, 2));
  EXPECT_EQ(act(x(1, 2) * x(2, 2), sh), x(1, 2) * x(2, 2));
  EXPECT_THROW(act(x(1, 3), sh), AlphabetMismatch);
}

TEST(Polyring, ActionIsAHomomorphismOfTheGroup) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    const auto f = random_polynomial(rng, n);
    const auto g = random_polynomial(rng, n);
    const auto u = random_element(rng, GroupType::B, n);
    const auto v = random_element(rng, GroupType::B, n);
    EXPECT_EQ(act(act(f, u), inverse(u)), f);
    EXPECT_EQ(act(f * g, u), act(f, u) * act(g, u));
    EXPECT_EQ(act(act(f, u), v), act(f, compose(u, v)));
  }
}

TEST(Polyring, ExactDivide) {
  const Polynomial a = x(1, 2) * x(1, 2) - x(2, 2) * x(2, 2);
  EXPECT_EQ(exact_divide(a, x(1, 2) - x(2, 2)), x(1, 2) + x(2, 2));
  EXPECT_THROW(exact_divide(x(1, 2), x(2, 2)), NonDivisible);
  const Polynomial f = x(1, 2) * x(1, 2) * x(2, 2) - x(1, 2) * x(2, 2) * x(2, 2);
  EXPECT_EQ(exact_divide(f, x(1, 2) - x(2, 2)), x(1, 2) * x(2, 2));
  EXPECT_THROW(exact_divide(x(1, 2), Polynomial(2)), NonDivisible);
  EXPECT_THROW(exact_divide(x(1, 2), x(1, 2) * Dyadic(3)), NonDivisible);
}

TEST(Polyring, ExactDivideRecoversFactor) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const auto f = random_polynomial(rng, n);
    auto g = random_polynomial(rng, n);
    if (g.is_zero()) {
      g = Polynomial::constant(Dyadic::pow2(-1), n);
    }
    EXPECT_EQ(exact_divide(f * g, g), f);
  }
}

TEST(Polyring, CanonicalOrderIsGrevlex) {
  const Polynomial f = parse_polynomial("x3^2 + x1*x3 + x2^2 + x1^2 + x1*x2 + x3", 3);
  std::vector<std::string> seen;
  for (const auto& t : f.terms()) {
    seen.push_back(Polynomial::monomial(t.monomial.exponents(3)).to_string());
  }
  EXPECT_EQ(seen, (std::vector<std::string>{"x1^2", "x1*x2", "x2^2", "x1*x3", "x3^2", "x3"}));
}

TEST(Polyring, TextRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const auto f = random_polynomial(rng, n);
    EXPECT_EQ(parse_polynomial(to_text(f), n), f) << to_text(f);
    EXPECT_EQ(from_json(to_json(f)), f) << to_json(f);
    EXPECT_EQ(to_text(parse_polynomial(to_text(f), n)), to_text(f));
  }
  EXPECT_EQ(to_text(Polynomial(3)), "0");
  EXPECT_EQ(to_text(parse_polynomial("1/2^1*x1 - 3*x2^2", 2)), "-3*x2^2 + 1/2^1*x1");
}

TEST(Polyring, DoubledAlphabetText) {
  const Polynomial f = parse_polynomial("x1*y2 - y1", 4, Alphabet::Doubled);
  EXPECT_EQ(f, x(1, 4) * x(4, 4) - x(3, 4));
  EXPECT_EQ(to_text(f, Alphabet::Doubled), "x1*y2 - y1");
}

TEST(Polyring, JsonShape) {
  const Polynomial f = parse_polynomial("3/2^2*x1^2 - x2", 2);
  EXPECT_EQ(to_json(f), R"({"n":2,"terms":[{"coeff":{"m":"3","e":-2},"exp":[2,0]},{"coeff":{"m":"-1","e":0},"exp":[0,1]}]})");
}

TEST(Polyring, ParseErrorsCarryPosition) {
  try {
    parse_polynomial("x1 + * x2", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_polynomial("x3", 2), ParseError);
  EXPECT_THROW(parse_polynomial("1/3*x1", 2), ParseError);
}

TEST(Polyring, Specialization) {
  const Polynomial f = x(1, 3) * x(3, 3) + x(2, 3);
  EXPECT_EQ(set_zero(f, 3), x(2, 3));
  EXPECT_EQ(restrict_alphabet(set_zero(f, 3), 2), x(2, 2));
  EXPECT_THROW(restrict_alphabet(f, 2), RangeError);
  EXPECT_EQ(embed(x(1, 2), 4, 2), x(3, 4));
}
