#include <gtest/gtest.h>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "support.hpp"

using namespace schubop;
using schubop::testing::random_polynomial;
using schubop::testing::x;

namespace {

GeneratorWord W(const std::string& s, int n) { return GeneratorWord::parse(s, n); }

std::vector<Letter> all_letters(int n) {
  std::vector<Letter> out{Letter::zero(), Letter::zero_c()};
  if (n >= 2) {
    out.push_back(Letter::heart());
  }
  for (int i = 1; i < n; ++i) {
    out.push_back(Letter::simple(i));
  }
  return out;
}

}  // namespace

TEST(DivDiff, SimpleExamples) {
  EXPECT_EQ(apply_simple(x(1, 2), Letter::simple(1)), Polynomial::constant(1, 2));
  EXPECT_EQ(apply_simple(x(1, 2), Letter::zero()), Polynomial::constant(-2, 2));
  EXPECT_EQ(apply_simple(x(1, 2), Letter::heart()), Polynomial::constant(-1, 2));
  EXPECT_EQ(apply_simple(x(1, 2), Letter::zero_c()), Polynomial::constant(1, 2));
  EXPECT_THROW(apply_simple(x(1, 2), Letter::simple(2)), RangeError);
}

TEST(DivDiff, ClosedFormMatchesDivision) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const auto f = random_polynomial(rng, n, 6, 6);
    for (const auto& l : all_letters(n)) {
      ASSERT_EQ(apply_simple(f, l), apply_simple_by_division(f, l)) << to_text(f) << " letter " << l.to_string();
    }
  }
}

TEST(DivDiff, Nilpotence) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const auto f = random_polynomial(rng, n, 6, 6);
    for (const auto& l : all_letters(n)) {
      EXPECT_TRUE(apply_simple(apply_simple(f, l), l).is_zero());
    }
  }
  EXPECT_TRUE(apply_word(x(1, 2) * x(1, 2), W("1 1", 2)).is_zero());
}

TEST(DivDiff, BraidRelationsAsOperators) {
  std::mt19937_64 rng(23);
  const std::vector<std::pair<std::string, std::string>> relations = {
      {"1 2 1", "2 1 2"}, {"2 3 2", "3 2 3"}, {"1 3", "3 1"},       {"0 1 0 1", "1 0 1 0"},
      {"0 2", "2 0"},     {"0 3", "3 0"},     {"h 1", "1 h"},       {"h 2 h", "2 h 2"},
      {"h 3", "3 h"},     {"0c 2", "2 0c"},   {"0c 1 0c 1", "1 0c 1 0c"}};
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_polynomial(rng, 4, 6, 5);
    for (const auto& [a, b] : relations) {
      EXPECT_EQ(apply_word(f, W(a, 4)), apply_word(f, W(b, 4))) << a << " vs " << b;
    }
  }
}

TEST(DivDiff, LeibnizRule) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const auto f = random_polynomial(rng, n);
    const auto g = random_polynomial(rng, n);
    for (int i = 1; i < n; ++i) {
      const Letter s = Letter::simple(i);
      const auto sg = act(g, generator(s, n));
      EXPECT_EQ(apply_simple(f * g, s), apply_simple(f, s) * sg + f * apply_simple(g, s));
    }
  }
}

TEST(DivDiff, HeartThroughTypeBWord) {
  const Polynomial f = x(1, 3) * x(1, 3) * x(2, 3);
  const auto sh = evaluate(W("0 1 0", 3));
  EXPECT_EQ(sh, generator(Letter::heart(), 3));
  const Polynomial by_word = exact_divide(f - act(f, sh), -(x(1, 3) + x(2, 3)));
  EXPECT_EQ(by_word, apply_simple(f, Letter::heart()));
  EXPECT_NE(evaluate(W("1 0 1", 3)), sh);
}

TEST(DivDiff, ElementExamples) {
  const Polynomial sym = x(1, 3) * x(2, 3) + x(1, 3) + x(2, 3);
  EXPECT_TRUE(apply_element(sym, generator(Letter::simple(1), 3), GroupType::A).is_zero());
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> rho;
    for (int i = n - 1; i >= 0; --i) {
      rho.push_back(i);
    }
    EXPECT_EQ(apply_element(Polynomial::monomial(rho), longest(GroupType::A, n), GroupType::A),
              Polynomial::constant(1, n));
  }
  const Polynomial f = x(1, 2) * (x(1, 2) + x(2, 2)) * Dyadic::pow2(-1);
  EXPECT_EQ(apply_element(f, longest(GroupType::D, 2), GroupType::D), Polynomial::constant(-1, 2));
  EXPECT_EQ(apply_word(f, W("h 1", 2)), Polynomial::constant(-1, 2));
  EXPECT_EQ(apply_word(f, W("1 h", 2)), Polynomial::constant(-1, 2));
}

TEST(DivDiff, WordsForNablaAndPartialV) {
  EXPECT_EQ(nabla_B_word(2, 4).to_string(), "0 1 2 3 0 1 2");
  EXPECT_EQ(nabla_D_word(2, 5).to_string(), "h 2 3 4 1 2 3 h 2 1");
  EXPECT_EQ(partial_v_word(2).to_string(), "h");
  EXPECT_EQ(partial_v_word(4).to_string(), "h 2 3 1 2 h");
  EXPECT_EQ(partial_v_word(5).to_string(), "h 2 3 4 1 2 3 h 2 1");
  for (int n = 2; n <= 7; ++n) {
    const auto v = partial_v_word(n);
    EXPECT_EQ(static_cast<int>(v.length()), n * (n - 1) / 2);
    EXPECT_TRUE(is_reduced(v, GroupType::D));
    EXPECT_EQ(evaluate(v), distinguished(GroupType::D, n, Distinguished::Upsilon));
  }
  EXPECT_THROW(nabla_D_word(3, 5), RangeError);
  EXPECT_THROW(nabla_B_word(5, 4), RangeError);
  EXPECT_TRUE(partial_v(Polynomial::constant(1, 3), 3).is_zero());
  EXPECT_EQ(partial_v((x(1, 2) + x(2, 2)) * Dyadic::pow2(-1), 2), Polynomial::constant(-1, 2));
}

TEST(DivDiff, Antisymmetrizers) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> rho;
    std::vector<int> odd;
    std::vector<int> even;
    for (int i = 0; i < n; ++i) {
      rho.push_back(n - 1 - i);
      odd.push_back(2 * i + 1);
      even.push_back(2 * i);
    }
    EXPECT_EQ(antisymmetrize(Polynomial::monomial(rho), GroupType::A, n), delta(GroupType::A, n));
    EXPECT_EQ(antisymmetrize(Polynomial::monomial(odd), GroupType::B, n) * Dyadic::pow2(-n),
              delta(GroupType::B, n));
    if (n >= 2) {
      EXPECT_EQ(antisymmetrize(Polynomial::monomial(even), GroupType::D, n) * Dyadic::pow2(-(n - 1)),
                delta(GroupType::D, n));
    }
  }
  const Polynomial e2 = x(1, 3) * x(2, 3) + x(1, 3) * x(3, 3) + x(2, 3) * x(3, 3);
  EXPECT_TRUE(antisymmetrize(e2, GroupType::A, 3).is_zero());
}

TEST(DivDiff, LiteralTypeBNormalizationIsOffByTwo) {
  // With the factor 2^-(n-1) the odd-exponent alternant is twice the product formula.
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> odd;
    for (int i = 0; i < n; ++i) {
      odd.push_back(2 * i + 1);
    }
    EXPECT_EQ(antisymmetrize(Polynomial::monomial(odd), GroupType::B, n) * Dyadic::pow2(-(n - 1)),
              delta(GroupType::B, n) * Dyadic(2));
  }
}

TEST(DivDiff, AntisymmetrizerFactorsThroughLongestOperator) {
  // Signs relative to the products over i > j.
  const int b_signs[] = {0, -1, 1, -1, 1};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(lemma1_sign(GroupType::B, n), b_signs[n]);
    if (n >= 2) {
      EXPECT_EQ(lemma1_sign(GroupType::D, n), 1);
    }
  }
  EXPECT_EQ(lemma1_sign(GroupType::A, 2), 1);
  EXPECT_TRUE(lemma1_check(GroupType::A, 2));
  EXPECT_TRUE(lemma1_check(GroupType::B, 2));
  EXPECT_TRUE(lemma1_check(GroupType::D, 2));
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(lemma1_check(GroupType::A, n)) << n;
    EXPECT_TRUE(lemma1_check(GroupType::B, n)) << n;
    if (n >= 2) {
      EXPECT_TRUE(lemma1_check(GroupType::D, n)) << n;
    }
  }
}

TEST(DivDiff, Displays) {
  const auto d = parse_display("0 1 2 3/. 0 1 2/. . 0 1", 4);
  EXPECT_EQ(d.to_string(), "0 1 2 3/. 0 1 2/. . 0 1");
  EXPECT_EQ(row_reading(d).to_string(), "0 1 2 3 0 1 2 0 1");
  EXPECT_EQ(column_reading(d).to_string(), "0 1 0 2 1 0 3 2 1");
  EXPECT_TRUE(congruent(row_reading(d), column_reading(d), GroupType::B));

  const auto left = parse_display("2/1 2", 3);
  const auto right = parse_display("1 2/. 1", 3);
  EXPECT_EQ(row_reading(left).to_string(), "2 1 2");
  EXPECT_EQ(row_reading(right).to_string(), "1 2 1");
  EXPECT_TRUE(congruent(row_reading(left), row_reading(right), GroupType::A));
  EXPECT_TRUE(congruent(row_reading(left), column_reading(left), GroupType::A));
  // The product s2 s1 s1 written beside that display is a different element.
  EXPECT_FALSE(same_element(W("2 1 1", 3), W("1 2 1", 3)));
  EXPECT_FALSE(congruent(W("2 1 1", 3), W("2", 3), GroupType::A));
  EXPECT_TRUE(same_element(W("2 1 1", 3), W("2", 3)));

  const auto rect = parse_display("3 4 5 6/2 3 4 5/1 2 3 4", 7);
  EXPECT_EQ(column_reading(rect).to_string(), "3 2 1 4 3 2 5 4 3 6 5 4");
  EXPECT_TRUE(congruent(row_reading(rect), column_reading(rect), GroupType::A));

  EXPECT_THROW(parse_display("1 . 2", 3), ParseError);
  EXPECT_THROW(parse_display("1//2", 3), ParseError);
}

TEST(DivDiff, Relation14) {
  // (a,b,c,d,k) = (1,3,2,4,1): rectangle rows b..d down to a..c, extra row on top or below.
  const int n = 5;
  EXPECT_TRUE(congruent(W("4 3 4 2 3 1 2", n), W("3 4 2 3 1 2 1", n), GroupType::A));
}
