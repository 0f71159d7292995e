#include <gtest/gtest.h>

#include <random>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "schubop/ptilde.hpp"
#include "support.hpp"

using namespace schubop;
using schubop::testing::x;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
StrictPartition SP(std::vector<int> v) { return StrictPartition(std::move(v)); }

bool invariant(const Polynomial& f, GroupType t, int n) {
  for (Letter g : generators(t, n)) {
    if (act(f, generator(g, n)) != f) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("[3,2,1]").to_string(), "(3,2,1)");
  EXPECT_EQ(Partition::parse("(6,5,4,3,2,1,0)").length(), 6);
  EXPECT_EQ(Partition::parse("()").to_string(), "()");
  EXPECT_THROW(Partition::parse("(1,2)"), ParseError);
  EXPECT_THROW(StrictPartition(std::vector<int>{2, 2}), RangeError);
  EXPECT_EQ(complement_in_staircase(SP({3, 1}), 4).to_string(), "(4,2)");
  EXPECT_EQ(strict_partitions_in_staircase(3).size(), 8u);
  EXPECT_EQ(partitions_in_box(5, 2, 5).size(), 3u);
  EXPECT_TRUE(P({2, 1}).contained_in(P({3, 1, 1})));
}

TEST(SymPoly, ElementaryMultiplicationMatchesPolynomialProduct) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial f = schubop::testing::symmetrize(schubop::testing::random_polynomial(rng, n, 3, 3));
      SymPoly s = SymPoly::from_polynomial(f);
      EXPECT_EQ(s.expand(), f);
      for (int k = 0; k <= n + 1; ++k) {
        EXPECT_EQ(s.times_elementary(k).expand(), f * elementary(k, n));
      }
      Polynomial squares(n);
      for (int k = 1; k <= n; ++k) {
        Polynomial ek2 = SymPoly::one(n).times_box(2, k).expand();
        EXPECT_EQ(s.times_box(2, k).expand(), f * ek2);
      }
    }
  }
  EXPECT_THROW(SymPoly::from_polynomial(x(1, 2)), MembershipError);
}

TEST(Qtilde, PairExamples) {
  EXPECT_EQ(qtilde_pair(1, 0, 3), elementary(1, 3));
  EXPECT_EQ(qtilde_pair(1, 1, 2), x(1, 2) * x(1, 2) + x(2, 2) * x(2, 2));
  EXPECT_THROW(qtilde_pair(1, 2, 3), RangeError);
  EXPECT_EQ(qtilde(P({3}), 4), elementary(3, 4));
  EXPECT_TRUE(qtilde(P({5}), 4).is_zero());
  EXPECT_EQ(ptilde(P({1}), 2), (x(1, 2) + x(2, 2)) * Dyadic::pow2(-1));
}

TEST(Qtilde, PfaffianAgreesWithRecursion) {
  for (int n = 1; n <= 5; ++n) {
    for (const StrictPartition& I : strict_partitions_in_staircase(n)) {
      EXPECT_EQ(qtilde(I, n, QtildeMethod::Recursion), qtilde(I, n, QtildeMethod::Pfaffian))
          << I.to_string() << " n=" << n;
    }
  }
  // non-strict indices as well
  EXPECT_EQ(qtilde(P({2, 2, 1}), 3), qtilde(P({2, 2, 1}), 3, QtildeMethod::Pfaffian));
}

TEST(Qtilde, TrailingZeroPartIsIgnored) {
  EXPECT_EQ(Partition::parse("(2,1,0)"), P({2, 1}));
  EXPECT_EQ(ptilde(Partition::parse("(3,2,1,0)"), 4), ptilde(P({3, 2, 1}), 4));
}

TEST(Qtilde, Factorization) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 4; ++n) {
    for (const StrictPartition& I : strict_partitions_in_staircase(n)) {
      std::uniform_int_distribution<int> pick(1, n);
      const int k = pick(rng);
      std::vector<int> parts = I.parts();
      parts.push_back(k);
      parts.push_back(k);
      std::sort(parts.begin(), parts.end(), std::greater<>());
      EXPECT_EQ(qtilde(P(parts), n), qtilde_pair(k, k, n) * qtilde(I, n)) << I.to_string() << " k=" << k;
    }
  }
}

TEST(Qtilde, Branching) {
  BranchResult b = branch(SP({1}), 2);
  ASSERT_EQ(b.terms.size(), 2u);
  EXPECT_TRUE(b.holds);
  EXPECT_TRUE(branch(SP({2, 1}), 2).holds);
  EXPECT_TRUE(branch(SP({3, 2, 1}), 3).holds);
  for (int m = 1; m <= 4; ++m) {
    for (const StrictPartition& I : strict_partitions_in_staircase(4)) {
      EXPECT_TRUE(branch(I, m).holds) << I.to_string() << " m=" << m;
    }
  }
}

TEST(Decompose, BasisElement) {
  auto c = ptilde_decompose(ptilde(SP({2, 1}), 3), 3, GroupType::D);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.begin()->first, SP({2, 1}));
  EXPECT_EQ(c.begin()->second, Polynomial::constant(1, 3));
  EXPECT_EQ(ptilde_expand(ptilde(SP({2, 1}), 3), 3, GroupType::D), c);
}

TEST(Decompose, SchurOfStaircase) {
  Polynomial s1 = x(1, 2) + x(2, 2);
  auto c = ptilde_decompose(s1, 2, GroupType::D);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.at(SP({1})), Polynomial::constant(2, 2));
  EXPECT_EQ(ptilde_recompose(c, 2), s1);
}

TEST(Decompose, ReconstructionAndBothMethodsAgree) {
  Polynomial f = elementary(1, 3) * elementary(2, 3);
  EXPECT_EQ(ptilde_recompose(ptilde_decompose(f, 3, GroupType::B), 3), f);
  std::mt19937_64 rng(3);
  for (GroupType t : {GroupType::B, GroupType::D}) {
    for (int n = 2; n <= 3; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        Polynomial f = schubop::testing::symmetrize(schubop::testing::random_polynomial(rng, n, 3, 4));
        auto by_pairing = ptilde_decompose(f, n, t);
        auto by_solving = ptilde_expand(f, n, t);
        EXPECT_EQ(by_pairing, by_solving);
        EXPECT_EQ(ptilde_recompose(by_pairing, n), f);
        for (const auto& [J, c] : by_pairing) {
          EXPECT_TRUE(invariant(c, t, n)) << J.to_string();
        }
      }
    }
  }
  EXPECT_THROW(ptilde_decompose(x(1, 2), 2, GroupType::D), MembershipError);
}

TEST(Kernel, SmallCases) {
  Polynomial p1 = ptilde(P({1}), 2);
  Polynomial expected = in_x(p1) + in_y(p1);
  EXPECT_EQ(kernel_F(2, GroupType::D), expected);
  EXPECT_EQ(kernel_Ptilde(2, GroupType::D), expected);
}

TEST(Kernel, DiagonalAndVanishing) {
  for (GroupType t : {GroupType::D, GroupType::B}) {
    for (int n = 2; n <= 3; ++n) {
      const int k = staircase_size(t, n);
      Polynomial K = kernel_Ptilde(n, t);
      Polynomial s = schubop::testing::schur_bialternant(staircase(k).parts(), n);
      for (const SignedPermutation& w : enumerate_group(t, n)) {
        // y -> x, x -> x^w
        std::vector<VariableImage> image(static_cast<std::size_t>(2 * n));
        for (int j = 1; j <= n; ++j) {
          const int v = w(j);
          image[static_cast<std::size_t>((v > 0 ? v : -v) - 1)] = {j - 1, v > 0 ? 1 : -1};
          image[static_cast<std::size_t>(n + j - 1)] = {j - 1, 1};
        }
        Polynomial value = substitute(K, image, n);
        if (w.negatives() == 0) {
          EXPECT_EQ(value, s) << w.to_string();
        } else {
          EXPECT_TRUE(value.is_zero()) << w.to_string();
        }
      }
    }
  }
}

TEST(Kernel, Congruences) {
  for (int n = 2; n <= 3; ++n) {
    Polynomial prod_x = Polynomial::constant(1, 2 * n);
    Polynomial prod_y = Polynomial::constant(1, 2 * n);
    for (int i = 1; i <= n; ++i) {
      prod_x *= x(i, 2 * n);
      prod_y *= x(n + i, 2 * n);
    }
    EXPECT_TRUE(congruent_mod_ideal(prod_x - prod_y, GroupType::D));
    EXPECT_FALSE(congruent_mod_ideal(prod_x - prod_y, GroupType::B));
    EXPECT_FALSE(congruent_mod_ideal(x(1, 2 * n) - x(n + 1, 2 * n), GroupType::D));
  }
  EXPECT_TRUE(congruent_mod_ideal(kernel_F(3, GroupType::D) - kernel_Ptilde(3, GroupType::D), GroupType::D));
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(congruent_mod_ideal(kernel_F(n, GroupType::B) - kernel_Ptilde(n, GroupType::B), GroupType::B));
  }
  EXPECT_TRUE(congruent_mod_ideal(kernel_F(4, GroupType::D) - kernel_Ptilde(4, GroupType::D), GroupType::D));
}
