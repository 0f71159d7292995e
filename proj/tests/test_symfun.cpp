#include <gtest/gtest.h>

#include <random>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "schubop/ptilde.hpp"
#include "schubop/schubert.hpp"
#include "schubop/symfun.hpp"
#include "support.hpp"

using namespace schubop;
using schubop::testing::x;

namespace {

constexpr int kCap = 8;

SymFun p(std::vector<int> parts, int cap = kCap) { return SymFun::power(Partition(std::move(parts)), cap); }

// (n-l)! times Schur P in n variables, by symmetrizing x^l prod_{i<=l, i<j} (x_i + x_j) / (x_i - x_j).
Polynomial scaled_schur_P_oracle(const std::vector<int>& lambda, int n) {
  const int l = static_cast<int>(lambda.size());
  if (l > n) {
    return Polynomial(n);
  }
  std::vector<int> e(lambda);
  e.resize(static_cast<std::size_t>(n), 0);
  Polynomial F = Polynomial::monomial(e);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      F *= i <= l ? x(i, n) + x(j, n) : x(i, n) - x(j, n);
    }
  }
  Polynomial alt(n);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = i + 1;
  }
  do {
    SignedPermutation w(v);
    alt += act(F, w) * Dyadic(length(w, GroupType::A) % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(v.begin(), v.end()));
  Polynomial vandermonde = Polynomial::constant(1, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      vandermonde *= x(i, n) - x(j, n);
    }
  }
  return exact_divide(alt, vandermonde);
}

Polynomial word_apply(const Polynomial& f, const std::string& w, int n) {
  return apply_word(f, GeneratorWord::parse(w, n));
}

std::string ascending(int from, int to) {
  std::string s;
  for (int i = from; i <= to; ++i) {
    s += (s.empty() ? "" : " ") + std::to_string(i);
  }
  return s;
}

std::vector<Partition> all_partitions_upto(int m) {
  std::vector<Partition> out;
  for (int d = 0; d <= m; ++d) {
    for (auto& lam : partitions_in_box(d, d, d)) {
      out.push_back(lam);
    }
  }
  return out;
}

std::vector<StrictPartition> strict_upto(int m) {
  std::vector<StrictPartition> out;
  for (const auto& lam : all_partitions_upto(m)) {
    if (lam.is_strict()) {
      out.emplace_back(lam);
    }
  }
  return out;
}

SymFun e_product(const Partition& lam) {
  SymFun f = SymFun::constant(1, kCap);
  for (int k : lam.parts()) {
    f = f * generator(Generator::E, k, kCap);
  }
  return f;
}

}  // namespace

TEST(SymFun, Generators) {
  EXPECT_EQ(generator(Generator::E, 1, kCap), p({1}));
  EXPECT_EQ(generator(Generator::E, 2, kCap), (p({1, 1}) - p({2})) * mpq_class(1, 2));
  EXPECT_EQ(generator(Generator::Q, 1, kCap), p({1}) * 2);
  EXPECT_EQ(generator(Generator::PRow, 1, kCap), p({1}));
  EXPECT_EQ(generator(Generator::PRow, 0, kCap), SymFun::constant(1, kCap));
  EXPECT_THROW(generator(Generator::E, 9, kCap), RangeError);
}

TEST(SymFun, HallPairingAndFoulkes) {
  EXPECT_EQ(hall_pair(p({1}), p({1})), 1);
  EXPECT_EQ(hall_pair(p({2}), p({2})), 2);
  EXPECT_EQ(hall_pair(p({2, 1, 1}), p({2, 1, 1})), 4);
  EXPECT_EQ(foulkes_D(p({1}), p({1, 1})), p({1}) * 2);
  // adjointness on a small basis
  auto basis = all_partitions_upto(5);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      for (const auto& c : basis) {
        if (a.size() + b.size() != c.size()) {
          continue;
        }
        SymFun f = p(a.parts());
        SymFun g = p(c.parts());
        SymFun h = p(b.parts());
        EXPECT_EQ(hall_pair(foulkes_D(f, g), h), hall_pair(g, f * h));
      }
    }
  }
  // Schur functions are orthonormal: s_(k) against e_k
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(hall_pair(generator(Generator::S, k, kCap), generator(Generator::S, k, kCap)), 1);
    EXPECT_EQ(hall_pair(generator(Generator::E, k, kCap), generator(Generator::E, k, kCap)), 1);
    EXPECT_EQ(hall_pair(generator(Generator::E, k, kCap), generator(Generator::S, k, kCap)), k == 1 ? 1 : 0);
  }
}

TEST(SymFun, Realize) {
  EXPECT_EQ(realize(p({1}), 2), x(1, 2) + x(2, 2));
  EXPECT_EQ(realize(generator(Generator::E, 2, kCap), 2), x(1, 2) * x(2, 2));
  EXPECT_TRUE(realize(generator(Generator::E, 3, kCap), 2).is_zero());
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= 6; ++k) {
      EXPECT_EQ(realize(generator(Generator::E, k, kCap), n), elementary(k, n));
      EXPECT_EQ(realize(generator(Generator::S, k, kCap), n), schur_S(Partition(std::vector<int>{k}), n));
    }
  }
  EXPECT_THROW(realize(p({1}) * mpq_class(1, 3), 2), NonDyadic);
}

TEST(SymFun, SchurPQ) {
  EXPECT_EQ(schur_PQ(StrictPartition(std::vector<int>{1}), kCap, SchurKind::Q), p({1}) * 2);
  EXPECT_EQ(schur_PQ(StrictPartition(std::vector<int>{1}), kCap, SchurKind::P), p({1}));
  Polynomial q21 = realize(schur_PQ(StrictPartition(std::vector<int>{2, 1}), kCap, SchurKind::Q), 2);
  EXPECT_EQ(q21, (x(1, 2) * x(1, 2) * x(2, 2) + x(1, 2) * x(2, 2) * x(2, 2)) * Dyadic(4));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& I : strict_upto(6)) {
      long long fact = 1;
      for (int i = 2; i <= n - I.length(); ++i) {
        fact *= i;
      }
      EXPECT_EQ(realize(schur_PQ(I, kCap, SchurKind::P), n) * Dyadic(fact), scaled_schur_P_oracle(I.parts(), n))
          << I.to_string() << " n=" << n;
    }
  }
}

TEST(SymFun, QtildeAgreesWithFinitePolynomials) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& I : strict_upto(6)) {
      EXPECT_EQ(realize(qtilde_symfun(I, kCap), n), qtilde(I, n));
    }
  }
}

TEST(Vertex, ConstantsAreFixed) {
  for (Vertex v : {Vertex::Us, Vertex::Ue, Vertex::Ve}) {
    EXPECT_EQ(vertex(v, SymFun::constant(1, kCap)), SymFun::constant(1, kCap));
  }
  EXPECT_TRUE(vertex(Vertex::Us, qtilde_symfun(Partition(std::vector<int>{1}), kCap)).is_zero());
  SymFun p21 = schur_PQ(StrictPartition(std::vector<int>{2, 1}), kCap, SchurKind::P);
  EXPECT_EQ(vertex(Vertex::Ve, p21), p21);
}

TEST(Vertex, ParityFilters) {
  for (const auto& I : strict_upto(6)) {
    SymFun qt = qtilde_symfun(I, kCap);
    SymFun pI = schur_PQ(I, kCap, SchurKind::P);
    const bool even = I.length() % 2 == 0;
    EXPECT_EQ(vertex(Vertex::Us, qt), even ? qt : SymFun(kCap)) << I.to_string();
    EXPECT_EQ(vertex(Vertex::Ve, pI), even ? pI : SymFun(kCap)) << I.to_string();
  }
}

TEST(Vertex, ComplementOfUsIsAnOperatorString) {
  for (int n = 2; n <= 4; ++n) {
    const std::string tail = ascending(1, n - 1);
    Polynomial xn = Polynomial::monomial([&] {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[0] = n;
      return e;
    }());
    for (const auto& lam : all_partitions_upto(6)) {
      SymFun f = e_product(lam);
      Polynomial lhs = realize(f - vertex(Vertex::Us, f), n);
      Polynomial rhs = word_apply(apply_simple(realize(f, n), Letter::zero_c()) * xn, tail, n);
      EXPECT_EQ(lhs, rhs) << lam.to_string() << " n=" << n;
    }
  }
}

TEST(Vertex, TypeCZeroOperatorAsFoulkesSeries) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lam : all_partitions_upto(6)) {
      SymFun f = e_product(lam);
      Polynomial expected = apply_simple(realize(f, n), Letter::zero_c());
      Polynomial series(n);
      for (int k = 1; k <= lam.size(); ++k) {
        Polynomial t = realize(foulkes_D(generator(Generator::PRow, k, kCap), f), n);
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[0] = k - 1;
        t = t.shifted(Monomial(e));
        series += k % 2 == 1 ? t : -t;
      }
      EXPECT_EQ(series, expected) << lam.to_string() << " n=" << n;
    }
  }
}

TEST(Vertex, PowerOfFirstVariableUnderAscendingString) {
  for (int n = 1; n <= 4; ++n) {
    for (int pw = 0; pw <= 8; ++pw) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[0] = pw;
      Polynomial lhs = word_apply(Polynomial::monomial(e), ascending(1, n - 1), n);
      const int k = pw - n + 1;
      Polynomial rhs = k < 0 ? Polynomial(n) : schur_S(Partition(std::vector<int>{k}), n);
      EXPECT_EQ(lhs, rhs) << "p=" << pw << " n=" << n;
    }
  }
}

TEST(Vertex, PowersOfFirstVariablePastZeroOperator) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    Polynomial f = schubop::testing::random_polynomial(rng, n, 4, 4);
    for (int m = 0; m <= 6; ++m) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[0] = m;
      Monomial xm(e);
      Polynomial lhs = apply_simple(f.shifted(xm), Letter::zero_c());
      Polynomial moved = apply_simple(f, Letter::zero_c()).shifted(xm);
      if (m % 2 == 0) {
        EXPECT_EQ(lhs, moved);
      } else {
        e[0] = m - 1;
        EXPECT_EQ(lhs, f.shifted(Monomial(e)) - moved);
      }
    }
  }
}

TEST(Vertex, FirstVariablePowerUnderTypeBString) {
  for (int n = 3; n <= 5; ++n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[0] = n;
    Polynomial xn = Polynomial::monomial(e);
    GeneratorWord w = GeneratorWord::parse("0 " + ascending(1, n - 1), n);
    for (const auto& I : strict_partitions_in_staircase(n)) {
      Polynomial q = qtilde(I, n);
      Polynomial lhs = apply_word(q * xn, w);
      EXPECT_EQ(lhs, (n + I.length()) % 2 == 1 ? q * Dyadic(-2) : Polynomial(n)) << I.to_string();
    }
  }
}

TEST(Vertex, RowFunctionFromProduct) {
  for (int n = 1; n <= 4; ++n) {
    Polynomial prod = Polynomial::constant(1, n);
    for (int i = 2; i <= n; ++i) {
      prod *= x(1, n) + x(i, n);
    }
    for (int k = 1; k <= 5; ++k) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[0] = k;
      Polynomial lhs = word_apply(prod.shifted(Monomial(e)), ascending(1, n - 1), n);
      EXPECT_EQ(lhs, realize(generator(Generator::PRow, k, kCap), n));
    }
  }
}

TEST(Rectangle, CoefficientExamples) {
  for (int n = 2; n <= 6; ++n) {
    for (int h = 0; h <= n - 1; ++h) {
      if ((n - 1 - h) % 2 == 0) {
        EXPECT_EQ(d_coefficient(1, n - 1, 0, h), (n - 1) % 2 == 0 ? 1 : -1);
      }
    }
  }
  EXPECT_EQ(d_coefficient(1, 2, 0, 1), 0);
  EXPECT_THROW(d_coefficient(0, 3, 0, 0), RangeError);
  EXPECT_EQ(rectangle_word(3, 4).to_string(), "3 4 5 6 2 3 4 5 1 2 3 4");
}

TEST(Rectangle, FactFromShiftedAlphabet) {
  for (int n = 2; n <= 4; ++n) {
    Polynomial prod = Polynomial::constant(1, n);
    for (int i = 2; i <= n; ++i) {
      prod *= x(1, n) + x(i, n);
    }
    for (const auto& I : strict_upto(6)) {
      Polynomial low = embed(realize(schur_PQ(I, kCap, SchurKind::P), n - 1), n, 1);
      Polynomial lhs = word_apply(low * prod, ascending(1, n - 1), n);
      Polynomial full = realize(schur_PQ(I, kCap, SchurKind::P), n);
      const bool odd = (n - I.length()) % 2 != 0;
      EXPECT_EQ(lhs, odd ? full * Dyadic(n % 2 == 1 ? 1 : -1) : Polynomial(n)) << I.to_string() << " n=" << n;
    }
  }
}

namespace {

// P of the concatenated sequence, through the Pfaffian rule on arbitrary sequences.
Polynomial concatenated_P(const std::vector<int>& seq, int n, int cap) {
  // sort with sign tracking; equal parts give zero
  std::vector<int> s = seq;
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j + 1 < s.size() - i; ++j) {
      if (s[j] < s[j + 1]) {
        std::swap(s[j], s[j + 1]);
        sign = -sign;
      } else if (s[j] == s[j + 1]) {
        return Polynomial(n);
      }
    }
  }
  return realize(schur_PQ(StrictPartition(s), cap, SchurKind::P), n) * Dyadic(sign);
}

}  // namespace

TEST(Rectangle, GeneralFormula) {
  int cases = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int q = 1; q < n; ++q) {
      const int r = n - q;
      Polynomial prod = Polynomial::constant(1, n);
      for (int i = 1; i <= q; ++i) {
        for (int j = q + 1; j <= n; ++j) {
          prod *= x(i, n) + x(j, n);
        }
      }
      for (const auto& I : strict_upto(4)) {
        for (const auto& J : strict_upto(4)) {
          const int k = I.length();
          const int h = J.length();
          if (k > q || h > r) {
            continue;
          }
          Polynomial lhs = embed(realize(schur_PQ(I, kCap, SchurKind::P), q), n, 0) *
                           embed(realize(schur_PQ(J, kCap, SchurKind::P), r), n, q) * prod;
          lhs = rectangle_apply(lhs, q, r);
          std::vector<int> seq = I.parts();
          seq.insert(seq.end(), J.parts().begin(), J.parts().end());
          Polynomial rhs = concatenated_P(seq, n, kCap) * Dyadic(d_coefficient(q, r, k, h));
          EXPECT_EQ(lhs, rhs) << "n=" << n << " q=" << q << " I=" << I.to_string() << " J=" << J.to_string();
          ++cases;
        }
      }
    }
  }
  EXPECT_GT(cases, 100);
}
