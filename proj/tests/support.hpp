#pragma once

#include <random>
#include <vector>

#include "schubop/polynomial.hpp"
#include "schubop/weyl.hpp"

namespace schubop::testing {

inline Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_terms = 6, int max_degree = 4,
                                    bool dyadic_coefficients = true) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> expo(0, max_degree);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> shift(dyadic_coefficients ? -3 : 0, 2);
  PolynomialBuilder b(n);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (auto& v : e) {
      v = expo(rng);
    }
    b.add(Monomial(e), Dyadic(coeff(rng)).scaled(shift(rng)));
  }
  return b.build();
}

inline SignedPermutation random_element(std::mt19937_64& rng, GroupType t, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = i + 1;
  }
  std::shuffle(v.begin(), v.end(), rng);
  if (t != GroupType::A) {
    std::bernoulli_distribution flip(0.5);
    for (auto& x : v) {
      if (flip(rng)) {
        x = -x;
      }
    }
    if (t == GroupType::D && SignedPermutation(v).negatives() % 2 == 1) {
      v[0] = -v[0];
    }
  }
  return SignedPermutation(std::move(v));
}

inline Polynomial x(int i, int n) { return Polynomial::variable(i, n); }

}  // namespace schubop::testing

namespace schubop::testing {

/// Schur polynomial as the quotient of alternants det(x_i^{l_j + k - j}) / det(x_i^{k - j}).
inline Polynomial schur_bialternant(std::vector<int> lambda, int k) {
  lambda.resize(static_cast<std::size_t>(k), 0);
  auto alternant = [k](const std::vector<int>& e) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      perm[static_cast<std::size_t>(i)] = i;
    }
    PolynomialBuilder b(k);
    do {
      int inversions = 0;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
        }
      }
      std::vector<int> m(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        m[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = e[static_cast<std::size_t>(i)];
      }
      b.add(Monomial(m), Dyadic(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return b.build();
  };
  std::vector<int> top(static_cast<std::size_t>(k));
  std::vector<int> bottom(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    top[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)] + k - 1 - j;
    bottom[static_cast<std::size_t>(j)] = k - 1 - j;
  }
  return exact_divide(alternant(top), alternant(bottom));
}

/// Sum of f over all permutations of the variables.
inline Polynomial symmetrize(const Polynomial& f) {
  const int n = f.alphabet_size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = i + 1;
  }
  Polynomial out(n);
  do {
    out += act(f, SignedPermutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace schubop::testing
