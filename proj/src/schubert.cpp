#include "schubop/schubert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "schubop/ptilde.hpp"
#include "schubop/symmetric.hpp"

namespace schubop {

namespace {

struct YCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, std::vector<int>>, Polynomial> table;
};

YCache& y_cache() {
  static YCache cache;
  return cache;
}

std::vector<int> padded(std::span<const int> alpha, int n) {
  std::vector<int> a(alpha.begin(), alpha.end());
  while (static_cast<int>(a.size()) > n && a.back() == 0) {
    a.pop_back();
  }
  if (static_cast<int>(a.size()) > n) {
    throw RangeError("exponent vector longer than the alphabet");
  }
  for (int v : a) {
    if (v < 0) {
      throw RangeError("negative entry in exponent vector");
    }
  }
  a.resize(static_cast<std::size_t>(n), 0);
  return a;
}

bool fits_staircase(const std::vector<int>& a, int n) {
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    if (a[static_cast<std::size_t>(i)] > n - 1 - i) {
      return false;
    }
  }
  return true;
}

Polynomial compute_Y(const std::vector<int>& a, int n) {
  const SignedPermutation u = code_inverse(a, n);
  const SignedPermutation w = compose(longest(GroupType::A, n), u);
  return apply_element(staircase_monomial(n), w, GroupType::A);
}

}  // namespace

Polynomial staircase_monomial(int n) {
  std::vector<int> rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rho[static_cast<std::size_t>(i)] = n - 1 - i;
  }
  return Polynomial::monomial(rho);
}

Polynomial schubert_Y(std::span<const int> alpha, int n) {
  std::vector<int> a = padded(alpha, n);
  if (!fits_staircase(a, n)) {
    throw RangeError("exponent vector is not contained in the staircase");
  }
  YCache& cache = y_cache();
  auto key = std::make_pair(n, a);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) {
      return it->second;
    }
  }
  Polynomial y = compute_Y(a, n);
  std::unique_lock lock(cache.mutex);
  return cache.table.try_emplace(std::move(key), std::move(y)).first->second;
}

Polynomial schubert_Y_stable(std::span<const int> alpha, int n) {
  std::vector<int> a(alpha.begin(), alpha.end());
  while (!a.empty() && a.back() == 0) {
    a.pop_back();
  }
  int N = std::max(n, static_cast<int>(a.size()));
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    N = std::max(N, a[static_cast<std::size_t>(i)] + i + 1);
  }
  if (N == n) {
    return schubert_Y(a, n);
  }
  if (N > kMaxVariables) {
    throw RangeError("exponent vector needs more than " + std::to_string(kMaxVariables) + " variables");
  }
  return restrict_alphabet(schubert_Y(a, N), n);
}

Polynomial schubert_Y_omega(std::span<const int> alpha, int n) {
  return act(schubert_Y(alpha, n), longest(GroupType::A, n));
}

Polynomial schur_S(const Partition& lambda, int k, int n) {
  if (lambda.length() > k) {
    throw RangeError("partition " + lambda.to_string() + " has more than " + std::to_string(k) + " parts");
  }
  if (k > n) {
    throw RangeError("Schur polynomial needs k <= n");
  }
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    e[static_cast<std::size_t>(i)] = (i < lambda.length() ? lambda[i] : 0) + k - 1 - i;
  }
  Polynomial s = apply_element(Polynomial::monomial(e), longest(GroupType::A, k), GroupType::A);
  return k == n ? s : embed(s, n);
}

Polynomial pair(const Polynomial& f, const Polynomial& g, PairingForm form, int n) {
  if (f.alphabet_size() != n || g.alphabet_size() != n) {
    throw AlphabetMismatch("pairing over " + std::to_string(n) + " variables");
  }
  if ((form == PairingForm::D_v || form == PairingForm::B_nabla) && (!is_symmetric(f) || !is_symmetric(g))) {
    throw MembershipError("this pairing is defined on symmetric polynomials");
  }
  const Polynomial fg = f * g;
  switch (form) {
    case PairingForm::A:
      return apply_element(fg, longest(GroupType::A, n), GroupType::A);
    case PairingForm::D_v:
      return partial_v(fg, n);
    case PairingForm::D_full:
      return apply_element(fg, longest(GroupType::D, n), GroupType::D);
    case PairingForm::B_nabla:
      return nabla_B(fg, n, n);
    case PairingForm::B_full:
      return apply_element(fg, longest(GroupType::B, n), GroupType::B);
  }
  throw RangeError("unknown pairing");
}

Polynomial schubert_X(const SignedPermutation& w, GroupType t, int n) {
  if (t == GroupType::A) {
    throw RangeError("orthogonal Schubert polynomials are defined for types B and D");
  }
  if (w.size() != n) {
    throw AlphabetMismatch("element of rank " + std::to_string(w.size()) + " for n = " + std::to_string(n));
  }
  w.require(t);
  const int k = staircase_size(t, n);
  Polynomial top = staircase_monomial(n) * ptilde(staircase(k), n);
  return apply_element(top, compose(longest(t, n), w), t);
}

namespace {

void check_in_staircase(const StrictPartition& I, int k) {
  if (I.largest() > k) {
    throw RangeError(I.to_string() + " is not contained in rho(" + std::to_string(k) + ")");
  }
}

}  // namespace

SignedPermutation v_of_I(const StrictPartition& I, int n, GroupType t) {
  const int k = staircase_size(t, n);
  check_in_staircase(I, k);
  const int shift = t == GroupType::D ? 1 : 0;
  std::vector<int> v;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int p : I.parts()) {
    v.push_back(p + shift);
    used[static_cast<std::size_t>(p + shift)] = true;
  }
  if (t == GroupType::D && (n - I.length()) % 2 == 1) {
    v.push_back(1);
    used[1] = true;
  }
  for (int j = 1; j <= n; ++j) {
    if (!used[static_cast<std::size_t>(j)]) {
      v.push_back(-j);
    }
  }
  return SignedPermutation(std::move(v));
}

SignedPermutation w_of_I(const StrictPartition& I, int n, GroupType t) {
  return compose(inverse(v_of_I(I, n, t)), longest(t, n));
}

SignedPermutation grassmannian_element(const StrictPartition& I, int n, GroupType t) {
  const int k = staircase_size(t, n);
  check_in_staircase(I, k);
  const int shift = t == GroupType::D ? 1 : 0;
  std::vector<int> v;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int p : I.parts()) {
    v.push_back(-(p + shift));
    used[static_cast<std::size_t>(p + shift)] = true;
  }
  if (t == GroupType::D && I.length() % 2 == 1) {
    v.push_back(-1);
    used[1] = true;
  }
  for (int j = 1; j <= n; ++j) {
    if (!used[static_cast<std::size_t>(j)]) {
      v.push_back(j);
    }
  }
  return SignedPermutation(std::move(v));
}

int identity_sign(GroupType t, int n) {
  return t == GroupType::D ? sign_power(binomial(n, 2)) : sign_power(binomial(n + 1, 2));
}

bool stability_check(const SignedPermutation& w, GroupType t, int n) {
  Polynomial big = schubert_X(w.embedded(n + 1), t, n + 1) * Dyadic(identity_sign(t, n + 1));
  Polynomial small = schubert_X(w, t, n) * Dyadic(identity_sign(t, n));
  return restrict_alphabet(set_zero(big, n + 1), n) == small;
}

}  // namespace schubop
