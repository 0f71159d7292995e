#include "schubop/symmetric.hpp"

#include <algorithm>
#include <functional>

#include "schubop/error.hpp"

namespace schubop {

namespace {

std::vector<int> sorted_desc(const Monomial& m, int n) {
  std::vector<int> e = m.exponents(n);
  std::sort(e.begin(), e.end(), std::greater<>());
  return e;
}

bool is_dominant(const Monomial& m, int n) {
  for (int i = 0; i + 1 < n; ++i) {
    if (m[i] < m[i + 1]) {
      return false;
    }
  }
  return true;
}

// Calls fn on every k-subset of {0..n-1} as a bitmask.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) {
    return;
  }
  if (k == 0) {
    fn(0u);
    return;
  }
  unsigned mask = (1u << k) - 1;
  const unsigned limit = 1u << n;
  while (mask < limit) {
    fn(mask);
    unsigned c = mask & -mask;
    unsigned r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace

Monomial dominant(const Monomial& m, int n) { return Monomial(sorted_desc(m, n)); }

bool is_symmetric(const Polynomial& f) {
  const int n = f.alphabet_size();
  for (const Term& t : f.terms()) {
    std::vector<int> e = t.monomial.exponents(n);
    // adjacent transpositions generate
    for (int i = 0; i + 1 < n; ++i) {
      if (e[static_cast<std::size_t>(i)] == e[static_cast<std::size_t>(i) + 1]) {
        continue;
      }
      std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i) + 1]);
      bool ok = f.coefficient(Monomial(e)) == t.coeff;
      std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i) + 1]);
      if (!ok) {
        return false;
      }
    }
  }
  return true;
}

SymPoly SymPoly::one(int n) {
  SymPoly s(n);
  s.coeffs_.emplace(Monomial(), Dyadic(1));
  return s;
}

SymPoly SymPoly::elementary(int k, int n) {
  if (k < 0 || k > n) {
    return SymPoly(n);
  }
  return one(n).times_elementary(k);
}

SymPoly SymPoly::from_polynomial(const Polynomial& f) {
  if (!is_symmetric(f)) {
    throw MembershipError("polynomial is not symmetric");
  }
  const int n = f.alphabet_size();
  SymPoly s(n);
  for (const Term& t : f.terms()) {
    if (is_dominant(t.monomial, n)) {
      s.coeffs_.emplace(t.monomial, t.coeff);
    }
  }
  return s;
}

Dyadic SymPoly::coefficient(const Monomial& dominant) const {
  auto it = coeffs_.find(dominant);
  return it == coeffs_.end() ? Dyadic() : it->second;
}

void SymPoly::add(const Monomial& m, const Dyadic& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      coeffs_.erase(it);
    }
  }
}

SymPoly SymPoly::times_box(int c, int k) const {
  SymPoly out(n_);
  if (k > n_ || k < 0) {
    return out;
  }
  if (k == 0) {
    return *this;
  }
  // candidate dominant targets
  absl::flat_hash_map<Monomial, bool> targets;
  for (const auto& [lam, coeff] : coeffs_) {
    for_each_subset(n_, k, [&](unsigned mask) {
      Monomial m = lam;
      for (int i = 0; i < n_; ++i) {
        if (mask & (1u << i)) {
          m.add(i, c);
        }
      }
      targets.try_emplace(dominant(m, n_), true);
    });
  }
  for (const auto& [mu, unused] : targets) {
    Dyadic total;
    for_each_subset(n_, k, [&](unsigned mask) {
      Monomial m = mu;
      for (int i = 0; i < n_; ++i) {
        if (mask & (1u << i)) {
          if (m[i] < c) {
            return;
          }
          m.add(i, -c);
        }
      }
      auto it = coeffs_.find(dominant(m, n_));
      if (it != coeffs_.end()) {
        total += it->second;
      }
    });
    if (!total.is_zero()) {
      out.coeffs_.emplace(mu, std::move(total));
    }
  }
  return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
  if (rhs.n_ != n_) {
    throw AlphabetMismatch("symmetric polynomials over different alphabets");
  }
  for (const auto& [m, c] : rhs.coeffs_) {
    add(m, c);
  }
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs) {
  if (rhs.n_ != n_) {
    throw AlphabetMismatch("symmetric polynomials over different alphabets");
  }
  for (const auto& [m, c] : rhs.coeffs_) {
    add(m, -c);
  }
  return *this;
}

SymPoly& SymPoly::operator*=(const Dyadic& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [m, v] : coeffs_) {
    v *= c;
  }
  return *this;
}

bool operator==(const SymPoly& a, const SymPoly& b) {
  return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

std::vector<Term> SymPoly::sorted_terms() const {
  std::vector<Term> out;
  out.reserve(coeffs_.size());
  for (const auto& [m, c] : coeffs_) {
    out.push_back({m, c});
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return grevlex_greater(a.monomial, b.monomial); });
  return out;
}

Polynomial SymPoly::expand() const {
  std::vector<Term> terms;
  for (const auto& [m, c] : coeffs_) {
    std::vector<int> e = m.exponents(n_);
    std::sort(e.begin(), e.end());
    do {
      terms.push_back({Monomial(e), c});
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return Polynomial::from_distinct_terms(n_, std::move(terms));
}

}  // namespace schubop
