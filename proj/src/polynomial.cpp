#include "schubop/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

#include "schubop/error.hpp"

namespace schubop {
namespace {

void check_alphabet(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw RangeError("alphabet size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVariables));
  }
}

void same_alphabet(const Polynomial& a, const Polynomial& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw AlphabetMismatch("alphabets of size " + std::to_string(a.alphabet_size()) + " and " +
                           std::to_string(b.alphabet_size()));
  }
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grevlex_greater(a, b); }
};

std::size_t read_max_terms() {
  const char* env = std::getenv("SCHUBOP_MAX_TERMS");
  if (env == nullptr || *env == '\0') {
    return 0;
  }
  std::size_t value = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    return 0;
  }
  return value;
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw RangeError("too many variables in exponent vector");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    set(static_cast<int>(i), exponents[i]);
  }
}

void Monomial::set(int i, int value) {
  if (value < 0 || value > kMaxExponent) {
    throw RangeError("exponent " + std::to_string(value) + " out of range");
  }
  e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value);
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (auto v : e_) {
    d += v;
  }
  return d;
}

int Monomial::support_end() const noexcept {
  for (int i = kMaxVariables; i > 0; --i) {
    if (e_[static_cast<std::size_t>(i - 1)] != 0) {
      return i;
    }
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    const int v = e_[i] + other.e_[i];
    if (v > kMaxExponent) {
      throw RangeError("exponent overflow in monomial product");
    }
    r.e_[i] = static_cast<std::uint8_t>(v);
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] = static_cast<std::uint8_t>(other.e_[i] - e_[i]);
  }
  return r;
}

std::vector<int> Monomial::exponents(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = (*this)[i];
  }
  return out;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) noexcept {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) {
    return da > db;
  }
  for (int i = kMaxVariables - 1; i >= 0; --i) {
    if (a[i] != b[i]) {
      return a[i] < b[i];
    }
  }
  return false;
}

std::size_t max_terms() {
  static const std::size_t limit = read_max_terms();
  return limit;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(int alphabet_size) : n_(alphabet_size) { check_alphabet(n_); }

Polynomial Polynomial::constant(const Dyadic& c, int n) {
  Polynomial p(n);
  if (!c.is_zero()) {
    p.terms_.push_back({Monomial{}, c});
  }
  return p;
}

Polynomial Polynomial::variable(int i, int n) {
  if (i < 1 || i > n) {
    throw RangeError("variable x" + std::to_string(i) + " outside alphabet of size " + std::to_string(n));
  }
  Polynomial p(n);
  Monomial m;
  m.set(i - 1, 1);
  p.terms_.push_back({m, Dyadic(1)});
  return p;
}

Polynomial Polynomial::monomial(std::span<const int> exponents, const Dyadic& c) {
  Polynomial p(static_cast<int>(exponents.size()));
  if (!c.is_zero()) {
    p.terms_.push_back({Monomial(exponents), c});
  }
  return p;
}

Polynomial Polynomial::from_terms(int n, std::vector<Term> terms) {
  PolynomialBuilder b(n, terms.size());
  for (auto& t : terms) {
    b.add(t.monomial, t.coeff);
  }
  return b.build();
}

Polynomial Polynomial::from_distinct_terms(int n, std::vector<Term> terms) {
  const std::size_t limit = max_terms();
  if (limit != 0 && terms.size() > limit) {
    throw ResourceLimit("polynomial with " + std::to_string(terms.size()) + " terms exceeds SCHUBOP_MAX_TERMS=" +
                        std::to_string(limit));
  }
  Polynomial p(n);
  p.terms_ = std::move(terms);
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_greater(a.monomial, b.monomial); });
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) {
    d = std::max(d, t.monomial.degree());
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.back().monomial.degree() == terms_.front().monomial.degree();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.degree() == 0);
}

Dyadic Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grevlex_greater(t.monomial, key); });
  if (it != terms_.end() && it->monomial == m) {
    return it->coeff;
  }
  return Dyadic(0);
}

int Polynomial::support_end() const noexcept {
  int s = 0;
  for (const auto& t : terms_) {
    s = std::max(s, t.monomial.support_end());
  }
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) {
    t.coeff = -t.coeff;
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  same_alphabet(*this, rhs);
  if (rhs.terms_.empty()) {
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (a->monomial == b->monomial) {
      Dyadic c = std::move(a->coeff);
      c += b->coeff;
      if (!c.is_zero()) {
        out.push_back({a->monomial, std::move(c)});
      }
      ++a;
      ++b;
    } else if (grevlex_greater(a->monomial, b->monomial)) {
      out.push_back(std::move(*a++));
    } else {
      out.push_back(*b++);
    }
  }
  std::move(a, terms_.end(), std::back_inserter(out));
  std::copy(b, rhs.terms_.end(), std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Dyadic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  same_alphabet(a, b);
  if (a.is_zero() || b.is_zero()) {
    return Polynomial(a.n_);
  }
  if (a.size() == 1) {
    return b.shifted(a.leading().monomial) * a.leading().coeff;
  }
  if (b.size() == 1) {
    return a.shifted(b.leading().monomial) * b.leading().coeff;
  }
  PolynomialBuilder builder(a.n_, a.size() + b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      builder.add(s.monomial * t.monomial, s.coeff * t.coeff);
    }
  }
  return builder.build();
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  if (m.support_end() > n_) {
    throw AlphabetMismatch("monomial outside alphabet");
  }
  Polynomial r(*this);
  for (auto& t : r.terms_) {
    t.monomial = t.monomial * m;
  }
  return r;  // multiplication by a monomial preserves a monomial order
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const { return to_text(*this); }

// ---------------------------------------------------------------------------

PolynomialBuilder::PolynomialBuilder(int n, std::size_t reserve) : n_(n) {
  check_alphabet(n);
  if (reserve > 0) {
    map_.reserve(reserve);
  }
}

void PolynomialBuilder::add(const Monomial& m, const Dyadic& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
  }
}

void PolynomialBuilder::add(const Polynomial& f) {
  if (f.alphabet_size() != n_) {
    throw AlphabetMismatch("builder alphabet mismatch");
  }
  for (const auto& t : f.terms()) {
    add(t.monomial, t.coeff);
  }
}

void PolynomialBuilder::add_scaled(const Polynomial& f, const Dyadic& c) {
  if (f.alphabet_size() != n_) {
    throw AlphabetMismatch("builder alphabet mismatch");
  }
  for (const auto& t : f.terms()) {
    add(t.monomial, t.coeff * c);
  }
}

Polynomial PolynomialBuilder::build() {
  Polynomial p(n_);
  p.terms_.reserve(map_.size());
  for (auto& [m, c] : map_) {
    if (!c.is_zero()) {
      p.terms_.push_back({m, std::move(c)});
    }
  }
  map_.clear();
  const std::size_t limit = max_terms();
  if (limit != 0 && p.terms_.size() > limit) {
    throw ResourceLimit("polynomial with " + std::to_string(p.terms_.size()) + " terms exceeds SCHUBOP_MAX_TERMS=" +
                        std::to_string(limit));
  }
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_greater(a.monomial, b.monomial); });
  return p;
}

// ---------------------------------------------------------------------------

Polynomial substitute(const Polynomial& f, std::span<const VariableImage> image, int new_n) {
  const int n = f.alphabet_size();
  if (static_cast<int>(image.size()) != n) {
    throw AlphabetMismatch("substitution has " + std::to_string(image.size()) + " images for " + std::to_string(n) +
                           " variables");
  }
  for (const auto& im : image) {
    if (im.sign != 0 && (im.target < 0 || im.target >= new_n)) {
      throw RangeError("substitution target outside the new alphabet");
    }
  }
  PolynomialBuilder b(new_n, f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    bool negative = false;
    bool vanishes = false;
    for (int i = 0; i < n; ++i) {
      const int e = t.monomial[i];
      if (e == 0) {
        continue;
      }
      const auto& im = image[static_cast<std::size_t>(i)];
      if (im.sign == 0) {
        vanishes = true;
        break;
      }
      m.add(im.target, e);
      if (im.sign < 0 && (e & 1)) {
        negative = !negative;
      }
    }
    if (!vanishes) {
      b.add(m, negative ? -t.coeff : t.coeff);
    }
  }
  return b.build();
}

Polynomial act_block(const Polynomial& f, const SignedPermutation& w, int offset) {
  const int n = f.alphabet_size();
  if (offset < 0 || offset + w.size() > n) {
    throw AlphabetMismatch("group element of size " + std::to_string(w.size()) + " does not fit alphabet of size " +
                           std::to_string(n));
  }
  std::vector<VariableImage> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    image[static_cast<std::size_t>(i)] = {i, 1};
  }
  for (int j = 1; j <= w.size(); ++j) {
    const int v = w(j);
    image[static_cast<std::size_t>(offset + std::abs(v) - 1)] = {offset + j - 1, v < 0 ? -1 : 1};
  }
  return substitute(f, image, n);
}

Polynomial act(const Polynomial& f, const SignedPermutation& w) {
  if (w.size() != f.alphabet_size()) {
    throw AlphabetMismatch("group element of size " + std::to_string(w.size()) + " acting on alphabet of size " +
                           std::to_string(f.alphabet_size()));
  }
  return act_block(f, w, 0);
}

Polynomial embed(const Polynomial& f, int new_n, int offset) {
  std::vector<VariableImage> image(static_cast<std::size_t>(f.alphabet_size()));
  for (int i = 0; i < f.alphabet_size(); ++i) {
    image[static_cast<std::size_t>(i)] = {i + offset, 1};
  }
  return substitute(f, image, new_n);
}

Polynomial set_zero(const Polynomial& f, int i) {
  const int n = f.alphabet_size();
  if (i < 1 || i > n) {
    throw RangeError("variable index out of range");
  }
  std::vector<VariableImage> image(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    image[static_cast<std::size_t>(k)] = {k, k == i - 1 ? 0 : 1};
  }
  return substitute(f, image, n);
}

Polynomial restrict_alphabet(const Polynomial& f, int new_n) {
  if (f.support_end() > new_n) {
    throw RangeError("polynomial involves variables beyond x" + std::to_string(new_n));
  }
  std::vector<VariableImage> image(static_cast<std::size_t>(f.alphabet_size()));
  for (int k = 0; k < f.alphabet_size(); ++k) {
    image[static_cast<std::size_t>(k)] = {k, k < new_n ? 1 : 0};
  }
  return substitute(f, image, new_n);
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  same_alphabet(f, g);
  if (g.is_zero()) {
    throw NonDivisible("division by the zero polynomial");
  }
  const int n = f.alphabet_size();
  std::map<Monomial, Dyadic, GrevlexGreater> rem;
  for (const auto& t : f.terms()) {
    rem.emplace(t.monomial, t.coeff);
  }
  const Term& lead = g.leading();
  PolynomialBuilder quotient(n);
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.monomial.divides(top->first)) {
      throw NonDivisible("leading term is not divisible by the divisor's leading term");
    }
    const Monomial qm = lead.monomial.quotient_of(top->first);
    Dyadic qc;
    try {
      qc = top->second.divided_by(lead.coeff);
    } catch (const NonDyadic&) {
      throw NonDivisible("coefficient quotient leaves Z[1/2]");
    }
    quotient.add(qm, qc);
    for (const auto& t : g.terms()) {
      const Monomial m = t.monomial * qm;
      Dyadic c = t.coeff * qc;
      auto [it, inserted] = rem.try_emplace(m, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second.is_zero()) {
          rem.erase(it);
        }
      }
    }
  }
  return quotient.build();
}

}  // namespace schubop
