#include "schubop/symfun.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"

namespace schubop {

namespace {

Partition merged(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

void check_cap(int cap) {
  if (cap < 0) {
    throw RangeError("negative degree cap");
  }
}

}  // namespace

SymFun SymFun::constant(const mpq_class& c, int cap) {
  SymFun f(cap);
  f.add(Partition(), c);
  return f;
}

SymFun SymFun::power(const Partition& lambda, int cap) {
  SymFun f(cap);
  if (lambda.size() <= cap) {
    f.add(lambda, 1);
  }
  return f;
}

mpq_class SymFun::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? mpq_class(0) : it->second;
}

int SymFun::degree() const {
  int d = -1;
  for (const auto& [lam, c] : coeffs_) {
    d = std::max(d, lam.size());
  }
  return d;
}

void SymFun::add(const Partition& lambda, const mpq_class& c) {
  if (c == 0 || lambda.size() > cap_) {
    return;
  }
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      coeffs_.erase(it);
    }
  }
}

SymFun& SymFun::operator+=(const SymFun& rhs) {
  cap_ = std::min(cap_, rhs.cap_);
  for (const auto& [lam, c] : rhs.coeffs_) {
    add(lam, c);
  }
  std::erase_if(coeffs_, [this](const auto& kv) { return kv.first.size() > cap_; });
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& rhs) {
  cap_ = std::min(cap_, rhs.cap_);
  for (const auto& [lam, c] : rhs.coeffs_) {
    add(lam, -c);
  }
  std::erase_if(coeffs_, [this](const auto& kv) { return kv.first.size() > cap_; });
  return *this;
}

SymFun& SymFun::operator*=(const mpq_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lam, v] : coeffs_) {
    v *= c;
  }
  return *this;
}

SymFun SymFun::operator-() const {
  SymFun f = *this;
  return f *= -1;
}

SymFun operator*(const SymFun& a, const SymFun& b) {
  SymFun out(std::min(a.cap_, b.cap_));
  for (const auto& [la, ca] : a.coeffs_) {
    for (const auto& [lb, cb] : b.coeffs_) {
      if (la.size() + lb.size() <= out.cap_) {
        out.add(merged(la, lb), ca * cb);
      }
    }
  }
  return out;
}

std::string SymFun::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [lam, c] : coeffs_) {
    mpq_class v = c;
    if (first) {
      if (v < 0) {
        out += "-";
      }
    } else {
      out += v < 0 ? " - " : " + ";
    }
    v = abs(v);
    std::string mono;
    if (!lam.empty()) {
      mono = "p[";
      for (int i = 0; i < lam.length(); ++i) {
        mono += (i ? "," : "") + std::to_string(lam[i]);
      }
      mono += "]";
    }
    if (mono.empty()) {
      out += v.get_str();
    } else if (v == 1) {
      out += mono;
    } else {
      out += v.get_str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

SymFun generator(Generator kind, int k, int cap) {
  check_cap(cap);
  if (k < 0) {
    throw RangeError("negative generator degree");
  }
  if (k > cap) {
    throw RangeError("generator degree " + std::to_string(k) + " exceeds the cap " + std::to_string(cap));
  }
  if (kind == Generator::P) {
    return k == 0 ? SymFun::constant(1, cap) : SymFun::power(Partition(std::vector<int>{k}), cap);
  }
  if (kind == Generator::PRow) {
    SymFun q = generator(Generator::Q, k, cap);
    return k == 0 ? q : q * mpq_class(1, 2);
  }
  // Newton-type recursions: m g_m = sum_r c_r p_r g_{m-r}
  std::vector<SymFun> g{SymFun::constant(1, cap)};
  for (int m = 1; m <= k; ++m) {
    SymFun acc(cap);
    for (int r = 1; r <= m; ++r) {
      mpq_class c;
      switch (kind) {
        case Generator::E:
          c = r % 2 == 1 ? 1 : -1;
          break;
        case Generator::S:
          c = 1;
          break;
        default:
          c = r % 2 == 1 ? 2 : 0;
          break;
      }
      if (c != 0) {
        acc += SymFun::power(Partition(std::vector<int>{r}), cap) * g[static_cast<std::size_t>(m - r)] * c;
      }
    }
    g.push_back(acc * mpq_class(1, m));
  }
  return g.back();
}

mpz_class z_lambda(const Partition& lambda) {
  mpz_class z = 1;
  int i = 0;
  while (i < lambda.length()) {
    int j = i;
    while (j < lambda.length() && lambda[j] == lambda[i]) {
      ++j;
    }
    const int m = j - i;
    for (int t = 1; t <= m; ++t) {
      z *= lambda[i];
      z *= t;
    }
    i = j;
  }
  return z;
}

mpq_class hall_pair(const SymFun& a, const SymFun& b) {
  mpq_class s = 0;
  for (const auto& [lam, c] : a.coefficients()) {
    mpq_class d = b.coefficient(lam);
    if (d != 0) {
      s += c * d * mpq_class(z_lambda(lam));
    }
  }
  return s;
}

namespace {

// g D_{p_mu}: each part k acts as k d/dp_k.
SymFun derive(const SymFun& g, const Partition& mu) {
  SymFun cur = g;
  for (int k : mu.parts()) {
    SymFun next(g.cap());
    for (const auto& [lam, c] : cur.coefficients()) {
      int mult = 0;
      for (int p : lam.parts()) {
        mult += p == k;
      }
      if (mult == 0) {
        continue;
      }
      std::vector<int> parts = lam.parts();
      parts.erase(std::find(parts.begin(), parts.end(), k));
      next += SymFun::power(Partition(parts), g.cap()) * (c * mult * k);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

SymFun foulkes_D(const SymFun& f, const SymFun& g) {
  SymFun out(g.cap());
  for (const auto& [mu, c] : f.coefficients()) {
    out += derive(g, mu) * c;
  }
  return out;
}

SymFun vertex(Vertex kind, const SymFun& f) {
  const int cap = f.cap();
  const int top = std::max(f.degree(), 0);
  SymFun out = f;
  for (int k = 1; k <= top; ++k) {
    SymFun a = kind == Vertex::Ve ? generator(Generator::E, k, cap) : generator(Generator::PRow, k, cap);
    SymFun b = kind == Vertex::Us   ? generator(Generator::S, k, cap)
               : kind == Vertex::Ue ? generator(Generator::E, k, cap)
                                    : generator(Generator::PRow, k, cap);
    SymFun term = foulkes_D(a, f) * b;
    if (k % 2 == 1) {
      out -= term;
    } else {
      out += term;
    }
  }
  return out;
}

namespace {

SymFun pfaffian_rule(const std::vector<int>& parts_in, int cap, Generator g) {
  std::vector<int> parts = parts_in;
  if (parts.size() % 2 == 1) {
    parts.push_back(0);
  }
  auto gen = [&](int k) {
    if (k > cap) {
      return SymFun(cap);
    }
    return generator(g, k, cap);
  };
  auto pair_value = [&](int i, int j) {
    SymFun v = gen(i) * gen(j);
    for (int p = 1; p <= j; ++p) {
      v += gen(i + p) * gen(j - p) * mpq_class(p % 2 == 0 ? 2 : -2);
    }
    return v;
  };
  std::function<SymFun(const std::vector<int>&)> pf = [&](const std::vector<int>& idx) {
    if (idx.empty()) {
      return SymFun::constant(1, cap);
    }
    SymFun out(cap);
    for (std::size_t j = 1; j < idx.size(); ++j) {
      std::vector<int> rest;
      for (std::size_t r = 1; r < idx.size(); ++r) {
        if (r != j) {
          rest.push_back(idx[r]);
        }
      }
      SymFun t = pair_value(parts[static_cast<std::size_t>(idx[0])], parts[static_cast<std::size_t>(idx[j])]) * pf(rest);
      if (j % 2 == 1) {
        out += t;
      } else {
        out -= t;
      }
    }
    return out;
  };
  std::vector<int> idx;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    idx.push_back(static_cast<int>(a));
  }
  return pf(idx);
}

}  // namespace

SymFun schur_PQ(const StrictPartition& I, int cap, SchurKind kind) {
  if (I.size() > cap) {
    throw RangeError("partition " + I.to_string() + " exceeds the degree cap");
  }
  SymFun q = pfaffian_rule(I.parts(), cap, Generator::Q);
  if (kind == SchurKind::P) {
    q *= mpq_class(1, mpz_class(1) << static_cast<unsigned>(I.length()));
  }
  return q;
}

SymFun qtilde_symfun(const Partition& I, int cap) {
  if (I.size() > cap) {
    throw RangeError("partition " + I.to_string() + " exceeds the degree cap");
  }
  return pfaffian_rule(I.parts(), cap, Generator::E);
}

Polynomial realize(const SymFun& f, int n) {
  std::vector<Polynomial> powers{Polynomial::constant(1, n)};
  auto power_sum = [&](int k) -> const Polynomial& {
    while (static_cast<int>(powers.size()) <= k) {
      const int m = static_cast<int>(powers.size());
      PolynomialBuilder b(n);
      for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = m;
        b.add(Monomial(e), Dyadic(1));
      }
      powers.push_back(b.build());
    }
    return powers[static_cast<std::size_t>(k)];
  };
  absl::flat_hash_map<Monomial, mpq_class> acc;
  for (const auto& [lam, c] : f.coefficients()) {
    Polynomial t = Polynomial::constant(1, n);
    for (int k : lam.parts()) {
      t *= power_sum(k);
    }
    for (const Term& term : t.terms()) {
      acc[term.monomial] += c * term.coeff.to_rational();
    }
  }
  PolynomialBuilder b(n);
  for (const auto& [m, c] : acc) {
    if (c != 0) {
      b.add(m, Dyadic::from_rational(c));
    }
  }
  return b.build();
}

GeneratorWord rectangle_word(int q, int r) {
  const int n = q + r;
  if (q <= 0 || r <= 0) {
    throw RangeError("rectangle needs 0 < q < n");
  }
  GeneratorWord w({}, n);
  for (int row = q; row >= 1; --row) {
    for (int i = row; i <= row + r - 1; ++i) {
      w.push_back(Letter::simple(i));
    }
  }
  return w;
}

Polynomial rectangle_apply(const Polynomial& f, int q, int r) { return apply_word(f, rectangle_word(q, r)); }

long long d_coefficient(int q, int r, int k, int h) {
  const int n = q + r;
  if (q <= 0 || r <= 0 || k < 0 || k > q || h < 0 || h > r) {
    throw RangeError("rectangle coefficient needs 0 < q < n, 0 <= k <= q, 0 <= h <= r");
  }
  if (((q - k) * (r - h)) % 2 != 0) {
    return 0;
  }
  return sign_power(static_cast<long long>(q - k) * r) * binomial((n - k - h) / 2, (q - k) / 2);
}

}  // namespace schubop
