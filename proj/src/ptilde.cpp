#include "schubop/ptilde.hpp"

#include <gmpxx.h>

#include <mutex>
#include <shared_mutex>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"

namespace schubop {

namespace {

struct Cache {
  std::shared_mutex mutex;
  std::map<std::pair<int, std::vector<int>>, SymPoly> table;
};

Cache& qtilde_cache() {
  static Cache cache;
  return cache;
}

std::vector<int> erase_positions(const std::vector<int>& parts, std::size_t a, std::size_t b = SIZE_MAX) {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != a && i != b) {
      out.push_back(parts[i]);
    }
  }
  return out;
}

// F Q~_{a,b}, built from e-multiplications.
SymPoly times_pair(const SymPoly& F, int a, int b) {
  SymPoly out = F.times_elementary(b).times_elementary(a);
  for (int p = 1; p <= b; ++p) {
    SymPoly t = F.times_elementary(b - p).times_elementary(a + p);
    out += t * Dyadic(p % 2 == 0 ? 2 : -2);
  }
  return out;
}

SymPoly qtilde_recursive(const std::vector<int>& parts, int n);

SymPoly qtilde_cached(const std::vector<int>& parts, int n) {
  Cache& cache = qtilde_cache();
  auto key = std::make_pair(n, parts);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) {
      return it->second;
    }
  }
  SymPoly value = qtilde_recursive(parts, n);
  std::unique_lock lock(cache.mutex);
  return cache.table.try_emplace(std::move(key), std::move(value)).first->second;
}

SymPoly qtilde_recursive(const std::vector<int>& parts, int n) {
  const std::size_t l = parts.size();
  if (l == 0) {
    return SymPoly::one(n);
  }
  SymPoly out(n);
  if (l % 2 == 1) {
    for (std::size_t j = 0; j < l; ++j) {
      if (parts[j] > n) {
        continue;
      }
      SymPoly t = qtilde_cached(erase_positions(parts, j), n).times_elementary(parts[j]);
      if (j % 2 == 0) {
        out += t;
      } else {
        out -= t;
      }
    }
  } else {
    for (std::size_t j = 1; j < l; ++j) {
      SymPoly t = times_pair(qtilde_cached(erase_positions(parts, 0, j), n), parts[0], parts[j]);
      // (-1)^j with 1-based j
      if (j % 2 == 1) {
        out += t;
      } else {
        out -= t;
      }
    }
  }
  return out;
}

Polynomial pfaffian(const std::vector<int>& idx, const std::vector<std::vector<Polynomial>>& M, int n) {
  if (idx.empty()) {
    return Polynomial::constant(1, n);
  }
  Polynomial out(n);
  std::vector<int> rest;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const Polynomial& m = M[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(idx[j])];
    if (m.is_zero()) {
      continue;
    }
    rest.clear();
    for (std::size_t r = 1; r < idx.size(); ++r) {
      if (r != j) {
        rest.push_back(idx[r]);
      }
    }
    Polynomial t = m * pfaffian(rest, M, n);
    if (j % 2 == 1) {
      out += t;
    } else {
      out -= t;
    }
  }
  return out;
}

}  // namespace

Polynomial elementary(int k, int n) {
  if (k < 0 || k > n) {
    return Polynomial(n);
  }
  std::vector<Term> terms;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) {
    e[static_cast<std::size_t>(n - 1 - i)] = 1;
  }
  do {
    terms.push_back({Monomial(e), Dyadic(1)});
  } while (std::next_permutation(e.begin(), e.end()));
  return Polynomial::from_distinct_terms(n, std::move(terms));
}

Polynomial qtilde_pair(int i, int j, int n) {
  if (i < j || j < 0) {
    throw RangeError("qtilde_pair requires i >= j >= 0");
  }
  Polynomial out = elementary(i, n) * elementary(j, n);
  for (int p = 1; p <= j; ++p) {
    out += elementary(i + p, n) * elementary(j - p, n) * Dyadic(p % 2 == 0 ? 2 : -2);
  }
  return out;
}

SymPoly qtilde_sym(const Partition& I, int n) { return qtilde_cached(I.parts(), n); }

SymPoly ptilde_sym(const Partition& I, int n) {
  return qtilde_sym(I, n) * Dyadic::pow2(-I.length());
}

Polynomial qtilde(const Partition& I, int n, QtildeMethod method) {
  if (method == QtildeMethod::Recursion) {
    return qtilde_sym(I, n).expand();
  }
  std::vector<int> parts = I.parts();
  if (parts.size() % 2 == 1) {
    parts.push_back(0);
  }
  const std::size_t k = parts.size();
  std::vector<std::vector<Polynomial>> M(k, std::vector<Polynomial>(k, Polynomial(n)));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      M[a][b] = qtilde_pair(parts[a], parts[b], n);
    }
  }
  std::vector<int> idx;
  for (std::size_t a = 0; a < k; ++a) {
    idx.push_back(static_cast<int>(a));
  }
  return pfaffian(idx, M, n);
}

Polynomial ptilde(const Partition& I, int n) { return ptilde_sym(I, n).expand(); }

BranchResult branch(const StrictPartition& I, int m) {
  if (m < 1) {
    throw RangeError("branching needs m >= 1");
  }
  BranchResult result;
  const int l = I.length();
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> parts = I.parts();
    for (int r = 0; r < l; ++r) {
      if (mask & (1u << r)) {
        --parts[static_cast<std::size_t>(r)];
      }
    }
    bool ok = true;
    for (std::size_t r = 1; r < parts.size(); ++r) {
      ok = ok && parts[r] <= parts[r - 1];
    }
    if (!ok) {
      continue;
    }
    Partition J(parts);
    result.terms.push_back({J, I.size() - J.size()});
  }
  Polynomial lhs = qtilde(I, m);
  Polynomial rhs(m);
  for (const BranchTerm& bt : result.terms) {
    Polynomial low(m);
    if (m == 1) {
      if (bt.J.empty()) {
        low = Polynomial::constant(1, 1);
      }
    } else {
      low = embed(qtilde(bt.J, m - 1), m);
    }
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    e.back() = bt.power;
    rhs += low.shifted(Monomial(e));
  }
  result.holds = lhs == rhs;
  return result;
}

int staircase_size(GroupType t, int n) {
  switch (t) {
    case GroupType::D:
      return n - 1;
    case GroupType::B:
      return n;
    default:
      throw RangeError("P~ decompositions are defined for types B and D");
  }
}

std::map<StrictPartition, Polynomial> ptilde_decompose(const Polynomial& f, int n, GroupType t) {
  if (f.alphabet_size() != n) {
    throw AlphabetMismatch("decomposition over " + std::to_string(n) + " variables");
  }
  if (!is_symmetric(f)) {
    throw MembershipError("decomposition needs a symmetric polynomial");
  }
  const int k = staircase_size(t, n);
  const int sign = t == GroupType::D ? sign_power(binomial(n, 2)) : sign_power(binomial(n + 1, 2));
  std::map<StrictPartition, Polynomial> out;
  for (const StrictPartition& J : strict_partitions_in_staircase(k)) {
    Polynomial g = f * ptilde(complement_in_staircase(J, k), n);
    Polynomial c = t == GroupType::D ? partial_v(g, n) : nabla_B(g, n, n);
    if (!c.is_zero()) {
      out.emplace(J, c * Dyadic(sign));
    }
  }
  return out;
}

Polynomial ptilde_recompose(const std::map<StrictPartition, Polynomial>& c, int n) {
  Polynomial out(n);
  for (const auto& [J, coeff] : c) {
    out += coeff * ptilde(J, n);
  }
  return out;
}

namespace {

struct BasisColumn {
  StrictPartition J;
  SymPoly coeff;  // invariant factor
  SymPoly value;  // coeff * P~_J
};

// Invariant factor e_lambda(x^2) e_n^m.
struct FactorSpec {
  Partition lambda;
  int en_power = 0;
};

std::vector<FactorSpec> invariant_specs(int d, int n, GroupType t) {
  std::vector<FactorSpec> out;
  const int max_part = t == GroupType::B ? n : n - 1;
  const int max_m = t == GroupType::D ? d / n : 0;
  for (int m = 0; m <= max_m; ++m) {
    const int rest = d - (t == GroupType::D ? n * m : 0);
    if (rest % 2 != 0) {
      continue;
    }
    for (Partition& lam : partitions_in_box(rest / 2, rest / 2 + 1, max_part)) {
      out.push_back({std::move(lam), m});
    }
  }
  return out;
}

SymPoly apply_spec(SymPoly s, const FactorSpec& spec, int n) {
  for (int p : spec.lambda.parts()) {
    s = s.times_box(2, p);
  }
  for (int r = 0; r < spec.en_power; ++r) {
    s = s.times_elementary(n);
  }
  return s;
}

}  // namespace

std::map<StrictPartition, Polynomial> ptilde_expand(const Polynomial& f, int n, GroupType t) {
  if (f.alphabet_size() != n) {
    throw AlphabetMismatch("expansion over " + std::to_string(n) + " variables");
  }
  const SymPoly target = SymPoly::from_polynomial(f);
  const int k = staircase_size(t, n);
  std::map<StrictPartition, SymPoly> acc;
  std::map<int, int> degrees;
  for (const Term& term : target.sorted_terms()) {
    degrees[term.monomial.degree()] = 1;
  }
  for (const auto& [d, unused] : degrees) {
    std::vector<BasisColumn> cols;
    for (const StrictPartition& J : strict_partitions_in_staircase(k)) {
      if (J.size() > d) {
        continue;
      }
      for (const FactorSpec& spec : invariant_specs(d - J.size(), n, t)) {
        cols.push_back({J, apply_spec(SymPoly::one(n), spec, n), apply_spec(ptilde_sym(J, n), spec, n)});
      }
    }
    std::vector<Partition> rows = partitions_in_box(d, n, d);
    const std::size_t R = rows.size();
    const std::size_t C = cols.size();
    std::vector<std::vector<mpq_class>> A(R, std::vector<mpq_class>(C + 1));
    for (std::size_t r = 0; r < R; ++r) {
      std::vector<int> e = rows[r].parts();
      e.resize(static_cast<std::size_t>(n), 0);
      Monomial mu(e);
      for (std::size_t c = 0; c < C; ++c) {
        A[r][c] = cols[c].value.coefficient(mu).to_rational();
      }
      A[r][C] = target.coefficient(mu).to_rational();
    }
    // Gaussian elimination
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < C && row < R; ++c) {
      std::size_t p = row;
      while (p < R && A[p][c] == 0) {
        ++p;
      }
      if (p == R) {
        continue;
      }
      std::swap(A[p], A[row]);
      mpq_class inv = 1 / A[row][c];
      for (std::size_t j = c; j <= C; ++j) {
        A[row][j] *= inv;
      }
      for (std::size_t r = 0; r < R; ++r) {
        if (r == row || A[r][c] == 0) {
          continue;
        }
        mpq_class factor = A[r][c];
        for (std::size_t j = c; j <= C; ++j) {
          if (A[row][j] != 0) {
            A[r][j] -= factor * A[row][j];
          }
        }
      }
      pivot_col.push_back(c);
      ++row;
    }
    if (pivot_col.size() != C) {
      throw Error("P~ basis columns are dependent in degree " + std::to_string(d));
    }
    for (std::size_t r = row; r < R; ++r) {
      if (A[r][C] != 0) {
        throw MembershipError("polynomial is not in the span of the P~ basis");
      }
    }
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      const mpq_class& x = A[i][C];
      if (x == 0) {
        continue;
      }
      const BasisColumn& col = cols[pivot_col[i]];
      auto [it, inserted] = acc.try_emplace(col.J, SymPoly(n));
      it->second += col.coeff * Dyadic::from_rational(x);
    }
  }
  std::map<StrictPartition, Polynomial> out;
  for (auto& [J, s] : acc) {
    if (!s.is_zero()) {
      out.emplace(J, s.expand());
    }
  }
  return out;
}

}  // namespace schubop
