#include <map>

#include "schubop/error.hpp"
#include "schubop/ptilde.hpp"

namespace schubop {

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& M, std::size_t row, unsigned cols,
                       std::map<unsigned, Polynomial>& memo, int n) {
  if (row == M.size()) {
    return Polynomial::constant(1, n);
  }
  auto it = memo.find(cols);
  if (it != memo.end()) {
    return it->second;
  }
  Polynomial out(n);
  int sign = 1;
  for (std::size_t c = 0; c < M.size(); ++c) {
    if (!(cols & (1u << c))) {
      continue;
    }
    if (!M[row][c].is_zero()) {
      Polynomial minor = determinant(M, row + 1, cols & ~(1u << c), memo, n);
      out += M[row][c] * minor * Dyadic(sign);
    }
    sign = -sign;
  }
  memo.emplace(cols, out);
  return out;
}

}  // namespace

Polynomial in_x(const Polynomial& f) { return embed(f, 2 * f.alphabet_size(), 0); }

Polynomial in_y(const Polynomial& f) {
  return embed(f, 2 * f.alphabet_size(), f.alphabet_size());
}

Polynomial kernel_F(int n, GroupType t) {
  const int size = staircase_size(t, n);
  const int shift = t == GroupType::D ? n : n + 1;
  if (size == 0) {
    return Polynomial::constant(1, 2 * n);
  }
  std::vector<std::vector<Polynomial>> M(static_cast<std::size_t>(size),
                                         std::vector<Polynomial>(static_cast<std::size_t>(size), Polynomial(2 * n)));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      const int m = shift + j - 2 * i;
      Polynomial& e = M[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (m == 0) {
        e = Polynomial::constant(1, 2 * n);
      } else if (m > 0) {
        Polynomial p = ptilde(Partition(std::vector<int>{m}), n);
        e = in_x(p) + in_y(p);
      }
    }
  }
  std::map<unsigned, Polynomial> memo;
  return determinant(M, 0, (1u << size) - 1, memo, 2 * n);
}

Polynomial kernel_Ptilde(int n, GroupType t) {
  const int k = staircase_size(t, n);
  Polynomial out(2 * n);
  for (const StrictPartition& I : strict_partitions_in_staircase(k)) {
    out += in_x(ptilde(I, n)) * in_y(ptilde(complement_in_staircase(I, k), n));
  }
  return out;
}

bool congruent_mod_ideal(const Polynomial& f, GroupType t) {
  const int two_n = f.alphabet_size();
  if (two_n % 2 != 0) {
    throw AlphabetMismatch("congruence needs a doubled alphabet");
  }
  if (t == GroupType::A) {
    throw RangeError("congruence is defined for types B and D");
  }
  const int n = two_n / 2;
  for (const SignedPermutation& w : enumerate_group(t, n)) {
    std::vector<VariableImage> image(static_cast<std::size_t>(two_n));
    for (int i = 0; i < n; ++i) {
      image[static_cast<std::size_t>(i)] = {i, 1};
    }
    // x_{|w(j)|} -> sgn(w(j)) x_j
    for (int j = 1; j <= n; ++j) {
      const int v = w(j);
      const int i = v > 0 ? v : -v;
      image[static_cast<std::size_t>(n + i - 1)] = {j - 1, v > 0 ? 1 : -1};
    }
    if (!substitute(f, image, two_n).is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace schubop
