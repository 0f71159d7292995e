#include <optional>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "schubop/ptilde.hpp"
#include "schubop/schubert.hpp"
#include "verify_internal.hpp"

namespace schubop::detail {

namespace {

struct Erasure {
  StrictPartition J;
  int positions = 0;
};

// Removes the listed values from I; nullopt unless each one is a part.
std::optional<Erasure> erase_parts(const StrictPartition& I, const std::vector<int>& values) {
  Erasure out;
  for (int v : values) {
    const int pos = I.position_of(v);
    if (pos == 0) {
      return std::nullopt;
    }
    out.positions += pos;
  }
  out.J = I.without(values);
  return out;
}

enum class Family { Q, P };

Polynomial family(Family f, const Partition& I, int n) { return f == Family::Q ? qtilde(I, n) : ptilde(I, n); }

// Fact 4 for Q~ (with 2^k) and its P~ form.
void erasure_rule(SuiteContext& ctx, Family fam, int lo, int hi) {
  const auto ns = ctx.ranks(lo, hi);
  ctx.check.note(range_text(ns) + ", all strict I in rho(n), 1 <= k <= n, all weakly increasing alpha with alpha_k <= n-k");
  for (int n : ns) {
    for (const auto& I : strict_partitions_in_staircase(n)) {
      const Polynomial base = family(fam, I, n);
      for (int k = 1; k <= n; ++k) {
        for (const auto& alpha : increasing_sequences(k, n - k)) {
          const std::string label =
              "n=" + std::to_string(n) + " I=" + I.to_string() + " k=" + std::to_string(k) + " alpha=" + vec_text(alpha);
          ctx.check.guarded(label, [&] {
            std::vector<int> values;
            for (int r = 1; r <= k; ++r) {
              values.push_back(n - (r - 1) - alpha[static_cast<std::size_t>(r - 1)]);
            }
            Polynomial lhs = nabla_B(base * schubert_Y(alpha, n), k, n);
            Polynomial rhs(n);
            if (auto e = erase_parts(I, values)) {
              rhs = family(fam, e->J, n) * Dyadic(sign_power(static_cast<long long>(k) * (n - 1) + e->positions));
              if (fam == Family::Q) {
                rhs *= Dyadic::pow2(k);
              }
            }
            ctx.check.equal(label, lhs, rhs);
          });
        }
      }
    }
  }
}

}  // namespace

void suite_fact4(SuiteContext& ctx) { erasure_rule(ctx, Family::Q, 3, 5); }
void suite_thm21(SuiteContext& ctx) { erasure_rule(ctx, Family::P, 3, 5); }

void suite_thm9(SuiteContext& ctx) {
  const auto ns = ctx.ranks(3, 5);
  ctx.check.note(range_text(ns) + ", all strict I in rho(n), 1 <= k <= n, weakly increasing alpha with alpha_k = n-k+1");
  for (int n : ns) {
    for (const auto& I : strict_partitions_in_staircase(n)) {
      const Polynomial base = qtilde(I, n);
      for (int k = 1; k <= n; ++k) {
        const int top = n - k + 1;
        for (auto alpha : increasing_sequences(k - 1, top)) {
          alpha.push_back(top);
          const std::string label =
              "n=" + std::to_string(n) + " I=" + I.to_string() + " k=" + std::to_string(k) + " alpha=" + vec_text(alpha);
          ctx.check.guarded(label, [&] {
            std::vector<int> values;
            for (int r = 1; r <= k - 1; ++r) {
              values.push_back(n - (r - 1) - alpha[static_cast<std::size_t>(r - 1)]);
            }
            Polynomial lhs = nabla_B(base * schubert_Y_stable(alpha, n), k, n);
            Polynomial rhs(n);
            auto e = erase_parts(I, values);
            if (e && (I.length() - n) % 2 != 0) {
              rhs = qtilde(e->J, n) *
                    Dyadic(sign_power(static_cast<long long>(k - 1) * (n - 1) + 1 + e->positions)) * Dyadic::pow2(k);
            }
            ctx.check.equal(label, lhs, rhs);
          });
        }
      }
    }
  }
}

void suite_thm18(SuiteContext& ctx) {
  const auto ns = ctx.ranks(2, 3);
  ctx.check.note(range_text(ns) + ", all alpha in the staircase, all strict I in rho(n)");
  for (int n : ns) {
    const int c = n * (n + 1) / 2;
    for (const auto& a : staircase_vectors(n)) {
      for (const auto& I : strict_partitions_in_staircase(n)) {
        const std::string label = "n=" + std::to_string(n) + " alpha=" + vec_text(a) + " I=" + I.to_string();
        ctx.check.guarded(label, [&] {
          Polynomial lhs = nabla_B(schubert_Y(a, n) * ptilde(I, n), n, n);
          Polynomial rhs =
              I == staircase(n) ? schubert_Y_omega(a, n) * Dyadic(sign_power(weight(a) + c)) : Polynomial(n);
          ctx.check.equal(label, lhs, rhs);
        });
      }
    }
  }
}

void suite_thm23(SuiteContext& ctx) {
  const auto ns = ctx.ranks(2, 3);
  ctx.check.note(range_text(ns) + ", type B");
  grassmannian_cases(ctx, GroupType::B, ns);
}

void suite_prop20(SuiteContext& ctx) {
  const auto ns = ctx.ranks(3, 3);
  ctx.check.note(range_text(ns) + ", all strict I in rho(n), 1 <= p <= n");
  for (int n : ns) {
    const GeneratorWord word = nabla_B_word(1, n);
    for (const auto& I : strict_partitions_in_staircase(n)) {
      for (int p = 1; p <= n; ++p) {
        const std::string label = "n=" + std::to_string(n) + " I=" + I.to_string() + " p=" + std::to_string(p);
        ctx.check.guarded(label, [&] {
          Polynomial lhs = apply_word(ptilde(I, n) * x_power(1, n - p, n), word);
          const int pos = I.position_of(p);
          Polynomial rhs = pos == 0 ? Polynomial(n) : ptilde(I.without({p}), n) * Dyadic(sign_power(pos - 1 + n));
          ctx.check.equal(label, lhs, rhs);
        });
      }
    }
  }
}

void suite_prop22(SuiteContext& ctx) {
  const auto ns = ctx.ranks(3, 3);
  ctx.check.note(range_text(ns) + ", all nonempty strict I in rho(n)");
  for (int n : ns) {
    for (const auto& I : strict_partitions_in_staircase(n)) {
      if (I.empty()) {
        continue;
      }
      const std::string label = "n=" + std::to_string(n) + " I=" + I.to_string();
      ctx.check.guarded(label, [&] {
        std::vector<Letter> letters{Letter::zero()};
        for (int i = 1; i < I[0]; ++i) {
          letters.push_back(Letter::simple(i));
        }
        Polynomial lhs = apply_word(ptilde(I, n), GeneratorWord(letters, n));
        std::vector<int> rest(I.parts().begin() + 1, I.parts().end());
        ctx.check.equal(label, lhs, ptilde(Partition(rest), n) * Dyadic(sign_power(I[0])));
      });
    }
  }
}

namespace {

Polynomial y_minus_x_product(int n) {
  Polynomial p = constant(1, 2 * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      p *= Polynomial::variable(i, 2 * n) - Polynomial::variable(n + j, 2 * n);
    }
  }
  return p;
}

void kernel_identities(SuiteContext& ctx, GroupType t, int n) {
  const std::string tag = std::string(1, to_char(t)) + " n=" + std::to_string(n);
  ctx.check.guarded(tag + " F congruent to P~", [&] {
    ctx.check.holds(tag + " F congruent to P~", congruent_mod_ideal(kernel_F(n, t) - kernel_Ptilde(n, t), t));
  });
  ctx.check.guarded(tag + " specializations", [&] {
    const int k = staircase_size(t, n);
    const Polynomial K = kernel_Ptilde(n, t);
    const Polynomial s = schur_S(staircase(k), n);
    for (const auto& w : enumerate_group(t, n)) {
      std::vector<VariableImage> image(static_cast<std::size_t>(2 * n));
      for (int j = 1; j <= n; ++j) {
        const int v = w(j);
        image[static_cast<std::size_t>((v > 0 ? v : -v) - 1)] = {j - 1, v > 0 ? 1 : -1};
        image[static_cast<std::size_t>(n + j - 1)] = {j - 1, 1};
      }
      ctx.check.equal(tag + " P~(X^w, X) w=" + w.to_string(), substitute(K, image, n),
                      w.negatives() == 0 ? s : Polynomial(n));
    }
  });
}

void reproducing(SuiteContext& ctx, GroupType t, int n) {
  const std::string tag = std::string(1, to_char(t)) + " n=" + std::to_string(n);
  const int k = staircase_size(t, n);
  const Polynomial F = kernel_F(n, t);
  const int sign = sign_power(t == GroupType::D ? n * (n - 1) / 2 : n * (n + 1) / 2);
  auto symmetric_pairing = [&](const Polynomial& g) {
    return t == GroupType::D ? partial_v(g, n) : nabla_B(g, n, n);
  };
  for (const auto& I : strict_partitions_in_staircase(k)) {
    for (int a = 0; a <= n; ++a) {
      for (int b = a; b <= n; ++b) {
        const Polynomial f = elementary(a, n) * elementary(b, n) * ptilde(I, n);
        const std::string label = tag + " symmetric f=e" + std::to_string(a) + "e" + std::to_string(b) + "P~" +
                                  I.to_string();
        ctx.check.guarded(label, [&] {
          Polynomial lhs = symmetric_pairing(in_x(f) * F);
          Polynomial rhs = in_y(f) * Dyadic(sign);
          ctx.check.holds(label, congruent_mod_ideal(lhs - rhs, t), to_text(lhs, Alphabet::Doubled),
                          to_text(rhs, Alphabet::Doubled));
        });
      }
    }
  }
  const Polynomial G = y_minus_x_product(n) * F;
  const SignedPermutation w0 = longest(t, n);
  std::vector<std::pair<std::string, Polynomial>> spanning;
  for (const auto& a : staircase_vectors(n)) {
    for (const auto& I : strict_partitions_in_staircase(k)) {
      spanning.emplace_back("Y" + vec_text(a) + "P~" + I.to_string(), schubert_Y(a, n) * ptilde(I, n));
    }
  }
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    spanning.emplace_back("x^" + vec_text(e), Polynomial::monomial(e));
    int i = 0;
    while (i < n && e[static_cast<std::size_t>(i)] == 2) {
      e[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) {
      break;
    }
    ++e[static_cast<std::size_t>(i)];
  }
  for (const auto& [name, f] : spanning) {
    const std::string label = tag + " full f=" + name;
    ctx.check.guarded(label, [&] {
      Polynomial lhs = apply_element(in_x(f) * G, w0, t);
      Polynomial rhs = in_y(f);
      ctx.check.holds(label, congruent_mod_ideal(lhs - rhs, t), to_text(lhs, Alphabet::Doubled),
                      to_text(rhs, Alphabet::Doubled));
    });
  }
}

}  // namespace

void suite_kernels(SuiteContext& ctx) {
  const auto ns = ctx.ranks(2, 3);
  const auto rs = ctx.ranks(2, 2);
  ctx.check.note("congruence and specializations " + range_text(ns) + "; reproducing properties " + range_text(rs) +
                 "; types B and D");
  for (GroupType t : {GroupType::D, GroupType::B}) {
    for (int n : ns) {
      kernel_identities(ctx, t, n);
    }
    for (int n : rs) {
      reproducing(ctx, t, n);
    }
  }
}

}  // namespace schubop::detail
