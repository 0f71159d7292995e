#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "schubop/ptilde.hpp"
#include "schubop/schubert.hpp"
#include "verify_internal.hpp"

namespace schubop::detail {

void suite_thm11(SuiteContext& ctx) {
  const auto ns = ctx.ranks(4, 6);
  ctx.check.note(range_text(ns) +
                 ", 1 <= k <= n/2, all strict I in rho(n-1), all weakly increasing alpha of length 2k with "
                 "alpha_2k <= n-2k");
  for (int n : ns) {
    for (const auto& I : strict_partitions_in_staircase(n - 1)) {
      const Polynomial base = ptilde(I, n);
      for (int k = 1; 2 * k <= n; ++k) {
        for (const auto& alpha : increasing_sequences(2 * k, n - 2 * k)) {
          const std::string label =
              "n=" + std::to_string(n) + " I=" + I.to_string() + " k=" + std::to_string(k) + " alpha=" + vec_text(alpha);
          ctx.check.guarded(label, [&] {
            std::vector<int> erased;
            int s = 0;
            bool nonzero = true;
            for (int r = 1; r <= 2 * k; ++r) {
              const int v = n - r - alpha[static_cast<std::size_t>(r - 1)];
              if (v == 0) {
                s += I.length() + 1;  // the extra part
                continue;
              }
              const int pos = I.position_of(v);
              if (pos == 0) {
                nonzero = false;
                break;
              }
              s += pos;
              erased.push_back(v);
            }
            Polynomial lhs = nabla_D(base * schubert_Y(alpha, n), k, n);
            Polynomial rhs = nonzero ? ptilde(I.without(erased), n) * Dyadic(sign_power(s)) : Polynomial(n);
            ctx.check.equal(label, lhs, rhs);
          });
        }
      }
    }
  }
}

void suite_prop6(SuiteContext& ctx) {
  std::vector<int> ks{1, 2};
  if (ctx.opts.n) {
    if (*ctx.opts.n % 2 != 0) {
      throw RangeError("this identity lives on an even number of variables");
    }
    ks = {*ctx.opts.n / 2};
  }
  std::string params = "k in {";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    params += (i ? "," : "") + std::to_string(ks[i]);
  }
  ctx.check.note(params + "}, all Q~_I with I in rho(2k)");
  for (int k : ks) {
    const int n = 2 * k;
    for (const auto& I : strict_partitions_in_staircase(n)) {
      const std::string label = "k=" + std::to_string(k) + " Q~" + I.to_string();
      ctx.check.guarded(label, [&] {
        const Polynomial f = qtilde(I, n);
        Polynomial lhs = nabla_D(f, k, n);
        Polynomial rhs = nabla_B(f * x_product(1, n, n), n, n) + nabla_B(f * x_product(1, n - 1, n), n - 1, n);
        ctx.check.equal(label, lhs, rhs);
      });
    }
  }
}

void suite_cor8(SuiteContext& ctx) {
  std::vector<std::pair<int, int>> pairs{{1, 3}, {1, 4}, {2, 5}};
  if (ctx.opts.n) {
    pairs.clear();
    for (int k = 1; 2 * k <= *ctx.opts.n; ++k) {
      pairs.emplace_back(k, *ctx.opts.n);
    }
  }
  std::string params = "(k,n) in {";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    params += (i ? "," : "") + std::string("(") + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  }
  ctx.check.note(params + "}, spanning set s_lambda(x_1..x_2k) Q~_I(x_1..x_n)");
  for (const auto& [k, n] : pairs) {
    const int m = 2 * k;
    std::vector<Partition> box;
    for (int d = 0; d <= m * (n - m); ++d) {
      for (auto& lam : partitions_in_box(d, m, n - m)) {
        box.push_back(lam);
      }
    }
    for (const auto& lam : box) {
      const Polynomial s = schur_S(lam, m, n);
      for (const auto& I : strict_partitions_in_staircase(n)) {
        const std::string label =
            "k=" + std::to_string(k) + " n=" + std::to_string(n) + " s" + lam.to_string() + " Q~" + I.to_string();
        ctx.check.guarded(label, [&] {
          const Polynomial f = s * qtilde(I, n);
          Polynomial lhs = nabla_D(f, k, n);
          Polynomial second = nabla_B(f * x_product(1, m - 1, n), m - 1, n);
          for (int i = 1; i <= n - m; ++i) {
            second = apply_simple(second, Letter::simple(i));
          }
          Polynomial rhs = nabla_B(f * x_product(1, m, n), m, n) + second;
          ctx.check.equal(label, lhs, rhs);
        });
      }
    }
  }
}

void grassmannian_cases(SuiteContext& ctx, GroupType t, const std::vector<int>& ns) {
  for (int n : ns) {
    const int k = staircase_size(t, n);
    const int c = t == GroupType::D ? n * (n - 1) / 2 : n * (n + 1) / 2;
    const std::string tag = std::string(1, to_char(t)) + " n=" + std::to_string(n);
    const Polynomial top = staircase_monomial(n) * ptilde(staircase(k), n);
    const auto group = enumerate_group(t, n);
    for (const auto& I : strict_partitions_in_staircase(k)) {
      const std::string label = tag + " I=" + I.to_string();
      ctx.check.guarded(label, [&] {
        const Polynomial expected = ptilde(I, n) * Dyadic(sign_power(I.size() + c));
        ctx.check.equal(label + " presentation", apply_element(top, v_of_I(I, n, t), t), expected);
        ctx.check.equal(label + " maximal Grassmannian", schubert_X(grassmannian_element(I, n, t), t, n), expected);
        const Polynomial p = ptilde(I, n);
        const SignedPermutation dual = w_of_I(I, n, t);
        int hits = 0;
        for (const auto& w : group) {
          if (length(w, t) != I.size()) {
            continue;
          }
          Polynomial v = apply_element(p, w, t);
          if (!v.is_zero()) {
            ++hits;
            ctx.check.holds(label + " dual element", w == dual, w.to_string(), dual.to_string());
            ctx.check.equal(label + " dual value", v, constant(sign_power(I.size()), n));
          }
        }
        ctx.check.equal(label + " number of dual elements", hits, 1);
      });
    }
  }
}

void suite_thm15(SuiteContext& ctx) {
  const auto ns = ctx.ranks(2, 4);
  ctx.check.note(range_text(ns) + ", type D");
  grassmannian_cases(ctx, GroupType::D, ns);
}

void suite_prop17(SuiteContext& ctx) {
  const auto ns = ctx.ranks(3, 4);
  ctx.check.note(range_text(ns) + ", all strict I in rho(n-1) with at least two parts");
  for (int n : ns) {
    for (const auto& I : strict_partitions_in_staircase(n - 1)) {
      if (I.length() < 2) {
        continue;
      }
      const std::string label = "n=" + std::to_string(n) + " I=" + I.to_string();
      ctx.check.guarded(label, [&] {
        std::vector<Letter> letters{Letter::heart()};
        for (int i = 2; i <= I[0]; ++i) {
          letters.push_back(Letter::simple(i));
        }
        for (int i = 1; i <= I[1]; ++i) {
          letters.push_back(Letter::simple(i));
        }
        std::vector<int> rest(I.parts().begin() + 2, I.parts().end());
        ctx.check.equal(label, apply_word(ptilde(I, n), GeneratorWord(letters, n)),
                        ptilde(Partition(rest), n) * Dyadic(sign_power(I[0] + I[1])));
      });
    }
  }
}

}  // namespace schubop::detail
