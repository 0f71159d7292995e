#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "schubop/ptilde.hpp"
#include "schubop/schubert.hpp"
#include "schubop/symfun.hpp"
#include "verify_internal.hpp"

namespace schubop::detail {

namespace {

constexpr int kCap = 8;

std::vector<Partition> partitions_upto(int m) {
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
  for (const auto& lam : partitions_upto(m)) {
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

// d_from ... d_to, or the empty word.
GeneratorWord ascending(int from, int to, int n) {
  std::vector<Letter> letters;
  for (int i = from; i <= to; ++i) {
    letters.push_back(Letter::simple(i));
  }
  return GeneratorWord(std::move(letters), n);
}

// prod_{i <= q < j} (x_i + x_j)
Polynomial cross_product(int q, int n) {
  Polynomial p = constant(1, n);
  for (int i = 1; i <= q; ++i) {
    for (int j = q + 1; j <= n; ++j) {
      p *= Polynomial::variable(i, n) + Polynomial::variable(j, n);
    }
  }
  return p;
}

std::string sym_label(const SymFun& f) { return f.to_string(); }

// P of a sequence through the skew-symmetry of the Pfaffian rule.
Polynomial sequence_P(std::vector<int> s, int n) {
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
  return realize(schur_PQ(StrictPartition(s), kCap, SchurKind::P), n) * Dyadic(sign);
}

}  // namespace

void suite_prop25(SuiteContext& ctx) {
  ctx.check.note("strict |I| <= 6 at degree cap 8");
  for (Vertex v : {Vertex::Us, Vertex::Ue, Vertex::Ve}) {
    const SymFun one = SymFun::constant(1, kCap);
    ctx.check.holds("vertex fixes 1", vertex(v, one) == one, sym_label(vertex(v, one)), "1");
  }
  for (const auto& I : strict_upto(6)) {
    const bool even = I.length() % 2 == 0;
    const SymFun qt = qtilde_symfun(I, kCap);
    const SymFun lhs_q = vertex(Vertex::Us, qt);
    const SymFun rhs_q = even ? qt : SymFun(kCap);
    ctx.check.holds("Q~" + I.to_string() + " under U^s", lhs_q == rhs_q, sym_label(lhs_q), sym_label(rhs_q));
    const SymFun p = schur_PQ(I, kCap, SchurKind::P);
    const SymFun lhs_p = vertex(Vertex::Ve, p);
    const SymFun rhs_p = even ? p : SymFun(kCap);
    ctx.check.holds("P" + I.to_string() + " under V^e", lhs_p == rhs_p, sym_label(lhs_p), sym_label(rhs_p));
  }
}

void suite_lemma27(SuiteContext& ctx) {
  const auto ns = ctx.ranks(2, 4);
  ctx.check.note(range_text(ns) + ", spanning set e_lambda with |lambda| <= 6; companion identities for n <= 4");
  const auto lams = partitions_upto(6);
  for (int n : ns) {
    const GeneratorWord tail = ascending(1, n - 1, n);
    const Polynomial xn = x_power(1, n, n);
    for (const auto& lam : lams) {
      const std::string label = "n=" + std::to_string(n) + " e" + lam.to_string();
      ctx.check.guarded(label, [&] {
        const SymFun f = e_product(lam);
        Polynomial lhs = realize(f - vertex(Vertex::Us, f), n);
        Polynomial rhs = apply_word(apply_simple(realize(f, n), Letter::zero_c()) * xn, tail);
        ctx.check.equal(label + " 1 - U^s", lhs, rhs);
      });
    }
  }
  // d0^C as a Foulkes series
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lam : lams) {
      const std::string label = "n=" + std::to_string(n) + " e" + lam.to_string() + " d0C series";
      ctx.check.guarded(label, [&] {
        const SymFun f = e_product(lam);
        Polynomial series(n);
        for (int k = 1; k <= lam.size(); ++k) {
          Polynomial t = realize(foulkes_D(generator(Generator::PRow, k, kCap), f), n) * x_power(1, k - 1, n);
          series += k % 2 == 1 ? t : -t;
        }
        ctx.check.equal(label, series, apply_simple(realize(f, n), Letter::zero_c()));
      });
    }
  }
  // powers of x_1 under the ascending string
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= 8; ++p) {
      const std::string label = "n=" + std::to_string(n) + " x1^" + std::to_string(p) + " ascending";
      ctx.check.guarded(label, [&] {
        const int k = p - n + 1;
        ctx.check.equal(label, apply_word(x_power(1, p, n), ascending(1, n - 1, n)),
                        k < 0 ? Polynomial(n) : schur_S(Partition(std::vector<int>{k}), n));
      });
    }
  }
  // commuting powers of x_1 past d0^C
  auto rng = ctx.rng(27);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const Polynomial f = random_polynomial(rng, n, 4, 4);
    for (int m = 0; m <= 6; ++m) {
      const std::string label = "f=" + to_text(f) + " m=" + std::to_string(m);
      const Polynomial xm = x_power(1, m, n);
      Polynomial lhs = apply_simple(f * xm, Letter::zero_c());
      Polynomial moved = apply_simple(f, Letter::zero_c()) * xm;
      ctx.check.equal(label, lhs, m % 2 == 0 ? moved : f * x_power(1, m - 1, n) - moved);
    }
  }
}

void suite_prop28(SuiteContext& ctx) {
  const auto ns = ctx.ranks(3, 5);
  ctx.check.note(range_text(ns) + ", all strict I in rho(n)");
  for (int n : ns) {
    const GeneratorWord w = nabla_B_word(1, n);
    for (const auto& I : strict_partitions_in_staircase(n)) {
      const std::string label = "n=" + std::to_string(n) + " I=" + I.to_string();
      ctx.check.guarded(label, [&] {
        const Polynomial q = qtilde(I, n);
        ctx.check.equal(label, apply_word(q * x_power(1, n, n), w),
                        (n + I.length()) % 2 == 1 ? q * Dyadic(-2) : Polynomial(n));
      });
    }
  }
}

void suite_fact26(SuiteContext& ctx) {
  const auto ns = ctx.ranks(2, 4);
  ctx.check.note(range_text(ns) + ", strict |I| <= 6 for the shifted alphabet, |I|,|J| <= 4 for the rectangle");
  for (int n : ns) {
    const Polynomial prod = cross_product(1, n);
    const GeneratorWord tail = ascending(1, n - 1, n);
    for (const auto& I : strict_upto(6)) {
      const std::string label = "n=" + std::to_string(n) + " P" + I.to_string() + " shifted alphabet";
      ctx.check.guarded(label, [&] {
        const SymFun p = schur_PQ(I, kCap, SchurKind::P);
        Polynomial lhs = apply_word(embed(realize(p, n - 1), n, 1) * prod, tail);
        const bool odd = (n - I.length()) % 2 != 0;
        ctx.check.equal(label, lhs, odd ? realize(p, n) * Dyadic(sign_power(n - 1)) : Polynomial(n));
      });
    }
    for (int k = 1; k <= 5; ++k) {
      const std::string label = "n=" + std::to_string(n) + " row function k=" + std::to_string(k);
      ctx.check.guarded(label, [&] {
        ctx.check.equal(label, apply_word(prod * x_power(1, k, n), tail),
                        realize(generator(Generator::PRow, k, kCap), n));
      });
    }
    const auto small = strict_upto(4);
    for (int q = 1; q < n; ++q) {
      const int r = n - q;
      const Polynomial cross = cross_product(q, n);
      for (const auto& I : small) {
        for (const auto& J : small) {
          const int k = I.length();
          const int h = J.length();
          if (k > q || h > r) {
            continue;
          }
          const std::string label = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " I=" + I.to_string() +
                                    " J=" + J.to_string() + " rectangle";
          ctx.check.guarded(label, [&] {
            Polynomial f = embed(realize(schur_PQ(I, kCap, SchurKind::P), q), n, 0) *
                           embed(realize(schur_PQ(J, kCap, SchurKind::P), r), n, q) * cross;
            std::vector<int> seq = I.parts();
            seq.insert(seq.end(), J.parts().begin(), J.parts().end());
            ctx.check.equal(label, rectangle_apply(f, q, r), sequence_P(seq, n) * Dyadic(d_coefficient(q, r, k, h)));
          });
        }
      }
    }
  }
}

}  // namespace schubop::detail
