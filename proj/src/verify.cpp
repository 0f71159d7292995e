#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "schubop/ptilde.hpp"
#include "schubop/schubert.hpp"
#include "verify_internal.hpp"

namespace schubop {

namespace detail {

void Checker::equal(const std::string& inputs, const Polynomial& lhs, const Polynomial& rhs) {
  ++report_.cases;
  if (lhs != rhs) {
    report_.failures.push_back({inputs, to_text(lhs), to_text(rhs)});
  }
}

void Checker::equal(const std::string& inputs, long long lhs, long long rhs) {
  ++report_.cases;
  if (lhs != rhs) {
    report_.failures.push_back({inputs, std::to_string(lhs), std::to_string(rhs)});
  }
}

void Checker::holds(const std::string& inputs, bool ok, const std::string& lhs, const std::string& rhs) {
  ++report_.cases;
  if (!ok) {
    report_.failures.push_back({inputs, lhs, rhs});
  }
}

void Checker::guarded(const std::string& inputs, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    ++report_.cases;
    report_.failures.push_back({inputs, std::string("error: ") + e.what(), "no error"});
  }
}

std::vector<int> SuiteContext::ranks(int lo, int hi) const {
  if (opts.n) {
    return {*opts.n};
  }
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) {
    out.push_back(n);
  }
  return out;
}

std::string range_text(const std::vector<int>& ns) {
  std::string s = "n in {";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    s += (i ? "," : "") + std::to_string(ns[i]);
  }
  return s + "}";
}

Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> expo(0, max_degree);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> shift(-3, 2);
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

std::vector<std::vector<int>> staircase_vectors(int n) {
  std::vector<std::vector<int>> out{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& a : out) {
      for (int v = 0; v <= n - 1 - i; ++v) {
        auto b = a;
        b[static_cast<std::size_t>(i)] = v;
        next.push_back(b);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> increasing_sequences(int k, int top) {
  std::vector<std::vector<int>> out;
  if (top < 0) {
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int pos, int low) {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int v = low; v <= top; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

int weight(const std::vector<int>& a) {
  int s = 0;
  for (int v : a) {
    s += v;
  }
  return s;
}

std::string vec_text(const std::vector<int>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += (i ? "," : "") + std::to_string(a[i]);
  }
  return s + "]";
}

Polynomial constant(long long c, int n) { return Polynomial::constant(Dyadic(c), n); }

Polynomial x_product(int from, int to, int n) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i = from; i <= to; ++i) {
    e[static_cast<std::size_t>(i - 1)] = 1;
  }
  return Polynomial::monomial(e);
}

Polynomial x_power(int i, int p, int n) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = p;
  return Polynomial::monomial(e);
}

namespace {

int coxeter_order(Letter a, Letter b) {
  auto idx = [](Letter l) { return l.kind == Letter::Kind::Simple ? l.index : 0; };
  const bool a_simple = a.kind == Letter::Kind::Simple;
  const bool b_simple = b.kind == Letter::Kind::Simple;
  if (a_simple && b_simple) {
    return std::abs(a.index - b.index) == 1 ? 3 : 2;
  }
  const Letter special = a_simple ? b : a;
  const int other = a_simple ? idx(a) : idx(b);
  if (special.kind == Letter::Kind::Heart) {
    return other == 2 ? 3 : 2;
  }
  return other == 1 ? 4 : 2;
}

GeneratorWord alternating(Letter a, Letter b, int m, int n) {
  std::vector<Letter> out;
  for (int i = 0; i < m; ++i) {
    out.push_back(i % 2 == 0 ? a : b);
  }
  return GeneratorWord(std::move(out), n);
}

}  // namespace

void suite_coxeter(SuiteContext& ctx) {
  const auto ns = ctx.ranks(1, 4);
  ctx.check.note(range_text(ns) + ", 200 random polynomials per operator relation");
  for (int n : ns) {
    long long fact = 1;
    for (int i = 2; i <= n; ++i) {
      fact *= i;
    }
    const long long expected[3] = {fact, fact << n, fact << (n - 1)};
    const GroupType types[3] = {GroupType::A, GroupType::B, GroupType::D};
    for (int t = 0; t < 3; ++t) {
      ctx.check.guarded("order of group " + std::string(1, to_char(types[t])) + std::to_string(n), [&] {
        ctx.check.equal("order of group " + std::string(1, to_char(types[t])) + std::to_string(n),
                        static_cast<long long>(enumerate_group(types[t], n).size()), expected[t]);
      });
    }
    // relations among group elements
    for (GroupType t : types) {
      const auto gens = generators(t, n);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
          const SignedPermutation st = compose(generator(gens[i], n), generator(gens[j], n));
          const int m = i == j ? 1 : coxeter_order(gens[i], gens[j]);
          SignedPermutation p = st;
          int order = 1;
          while (!p.is_identity() && order <= 6) {
            p = compose(p, st);
            ++order;
          }
          ctx.check.equal(std::string(1, to_char(t)) + std::to_string(n) + " order of s" + gens[i].to_string() + " s" +
                              gens[j].to_string(),
                          order, m);
        }
      }
    }
    // the same relations as operators, with the extra letter 0c braiding like 0
    std::vector<Letter> letters{Letter::zero(), Letter::zero_c()};
    if (n >= 2) {
      letters.push_back(Letter::heart());
    }
    for (int i = 1; i < n; ++i) {
      letters.push_back(Letter::simple(i));
    }
    auto rng = ctx.rng(static_cast<std::uint64_t>(n));
    for (std::size_t i = 0; i < letters.size(); ++i) {
      for (std::size_t j = i; j < letters.size(); ++j) {
        const Letter a = letters[i];
        const Letter b = letters[j];
        const bool a_low = a.kind != Letter::Kind::Simple;
        const bool b_low = b.kind != Letter::Kind::Simple;
        if (i != j && a_low && b_low) {
          continue;  // no common Coxeter system
        }
        GeneratorWord left;
        GeneratorWord right;
        if (i == j) {
          left = alternating(a, a, 2, n);
        } else {
          const int m = coxeter_order(a, b);
          left = alternating(a, b, m, n);
          right = alternating(b, a, m, n);
        }
        for (int trial = 0; trial < 200; ++trial) {
          const Polynomial f = random_polynomial(rng, n, 6, 5);
          const std::string label = "n=" + std::to_string(n) + " f=" + to_text(f) + " word " + left.to_string();
          if (i == j) {
            ctx.check.equal(label, apply_word(f, left), Polynomial(n));
          } else {
            ctx.check.equal(label + " vs " + right.to_string(), apply_word(f, left), apply_word(f, right));
          }
        }
      }
    }
  }
}

void suite_welldef(SuiteContext& ctx) {
  std::vector<std::pair<GroupType, int>> groups;
  if (ctx.opts.n) {
    groups = {{GroupType::A, *ctx.opts.n}, {GroupType::B, *ctx.opts.n}, {GroupType::D, *ctx.opts.n}};
  } else {
    groups = {{GroupType::B, 3}, {GroupType::D, 4}};
  }
  std::string params;
  for (const auto& [t, n] : groups) {
    params += (params.empty() ? "" : ", ") + std::string(1, to_char(t)) + std::to_string(n);
  }
  ctx.check.note(params + ", up to 3 reduced words per element, 2 random polynomials each");
  auto rng = ctx.rng(11);
  for (const auto& [t, n] : groups) {
    for (const auto& w : enumerate_group(t, n)) {
      const auto words = reduced_words(w, t, 3);
      const std::string label = std::string(1, to_char(t)) + std::to_string(n) + " w=" + w.to_string();
      bool words_ok = !words.empty();
      for (const auto& word : words) {
        words_ok = words_ok && is_reduced(word, t) && evaluate(word) == w &&
                   static_cast<int>(word.length()) == length(w, t);
      }
      ctx.check.holds(label + " reduced words", words_ok);
      for (int trial = 0; trial < 2; ++trial) {
        const Polynomial f = random_polynomial(rng, n, 5, 5);
        const Polynomial first = apply_word(f, words.front());
        for (std::size_t i = 1; i < words.size(); ++i) {
          ctx.check.equal(label + " f=" + to_text(f) + " words " + words.front().to_string() + " / " +
                              words[i].to_string(),
                          apply_word(f, words[i]), first);
        }
      }
    }
  }
}

void suite_dualityA(SuiteContext& ctx) {
  const auto ns = ctx.ranks(3, 3);
  ctx.check.note(range_text(ns) + ", all alpha, beta in the staircase");
  for (int n : ns) {
    const auto all = staircase_vectors(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const std::string label = "n=" + std::to_string(n) + " alpha=" + vec_text(a) + " beta=" + vec_text(b);
        ctx.check.guarded(label, [&] {
          Polynomial v = pair(schubert_Y_omega(a, n), schubert_Y(involution_prime(b, n), n), PairingForm::A, n);
          ctx.check.equal(label + " (Y^w, Y_b')", v, a == b ? constant(sign_power(weight(a)), n) : Polynomial(n));
          if (weight(a) == weight(b)) {
            std::vector<int> c(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
              c[static_cast<std::size_t>(i)] = n - 1 - i - b[static_cast<std::size_t>(i)];
            }
            Polynomial u = pair(schubert_Y(a, n), schubert_Y(c, n), PairingForm::A, n);
            ctx.check.equal(label + " (Y_a, Y_rho-b)", u, a == b ? constant(1, n) : Polynomial(n));
          }
        });
      }
    }
  }
}

namespace {

void symmetric_duality(SuiteContext& ctx, GroupType t, int n) {
  const int k = staircase_size(t, n);
  const int c = t == GroupType::D ? n * (n - 1) / 2 : n * (n + 1) / 2;
  const PairingForm sym_form = t == GroupType::D ? PairingForm::D_v : PairingForm::B_nabla;
  const PairingForm full_form = t == GroupType::D ? PairingForm::D_full : PairingForm::B_full;
  const auto parts = strict_partitions_in_staircase(k);
  for (const auto& I : parts) {
    for (const auto& J : parts) {
      const std::string label =
          std::string(1, to_char(t)) + " n=" + std::to_string(n) + " I=" + I.to_string() + " J=" + J.to_string();
      ctx.check.guarded(label, [&] {
        Polynomial v = pair(ptilde(I, n), ptilde(complement_in_staircase(J, k), n), sym_form, n);
        ctx.check.equal(label, v, I == J ? constant(sign_power(c), n) : Polynomial(n));
      });
    }
  }
  const auto all = staircase_vectors(n);
  std::vector<Polynomial> left;
  std::vector<Polynomial> right;
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& a : all) {
    for (const auto& I : parts) {
      left.push_back(schubert_Y_omega(a, n) * ptilde(I, n));
      right.push_back(schubert_Y(involution_prime(a, n), n) * ptilde(complement_in_staircase(I, k), n));
      names.push_back(vec_text(a) + I.to_string());
      weights.push_back(weight(a));
    }
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const std::string label =
          std::string(1, to_char(t)) + " n=" + std::to_string(n) + " full " + names[i] + " / " + names[j];
      ctx.check.guarded(label, [&] {
        ctx.check.equal(label, pair(left[i], right[j], full_form, n),
                        i == j ? constant(sign_power(weights[i] + c), n) : Polynomial(n));
      });
    }
  }
}

}  // namespace

void suite_dualityD(SuiteContext& ctx) {
  const auto ns = ctx.ranks(2, 3);
  ctx.check.note(range_text(ns) + ", symmetric and full pairings");
  for (int n : ns) {
    symmetric_duality(ctx, GroupType::D, n);
  }
}

void suite_dualityB(SuiteContext& ctx) {
  const auto ns = ctx.ranks(2, 3);
  ctx.check.note(range_text(ns) + ", symmetric and full pairings");
  for (int n : ns) {
    symmetric_duality(ctx, GroupType::B, n);
  }
}

void suite_stability(SuiteContext& ctx) {
  const auto ns = ctx.ranks(2, 2);
  ctx.check.note(range_text(ns) + " inside n+1, types B and D");
  for (int n : ns) {
    for (GroupType t : {GroupType::B, GroupType::D}) {
      for (const auto& w : enumerate_group(t, n)) {
        const std::string label = std::string(1, to_char(t)) + " n=" + std::to_string(n) + " w=" + w.to_string();
        ctx.check.guarded(label, [&] {
          const bool ok = stability_check(w, t, n);
          std::string lhs = "stable";
          std::string rhs = "stable";
          if (!ok) {
            Polynomial big = schubert_X(w.embedded(n + 1), t, n + 1) * Dyadic(identity_sign(t, n + 1));
            lhs = to_text(restrict_alphabet(set_zero(big, n + 1), n));
            rhs = to_text(schubert_X(w, t, n) * Dyadic(identity_sign(t, n)));
          }
          ctx.check.holds(label, ok, lhs, rhs);
        });
      }
    }
  }
}

namespace {

Polynomial Qt(std::vector<int> parts, int n) { return qtilde(Partition(std::move(parts)), n); }
Polynomial Pt(std::vector<int> parts, int n) { return ptilde(Partition(std::move(parts)), n); }
Polynomial Ys(std::vector<int> alpha, int n) { return schubert_Y_stable(alpha, n); }

}  // namespace

void suite_examples(SuiteContext& ctx) {
  ctx.check.note("every numbered worked example");
  auto& c = ctx.check;
  auto golden = [&](const std::string& label, const std::function<Polynomial()>& lhs,
                    const std::function<Polynomial()>& rhs) {
    c.guarded(label, [&] { c.equal(label, lhs(), rhs()); });
  };
  // operator over nabla B written with a leading monomial and a trailing string
  auto omega = [](const Polynomial& f, int mult, int k, int n, int tail) {
    Polynomial g = nabla_B(f * x_product(1, mult, n), k, n);
    for (int i = 1; i <= tail; ++i) {
      g = apply_simple(g, Letter::simple(i));
    }
    return g;
  };

  golden("Ex5 k=2", [] { return nabla_B(Qt({5, 4, 3, 2, 1}, 7) * Ys({2, 5}, 7), 2, 7); },
         [] { return Qt({4, 3, 2}, 7) * Dyadic(4); });
  golden("Ex5 k=3", [] { return nabla_B(Qt({7, 5, 4, 3, 1}, 7) * Ys({2, 3, 4}, 7), 3, 7); },
         [] { return Qt({7, 4}, 7) * Dyadic(-8); });

  for (const auto& I : strict_partitions_in_staircase(2)) {
    golden("Ex7 Sym(2) on Qt" + I.to_string(), [&] { return apply_simple(qtilde(I, 2), Letter::heart()); },
           [&] {
             return nabla_B(qtilde(I, 2) * x_product(1, 2, 2), 2, 2) + nabla_B(qtilde(I, 2) * x_product(1, 1, 2), 1, 2);
           });
  }
  c.holds("Ex7 word of nablaD(2) in rank 4",
          nabla_D_word(2, 4) == GeneratorWord::parse("h 2 3 1 2 h", 4), nabla_D_word(2, 4).to_string(), "h 2 3 1 2 h");
  for (const auto& I : strict_partitions_in_staircase(4)) {
    golden("Ex7 Sym(4) on Qt" + I.to_string(), [&] { return nabla_D(qtilde(I, 4), 2, 4); },
           [&] {
             return nabla_B(qtilde(I, 4) * x_product(1, 4, 4), 4, 4) + nabla_B(qtilde(I, 4) * x_product(1, 3, 4), 3, 4);
           });
  }

  golden("Ex10(i) Qt(5,3,2,1)", [] { return nabla_B(Qt({5, 3, 2, 1}, 5) * x_power(1, 5, 5), 1, 5); },
         [] { return Qt({5, 3, 2, 1}, 5) * Dyadic(-2); });
  golden("Ex10(i) Qt(5,2,1)", [] { return nabla_B(Qt({5, 2, 1}, 5) * x_power(1, 5, 5), 1, 5); },
         [] { return Polynomial(5); });
  golden("Ex10(ii) Qt(7,6,4,1)", [] { return nabla_B(Qt({7, 6, 4, 1}, 7) * Ys({1, 6}, 7), 2, 7); },
         [] { return Qt({7, 4, 1}, 7) * Dyadic(-4); });
  golden("Ex10(ii) Qt(7,6,4,3,1)", [] { return nabla_B(Qt({7, 6, 4, 3, 1}, 7) * Ys({1, 6}, 7), 2, 7); },
         [] { return Polynomial(7); });
  golden("Ex10(iii) Y[1,2,2,4]", [] { return nabla_B(Qt({7, 6, 4, 3, 2, 1}, 7) * Ys({1, 2, 2, 4}, 7), 4, 7); },
         [] { return Qt({7, 2, 1}, 7) * Dyadic(16); });
  golden("Ex10(iii) Y[1,3,4,4]", [] { return nabla_B(Qt({7, 6, 4, 3, 2, 1}, 7) * Ys({1, 3, 4, 4}, 7), 4, 7); },
         [] { return Qt({7, 4, 2}, 7) * Dyadic(-16); });

  golden("Ex12(i) Y[1,3]", [] { return nabla_D(Pt({5, 4, 3, 2, 1}, 7) * Ys({1, 3}, 7), 1, 7); },
         [] { return -Pt({4, 3, 1}, 7); });
  golden("Ex12(i) Y[2,5]", [] { return nabla_D(Pt({6, 4, 3, 2, 1}, 7) * Ys({2, 5}, 7), 1, 7); },
         [] { return Pt({6, 3, 2, 1}, 7); });
  golden("Ex12(ii) Y[1,1,1,2]", [] { return nabla_D(Pt({6, 5, 4, 3, 2, 1}, 7) * Ys({1, 1, 1, 2}, 7), 2, 7); },
         [] { return -Pt({6, 2}, 7); });
  golden("Ex12(ii) Y[1,1,1,3]", [] { return nabla_D(Pt({6, 5, 4, 3, 2, 1}, 7) * Ys({1, 1, 1, 3}, 7), 2, 7); },
         [] { return Pt({6, 2, 1}, 7); });

  golden("Ex13(i) total", [] { return nabla_D(Pt({3, 2}, 5) * Ys({1, 3}, 5), 1, 5); }, [] { return Pt({2}, 5); });
  golden("Ex13(i) first operator", [&] { return omega(Qt({3, 2}, 5) * Ys({1, 3}, 5), 2, 2, 5, 0); },
         [] { return Qt({2}, 5) * Dyadic(4); });
  golden("Ex13(i) first operator shifted", [] { return nabla_B(Qt({3, 2}, 5) * Ys({2, 4}, 5), 2, 5); },
         [] { return Qt({2}, 5) * Dyadic(4); });
  golden("Ex13(i) second operator", [&] { return omega(Qt({3, 2}, 5) * Ys({1, 3}, 5), 1, 1, 5, 3); },
         [] { return Qt({2}, 5) * Dyadic(-2); });
  golden("Ex13(i) second operator shifted", [] { return nabla_B(Qt({3, 2}, 5) * Ys({2}, 5), 1, 5); },
         [] { return Qt({2}, 5) * Dyadic(-2); });

  golden("Ex13(ii) total", [] { return nabla_D(Pt({6, 5, 4, 3, 2, 1}, 7) * Ys({0, 1, 2, 2}, 7), 2, 7); },
         [] { return -Pt({5, 3}, 7); });
  golden("Ex13(ii) first operator", [&] { return omega(Qt({6, 5, 4, 3, 2, 1}, 7) * Ys({0, 1, 2, 2}, 7), 4, 4, 7, 0); },
         [] { return Qt({5, 3}, 7) * Dyadic(-16); });
  golden("Ex13(ii) first operator shifted",
         [] { return nabla_B(Qt({6, 5, 4, 3, 2, 1}, 7) * Ys({1, 2, 3, 3}, 7), 4, 7); },
         [] { return Qt({5, 3}, 7) * Dyadic(-16); });
  golden("Ex13(ii) second operator vanishes",
         [&] { return omega(Qt({6, 5, 4, 3, 2, 1}, 7) * Ys({0, 1, 2, 2}, 7), 3, 3, 7, 3); },
         [] { return Polynomial(7); });

  golden("Ex13(iii) total", [] { return nabla_D(Pt({6, 5, 4, 3, 2, 1}, 7) * Ys({1, 1, 2, 3}, 7), 2, 7); },
         [] { return -Pt({6, 3, 1}, 7); });
  golden("Ex13(iii) first operator", [&] { return omega(Qt({6, 5, 4, 3, 2, 1}, 7) * Ys({1, 1, 2, 3}, 7), 4, 4, 7, 0); },
         [] { return Qt({6, 3, 1}, 7) * Dyadic(-16); });
  golden("Ex13(iii) first operator shifted",
         [] { return nabla_B(Qt({6, 5, 4, 3, 2, 1}, 7) * Ys({2, 2, 3, 4}, 7), 4, 7); },
         [] { return Qt({6, 3, 1}, 7) * Dyadic(-16); });
  golden("Ex13(iii) second operator", [&] { return omega(Qt({6, 5, 4, 3, 2, 1}, 7) * Ys({1, 1, 2, 3}, 7), 3, 3, 7, 3); },
         [] { return Qt({6, 3, 1}, 7) * Dyadic(8); });
  golden("Ex13(iii) second operator shifted",
         [] { return nabla_B(Qt({6, 5, 4, 3, 2, 1}, 7) * Ys({2, 2, 3}, 7), 3, 7); },
         [] { return Qt({6, 3, 1}, 7) * Dyadic(8); });
}

}  // namespace detail

namespace {

struct Entry {
  const char* name;
  detail::Suite run;
};

const std::vector<Entry>& registry() {
  using namespace detail;
  static const std::vector<Entry> table = {
      {"coxeter", suite_coxeter},     {"welldef", suite_welldef},     {"fact4", suite_fact4},
      {"thm9", suite_thm9},           {"thm11", suite_thm11},         {"prop6", suite_prop6},
      {"cor8", suite_cor8},           {"dualityA", suite_dualityA},   {"dualityB", suite_dualityB},
      {"dualityD", suite_dualityD},   {"kernels", suite_kernels},     {"thm15", suite_thm15},
      {"thm18", suite_thm18},         {"thm21", suite_thm21},         {"thm23", suite_thm23},
      {"prop17", suite_prop17},       {"prop20", suite_prop20},       {"prop22", suite_prop22},
      {"prop25", suite_prop25},       {"prop28", suite_prop28},       {"lemma27", suite_lemma27},
      {"fact26", suite_fact26},       {"stability", suite_stability}, {"examples", suite_examples},
  };
  return table;
}

std::string escape_text(const std::string& s, std::size_t limit) {
  if (s.size() <= limit) {
    return s;
  }
  return s.substr(0, limit) + "...";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) {
      out.emplace_back(e.name);
    }
    return out;
  }();
  return names;
}

VerificationReport run_suite(std::string_view name, const VerifyOptions& opts) {
  const auto& table = registry();
  auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return name == e.name; });
  if (it == table.end()) {
    throw RangeError("unknown suite '" + std::string(name) + "'");
  }
  if (opts.n && (*opts.n < 1 || *opts.n > opts.max_n)) {
    throw RangeError("n=" + std::to_string(*opts.n) + " is outside 1.." + std::to_string(opts.max_n));
  }
  VerificationReport report;
  report.suite = it->name;
  detail::Checker checker(report);
  detail::SuiteContext ctx{checker, opts};
  const auto start = std::chrono::steady_clock::now();
  it->run(ctx);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["params"] = params;
  j["cases"] = cases;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    j["failures"].push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["seconds"] = seconds;
  j["ok"] = ok();
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << suite << ": " << cases << " cases, " << failures.size() << " failures (" << params << ")";
  out.precision(3);
  out << std::fixed << " in " << seconds << "s\n";
  for (const auto& f : failures) {
    out << "  FAIL " << f.inputs << "\n    lhs: " << escape_text(f.lhs, 400) << "\n    rhs: " << escape_text(f.rhs, 400)
        << "\n";
  }
  return out.str();
}

}  // namespace schubop
