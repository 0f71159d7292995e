#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "schubop/partition.hpp"
#include "schubop/polynomial.hpp"
#include "schubop/verify.hpp"
#include "schubop/weyl.hpp"

namespace schubop::detail {

/// Collects case outcomes for one report.
class Checker {
 public:
  explicit Checker(VerificationReport& report) : report_(report) {}

  void equal(const std::string& inputs, const Polynomial& lhs, const Polynomial& rhs);
  void equal(const std::string& inputs, long long lhs, long long rhs);
  void holds(const std::string& inputs, bool ok, const std::string& lhs = "false", const std::string& rhs = "true");
  /// Runs body as one case; a library error counts as a failure.
  void guarded(const std::string& inputs, const std::function<void()>& body);
  void note(const std::string& params) { report_.params = params; }

 private:
  VerificationReport& report_;
};

struct SuiteContext {
  Checker& check;
  const VerifyOptions& opts;

  /// The requested rank, or lo..hi.
  std::vector<int> ranks(int lo, int hi) const;
  std::mt19937_64 rng(std::uint64_t salt) const { return std::mt19937_64(opts.seed * 0x9e3779b97f4a7c15ULL + salt); }
};

std::string range_text(const std::vector<int>& ns);

Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_terms, int max_degree);

/// Every alpha contained in [n-1, ..., 0].
std::vector<std::vector<int>> staircase_vectors(int n);
/// Weakly increasing sequences of length k with entries in [0, top].
std::vector<std::vector<int>> increasing_sequences(int k, int top);
int weight(const std::vector<int>& a);
std::string vec_text(const std::vector<int>& a);
Polynomial constant(long long c, int n);
Polynomial x_product(int from, int to, int n);
Polynomial x_power(int i, int p, int n);

/// Presentation, maximal Grassmannian value and unique dual element for types B and D.
void grassmannian_cases(SuiteContext& ctx, GroupType t, const std::vector<int>& ns);

using Suite = void (*)(SuiteContext&);

void suite_coxeter(SuiteContext&);
void suite_welldef(SuiteContext&);
void suite_dualityA(SuiteContext&);
void suite_dualityB(SuiteContext&);
void suite_dualityD(SuiteContext&);
void suite_stability(SuiteContext&);
void suite_examples(SuiteContext&);

void suite_fact4(SuiteContext&);
void suite_thm9(SuiteContext&);
void suite_thm21(SuiteContext&);
void suite_thm18(SuiteContext&);
void suite_thm23(SuiteContext&);
void suite_prop20(SuiteContext&);
void suite_prop22(SuiteContext&);
void suite_kernels(SuiteContext&);

void suite_thm11(SuiteContext&);
void suite_prop6(SuiteContext&);
void suite_cor8(SuiteContext&);
void suite_thm15(SuiteContext&);
void suite_prop17(SuiteContext&);

void suite_prop25(SuiteContext&);
void suite_prop28(SuiteContext&);
void suite_lemma27(SuiteContext&);
void suite_fact26(SuiteContext&);

}  // namespace schubop::detail
