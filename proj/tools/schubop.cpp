#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "schubop/error.hpp"
#include "schubop/expr.hpp"
#include "schubop/verify.hpp"

namespace {

int evaluate(const std::string& text, int n, int max_n, const std::string& format, const std::string& expand) {
  if (n > max_n) {
    throw schubop::RangeError("n=" + std::to_string(n) + " exceeds --max-n " + std::to_string(max_n));
  }
  const auto fmt = schubop::parse_output_format(format);
  const auto expr = schubop::Expression::parse(text, n);
  const schubop::Value v = expr.evaluate();
  if (expand.empty()) {
    std::cout << schubop::render(v, fmt) << "\n";
  } else {
    std::cout << schubop::render_expansion(v, n, schubop::parse_group_type(expand), fmt) << "\n";
  }
  return 0;
}

int verify(const std::vector<std::string>& suites, std::optional<int> n, std::uint64_t seed, int max_n,
           const std::string& format) {
  schubop::VerifyOptions opts;
  opts.n = n;
  opts.seed = seed;
  opts.max_n = max_n;
  std::vector<std::string> names = suites;
  if (names.size() == 1 && names.front() == "all") {
    names = schubop::suite_names();
  }
  const bool json = schubop::parse_output_format(format) == schubop::OutputFormat::Json;
  std::size_t failures = 0;
  if (json && names.size() > 1) {
    std::cout << "[\n";
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto report = schubop::run_suite(names[i], opts);
    failures += report.failures.size();
    if (json) {
      std::cout << report.to_json() << (names.size() > 1 && i + 1 < names.size() ? ",\n" : "\n");
    } else {
      std::cout << report.to_text() << std::flush;
    }
  }
  if (json && names.size() > 1) {
    std::cout << "]\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divided differences, orthogonal Schubert polynomials and P~-polynomials"};
  app.require_subcommand(1);

  int max_n = 8;
  std::string format = "plain";
  app.add_option("--max-n", max_n, "Largest rank accepted")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  auto* expand = app.add_subcommand("expand", "Expand a symmetric result in the P~ basis");
  auto* ver = app.add_subcommand("verify", "Run verification suites");

  std::string text;
  int n = 0;
  std::string expand_type;
  for (auto* sub : {eval, expand}) {
    sub->add_option("expression", text, "Expression")->required();
    sub->add_option("--n", n, "Number of variables")->required()->check(CLI::Range(1, 16));
    sub->add_option("--format", format, "plain, json or latex")
        ->check(CLI::IsMember({"plain", "json", "latex"}))
        ->capture_default_str();
    sub->add_option("--max-n", max_n, "Largest rank accepted");
  }
  eval->add_option("--expand-ptilde", expand_type, "Print the P~ expansion over type B or D invariants")
      ->check(CLI::IsMember({"B", "D"}));
  expand_type.clear();
  std::string expand_kind = "D";
  expand->add_option("--expand-ptilde", expand_kind, "Type of the invariant ring")
      ->check(CLI::IsMember({"B", "D"}))
      ->capture_default_str();

  std::vector<std::string> suites;
  std::optional<int> verify_n;
  std::uint64_t seed = 0;
  ver->add_option("suite", suites, "Suite names, or 'all'")->required();
  ver->add_option("--n", verify_n, "Restrict to one rank");
  ver->add_option("--seed", seed, "Seed for randomized suites")->capture_default_str();
  ver->add_option("--max-n", max_n, "Largest rank accepted");
  ver->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) {
      return evaluate(text, n, max_n, format, expand_type);
    }
    if (*expand) {
      return evaluate(text, n, max_n, format, expand_kind);
    }
    return verify(suites, verify_n, seed, max_n, format);
  } catch (const schubop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
