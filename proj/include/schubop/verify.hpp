#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubop {

struct CaseFailure {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string suite;
  std::string params;  // parameter ranges actually exercised
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  double seconds = 0;

  bool ok() const noexcept { return failures.empty(); }
  std::string to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  /// Overrides the default rank range of a suite.
  std::optional<int> n;
  std::uint64_t seed = 0;
  /// Requests above this rank are refused.
  int max_n = 8;
};

const std::vector<std::string>& suite_names();

/// Throws RangeError for an unknown suite or a rank above max_n.
VerificationReport run_suite(std::string_view name, const VerifyOptions& opts = {});

}  // namespace schubop
