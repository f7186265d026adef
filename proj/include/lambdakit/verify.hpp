#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lambdakit {

enum class VerifySuite { kFormulas, kTheorem1, kTheorem2, kTheorem4, kRho, kOracle, kAll };

std::optional<VerifySuite> parse_verify_suite(std::string_view name);
std::string_view to_string(VerifySuite suite);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
};

/// Search-based checks never go past these dimensions regardless of n_max.
inline constexpr std::size_t kVerifyEnumerationLimit = 7;
inline constexpr std::size_t kVerifyRhoLimit = 5;
inline constexpr std::size_t kVerifyExhaustiveLimit = 4;
inline constexpr std::size_t kVerifyLambda2EnumerationLimit = 8;

/// Runs every identity of `suite` up to n_max. Each finished check is passed
/// to `on_check` (if set) before the next one starts.
VerifyReport run_verify(VerifySuite suite, std::size_t n_max, unsigned threads,
                        const std::function<void(const CheckResult&)>& on_check = {});

}  // namespace lambdakit
