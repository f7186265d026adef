#include "lambdakit/count.hpp"

#include <mutex>
#include <vector>

#include "lambdakit/error.hpp"

namespace lambdakit {
namespace {

std::mutex g_factorial_mutex;
std::vector<Count> g_factorials{Count{1}};

std::mutex g_pascal_mutex;
std::vector<std::vector<Count>> g_pascal{{Count{1}}};

}  // namespace

std::string to_string(const Count& value) { return value.str(); }

Count count_from_string(const std::string& digits) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    fail(ErrorCode::kParseError, "not a decimal count: '" + digits + "'");
  }
  return Count{digits};
}

Count factorial(std::uint32_t n) {
  std::lock_guard lock(g_factorial_mutex);
  while (g_factorials.size() <= n) {
    g_factorials.push_back(g_factorials.back() * g_factorials.size());
  }
  return g_factorials[n];
}

Count binomial(std::uint32_t n, std::uint32_t r) {
  if (r > n) return 0;
  std::lock_guard lock(g_pascal_mutex);
  while (g_pascal.size() <= n) {
    const auto& prev = g_pascal.back();
    std::vector<Count> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t i = 1; i + 1 < next.size(); ++i) next[i] = prev[i - 1] + prev[i];
    g_pascal.push_back(std::move(next));
  }
  return g_pascal[n][r];
}

Count exact_div(const Count& numerator, const Count& denominator, const char* what) {
  if (denominator == 0) fail(ErrorCode::kInternalFault, std::string(what) + ": division by zero");
  Count quotient;
  Count remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    fail(ErrorCode::kInternalFault, std::string(what) + ": " + numerator.str() +
                                        " is not divisible by " + denominator.str());
  }
  return quotient;
}

}  // namespace lambdakit
