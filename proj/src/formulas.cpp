#include "lambdakit/formulas.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "lambdakit/error.hpp"

namespace lambdakit {
namespace {

void require_positive(std::size_t n, const char* what) {
  if (n == 0) fail(ErrorCode::kInvalidParameter, std::string(what) + " needs n >= 1");
}

/// Bottom-up memo for a one-dimensional recurrence. `extend(values)` must
/// append the next term; the table only ever grows.
class RecurrenceTable {
 public:
  RecurrenceTable(std::vector<Count> bases, Count (*next)(const std::vector<Count>&))
      : values_(std::move(bases)), next_(next) {}

  Count at(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) values_.push_back(next_(values_));
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<Count> values_;
  Count (*next_)(const std::vector<Count>&);
};

// Index 0 is a placeholder; none of the recurrences read it for n >= 1.

Count anand_next(const std::vector<Count>& lam) {
  const Count n = lam.size();
  const Count bracket = (2 * n - 3) * lam[lam.size() - 2] + (n - 2) * (n - 2) * lam[lam.size() - 3];
  return exact_div(n * (n - 1) * (n - 1) * bracket, 2, "lambda2_anand");
}

Count good_next(const std::vector<Count>& lam) {
  const Count n = lam.size();
  const Count half_coeff = exact_div((n - 1) * (n - 1) * n, 2, "lambda2_good coefficient");
  return (n - 1) * n * lam[lam.size() - 1] + half_coeff * lam[lam.size() - 2];
}

RecurrenceTable& anand_table() {
  static RecurrenceTable table({0, 0, 1, 6}, &anand_next);
  return table;
}

RecurrenceTable& good_table() {
  static RecurrenceTable table({0, 0, 1}, &good_next);
  return table;
}

/// lambda_{n,2} and pi_n advanced together; lam[m+1] needs pi[m+1].
class SystemTable {
 public:
  LambdaPi at(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (lambda_.size() <= n) step();
    return {lambda_[n], pi_[n]};
  }

 private:
  void step() {
    const std::size_t m = lambda_.size() - 1;  // computing index m + 1
    const Count mm = m;
    if (m + 1 >= 5) {
      const Count coeff = exact_div(mm * mm * (mm - 1) * (mm - 1), 4, "pi coefficient");
      pi_.push_back(coeff * (8 * (mm - 2) * (mm - 3) * lambda_[m - 2] +
                             (mm - 2) * (mm - 2) * lambda_[m - 3] - 4 * pi_[m - 1]));
    }
    lambda_.push_back(mm * (2 * mm - 1) * lambda_[m] + mm * mm * lambda_[m - 1] - pi_[m + 1]);
  }

  std::mutex mutex_;
  std::vector<Count> lambda_{0, 0, 1};
  std::vector<Count> pi_{0, 0, 0, 0, 9};
};

SystemTable& system_table() {
  static SystemTable table;
  return table;
}

/// Walks partitions of `remaining` into parts <= max_part (and >= 2) in
/// descending order, tracking each part's multiplicity.
void add_partition_terms(std::size_t remaining, std::size_t max_part,
                         std::vector<std::uint32_t>& multiplicity, const Count& numerator,
                         ExactRational& sum) {
  if (remaining == 0) {
    Count denominator = 1;
    for (std::size_t r = 2; r < multiplicity.size(); ++r) {
      const std::uint32_t x = multiplicity[r];
      if (x == 0) continue;
      denominator *= factorial(x) * boost::multiprecision::pow(Count{2 * r}, x);
    }
    sum += ExactRational(numerator, denominator);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 2; --part) {
    ++multiplicity[part];
    add_partition_terms(remaining - part, part, multiplicity, numerator, sum);
    --multiplicity[part];
  }
}

}  // namespace

Count lambda2_partition_sum(std::size_t n) {
  require_positive(n, "lambda2_partition_sum");
  const Count n_fact = factorial(static_cast<std::uint32_t>(n));
  std::vector<std::uint32_t> multiplicity(n + 1, 0);
  ExactRational sum = 0;
  add_partition_terms(n, n, multiplicity, n_fact * n_fact, sum);
  if (denominator(sum) != 1) {
    fail(ErrorCode::kInternalFault, "partition sum for n=" + std::to_string(n) +
                                        " is not an integer: " + sum.str());
  }
  return numerator(sum);
}

Count lambda2_anand(std::size_t n) {
  require_positive(n, "lambda2_anand");
  return anand_table().at(n);
}

Count lambda2_good(std::size_t n) {
  require_positive(n, "lambda2_good");
  return good_table().at(n);
}

LambdaPi lambda2_system(std::size_t n) {
  require_positive(n, "lambda2_system");
  return system_table().at(n);
}

Count lambda2_plus(std::size_t n) {
  if (n < 3) fail(ErrorCode::kInvalidParameter, "lambda2_plus needs n >= 3");
  const Count m = n - 1;
  return 2 * m * lambda2_good(n - 1) + m * m * lambda2_good(n - 2);
}

namespace {

void check_split_args(std::size_t n, std::size_t k, const char* what) {
  if (k < 1 || k > n) {
    fail(ErrorCode::kInvalidParameter, std::string(what) + " needs 1 <= k <= n, got n=" +
                                           std::to_string(n) + " k=" + std::to_string(k));
  }
}

Count divide_or_inconsistent(const Count& numerator, std::size_t divisor, const char* what) {
  Count quotient;
  Count remainder;
  boost::multiprecision::divide_qr(numerator, Count{divisor}, quotient, remainder);
  if (remainder != 0) {
    fail(ErrorCode::kInconsistentInput, std::string(what) + ": " + numerator.str() +
                                            " is not divisible by " + std::to_string(divisor));
  }
  return quotient;
}

}  // namespace

Count lambda_plus_from_total(std::size_t n, std::size_t k, const Count& lambda) {
  check_split_args(n, k, "lambda_plus_from_total");
  return divide_or_inconsistent(k * lambda, n, "k * lambda");
}

Count lambda_minus_from_plus(std::size_t n, std::size_t k, const Count& lambda_plus) {
  check_split_args(n, k, "lambda_minus_from_plus");
  return divide_or_inconsistent((n - k) * lambda_plus, k, "(n - k) * lambda_plus");
}

Count lambda3_explicit(std::size_t n) {
  require_positive(n, "lambda3_explicit");
  using boost::multiprecision::pow;
  const auto n32 = static_cast<std::uint32_t>(n);
  factorial(3 * n32);  // warm the cache up to (beta + 3 gamma)!

  ExactRational sum = 0;
  for (std::uint32_t alpha = 0; alpha <= n32; ++alpha) {
    for (std::uint32_t beta = 0; alpha + beta <= n32; ++beta) {
      const std::uint32_t gamma = n32 - alpha - beta;
      const Count gamma_fact = factorial(gamma);
      Count num = factorial(beta + 3 * gamma) * pow(Count{2}, alpha) * pow(Count{3}, beta);
      if (beta % 2 == 1) num = -num;
      const Count den =
          factorial(alpha) * factorial(beta) * gamma_fact * gamma_fact * pow(Count{6}, gamma);
      sum += ExactRational(num, den);
    }
  }
  const Count n_fact = factorial(n32);
  sum *= ExactRational(n_fact * n_fact, pow(Count{6}, n32));
  if (denominator(sum) != 1 || numerator(sum) < 0) {
    fail(ErrorCode::kInternalFault,
         "explicit lambda_{n,3} sum for n=" + std::to_string(n) + " gave " + sum.str());
  }
  return numerator(sum);
}

}  // namespace lambdakit
