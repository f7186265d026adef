#include "lambdakit/classifier.hpp"

#include <atomic>
#include <string>

#include "lambdakit/enumerator.hpp"
#include "lambdakit/error.hpp"
#include "lambdakit/profile_dp.hpp"

namespace lambdakit {
namespace {

using L = ClassLabel;

// Indexed by TildeSubmatrix::pattern(): bit 3 = x_sp, 2 = x_sq, 1 = x_tp, 0 = x_tq.
constexpr std::array<ClassLabel, 16> kPatternClass = {
    L::kH,      // 00/00
    L::kZ,      // 00/01
    L::kZ,      // 00/10
    L::kDelta,  // 00/11
    L::kZ,      // 01/00
    L::kGamma,  // 01/01
    L::kE,      // 01/10
    L::kB,      // 01/11
    L::kZ,      // 10/00
    L::kE,      // 10/01
    L::kGamma,  // 10/10
    L::kB,      // 10/11
    L::kDelta,  // 11/00
    L::kB,      // 11/01
    L::kB,      // 11/10
    L::kA,      // 11/11
};

constexpr std::size_t index_of(ClassLabel label) { return static_cast<std::size_t>(label); }

void check_census_range(std::size_t n, std::size_t lowest, const char* what) {
  if (n < lowest || n > 7) {
    fail(ErrorCode::kInvalidParameter, std::string(what) + " needs " + std::to_string(lowest) +
                                           " <= n <= 7, got n=" + std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case L::kA: return "A";
    case L::kB: return "B";
    case L::kGamma: return "Gamma";
    case L::kDelta: return "Delta";
    case L::kE: return "E";
    case L::kZ: return "Z";
    case L::kH: return "H";
  }
  return "?";
}

Count& ClassCounts::operator[](ClassLabel label) {
  return const_cast<Count&>(std::as_const(*this)[label]);
}

const Count& ClassCounts::operator[](ClassLabel label) const {
  switch (label) {
    case L::kA: return alpha;
    case L::kB: return beta;
    case L::kGamma: return gamma;
    case L::kDelta: return delta;
    case L::kE: return epsilon;
    case L::kZ: return zeta;
    case L::kH: return eta;
  }
  fail(ErrorCode::kInternalFault, "unknown class label");
}

Count ClassCounts::total() const {
  return alpha + beta + gamma + delta + epsilon + zeta + eta;
}

ClassLabel classify_pattern(const TildeSubmatrix& tilde) { return kPatternClass[tilde.pattern()]; }

ClassLabel classify_plus3(const BinaryMatrix& x) { return classify_pattern(tilde_submatrix(x)); }

ClassCounts class_counts(std::size_t n, unsigned threads) {
  check_census_range(n, 3, "class_counts");
  std::array<std::atomic<std::uint64_t>, 7> tally{};
  const std::size_t last = n - 1;
  auto visit = [&](const BinaryMatrix& x) {
    if (!x.at(last, last)) return;
    tally[index_of(classify_plus3(x))].fetch_add(1, std::memory_order_relaxed);
  };
  if (threads > 1) {
    enumerate_lambda_parallel(n, 3, visit, threads);
  } else {
    enumerate_lambda(n, 3, visit);
  }
  ClassCounts counts;
  for (ClassLabel label : kAllClassLabels) counts[label] = tally[index_of(label)].load();
  return counts;
}

Theorem4Report theorem4_check(std::size_t n, unsigned threads) {
  check_census_range(n, 4, "theorem4_check");
  Theorem4Report report;
  report.n = n;
  report.lhs = count_split(n, 3, threads).plus;
  report.counts = class_counts(n, threads);
  const Count m = n;
  const Count coefficient = exact_div(3 * (m - 1) * (3 * m - 8), 2, "theorem4 coefficient");
  const ClassCounts& c = report.counts;
  report.rhs = coefficient * dp_count(n - 1, 3) + c.alpha + c.beta + 2 * c.gamma - c.eta;
  report.holds = report.lhs == report.rhs;
  return report;
}

}  // namespace lambdakit
