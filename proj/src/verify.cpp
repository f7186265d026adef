#include "lambdakit/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lambdakit/classifier.hpp"
#include "lambdakit/enumerator.hpp"
#include "lambdakit/formulas.hpp"
#include "lambdakit/profile_dp.hpp"

namespace lambdakit {
namespace {

constexpr std::size_t kDpLambda2Limit = 40;
constexpr std::size_t kDpLambda3Limit = 25;
constexpr std::size_t kDpSymmetryLimit = 12;
constexpr std::size_t kDpFactorialLimit = 20;
constexpr std::size_t kLambda3EnumerationLimit = 6;

class Recorder {
 public:
  Recorder(VerifyReport& report, const std::function<void(const CheckResult&)>& sink)
      : report_(report), sink_(sink) {}

  void check(std::string name, bool passed, std::string detail = {}) {
    report_.checks.push_back({std::move(name), passed, std::move(detail)});
    if (sink_) sink_(report_.checks.back());
  }

  void equal(std::string name, const Count& lhs, const Count& rhs) {
    const bool ok = lhs == rhs;
    check(std::move(name), ok, ok ? to_string(lhs) : to_string(lhs) + " != " + to_string(rhs));
  }

 private:
  VerifyReport& report_;
  const std::function<void(const CheckResult&)>& sink_;
};

std::string nk(std::size_t n, std::size_t k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

void suite_formulas(Recorder& rec, std::size_t n_max) {
  rec.equal("pi_4 base value", lambda2_system(4).pi, 9);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Count good = lambda2_good(n);
    const Count partition = lambda2_partition_sum(n);
    const Count anand = lambda2_anand(n);
    const Count system = lambda2_system(n).lambda;
    const bool ok = good == partition && good == anand && good == system;
    rec.check("lambda2 four-way n=" + std::to_string(n), ok,
              ok ? to_string(good)
                 : "partition=" + to_string(partition) + " anand=" + to_string(anand) +
                       " good=" + to_string(good) + " system=" + to_string(system));
  }
  for (std::size_t n = 1; n <= std::min(n_max, kDpLambda2Limit); ++n) {
    rec.equal("lambda2 formula vs dp n=" + std::to_string(n), lambda2_good(n), dp_count(n, 2));
  }
  for (std::size_t n = 1; n <= std::min(n_max, kVerifyLambda2EnumerationLimit); ++n) {
    rec.equal("lambda2 formula vs enumeration n=" + std::to_string(n), lambda2_good(n),
              count_lambda(n, 2));
  }
  bool increasing = true;
  for (std::size_t n = 4; n <= n_max; ++n) increasing = increasing && lambda2_good(n) > lambda2_good(n - 1);
  rec.check("lambda2 strictly increasing from n=3", increasing);
  for (std::size_t n = 3; n <= std::min(n_max, kDpLambda3Limit); ++n) {
    rec.equal("lambda3 explicit vs dp n=" + std::to_string(n), lambda3_explicit(n), dp_count(n, 3));
  }
  for (std::size_t n = 3; n <= std::min(n_max, kLambda3EnumerationLimit); ++n) {
    rec.equal("lambda3 explicit vs enumeration n=" + std::to_string(n), lambda3_explicit(n),
              count_lambda(n, 3));
  }
}

void suite_theorem1(Recorder& rec, std::size_t n_max, unsigned threads) {
  for (std::size_t n = 1; n <= std::min(n_max, kVerifyEnumerationLimit); ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const SplitCount split = count_split(n, k, threads);
      rec.equal("k*minus = (n-k)*plus " + nk(n, k), k * split.minus, (n - k) * split.plus);
      rec.equal("n*plus = k*lambda " + nk(n, k), n * split.plus, k * split.total());
    }
  }
}

void suite_theorem2(Recorder& rec, std::size_t n_max, unsigned threads) {
  for (std::size_t n = 3; n <= std::min(n_max, kVerifyLambda2EnumerationLimit); ++n) {
    rec.equal("lambda2_plus vs enumerated plus n=" + std::to_string(n), lambda2_plus(n),
              count_split(n, 2, threads).plus);
  }
  for (std::size_t n = 3; n <= n_max; ++n) {
    rec.equal("lambda2_plus vs (2/n) lambda2 n=" + std::to_string(n), lambda2_plus(n),
              lambda_plus_from_total(n, 2, lambda2_good(n)));
  }
}

void suite_theorem4(Recorder& rec, std::size_t n_max, unsigned threads) {
  for (std::size_t n = 3; n <= std::min(n_max, kVerifyEnumerationLimit); ++n) {
    const ClassCounts counts = class_counts(n, threads);
    const Count plus = count_split(n, 3, threads).plus;
    rec.equal("census sums to lambda3 plus n=" + std::to_string(n), counts.total(), plus);
    rec.equal("census gamma = delta n=" + std::to_string(n), counts.gamma, counts.delta);
    if (n >= 4) {
      const Theorem4Report report = theorem4_check(n, threads);
      rec.check("theorem4 identity n=" + std::to_string(n), report.holds,
                "lhs=" + to_string(report.lhs) + " rhs=" + to_string(report.rhs));
    }
  }
}

void suite_rho(Recorder& rec, std::size_t n_max) {
  for (std::size_t n = 1; n <= std::min(n_max, kVerifyRhoLimit); ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      std::set<BinaryMatrix> covered;
      Count plus_sum = 0;
      Count minus_sum = 0;
      std::size_t members_ok = 0;
      std::size_t matrices = 0;
      std::string problem;
      enumerate_lambda(n, k, [&](const BinaryMatrix& a) {
        ++matrices;
        const RhoClassStats stats = rho_class_stats(a, k);
        const std::vector<BinaryMatrix> members = rho_class_generate(a, k);
        const std::set<BinaryMatrix> unique(members.begin(), members.end());
        const auto minus = std::count_if(members.begin(), members.end(),
                                         [&](const BinaryMatrix& m) { return !m.at(n - 1, n - 1); });
        const bool ok = Count{members.size()} == stats.class_size &&
                        unique.size() == members.size() && unique.contains(a) &&
                        Count{minus} == stats.p_minus &&
                        std::all_of(members.begin(), members.end(),
                                    [&](const BinaryMatrix& m) { return is_lambda(m, k); });
        if (ok) {
          ++members_ok;
        } else if (problem.empty()) {
          problem = "class of\n" + serialize_matrix(a) + "\nis inconsistent";
        }
        if (!covered.contains(a)) {
          plus_sum += stats.p_plus;
          minus_sum += stats.p_minus;
          covered.insert(unique.begin(), unique.end());
        }
      });
      const SplitCount split = count_split(n, k);
      const bool ok = members_ok == matrices && covered.size() == matrices &&
                      plus_sum == split.plus && minus_sum == split.minus;
      rec.check("rho classes " + nk(n, k), ok,
                ok ? std::to_string(matrices) + " matrices"
                   : problem + " plus_sum=" + to_string(plus_sum) + " minus_sum=" +
                         to_string(minus_sum) + " covered=" + std::to_string(covered.size()));
    }
  }
}

void suite_oracle(Recorder& rec, std::size_t n_max, unsigned threads) {
  for (std::size_t n = 1; n <= std::min(n_max, std::size_t{6}); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      rec.equal("dp vs enumeration " + nk(n, k), dp_count(n, k), count_lambda(n, k, threads));
    }
  }
  for (std::size_t n = 0; n <= std::min(n_max, kDpSymmetryLimit); ++n) {
    bool ok = true;
    for (std::size_t k = 0; k <= n; ++k) ok = ok && dp_count(n, k) == dp_count(n, n - k);
    rec.check("dp complement symmetry n=" + std::to_string(n), ok);
  }
  for (std::size_t n = 1; n <= std::min(n_max, kDpFactorialLimit); ++n) {
    rec.equal("dp lambda_{n,1} = n! n=" + std::to_string(n), dp_count(n, 1),
              factorial(static_cast<std::uint32_t>(n)));
    rec.check("dp lambda_{n,0} = lambda_{n,n} = 1 n=" + std::to_string(n),
              dp_count(n, 0) == 1 && dp_count(n, n) == 1);
  }
  for (std::size_t n = 1; n <= std::min(n_max, kVerifyExhaustiveLimit); ++n) {
    std::vector<std::vector<BinaryMatrix>> filtered(n + 1);
    const std::uint64_t cells = n * n;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
      std::vector<RowBits> rows(n);
      for (std::size_t i = 0; i < n; ++i) rows[i] = (bits >> (i * n)) & low_mask(n);
      const BinaryMatrix m(n, std::move(rows));
      for (std::size_t k = 0; k <= n; ++k) {
        if (is_lambda(m, k)) filtered[k].push_back(m);
      }
    }
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<BinaryMatrix> visited;
      enumerate_lambda(n, k, [&](const BinaryMatrix& m) { visited.push_back(m); });
      std::sort(visited.begin(), visited.end());
      const bool unique = std::adjacent_find(visited.begin(), visited.end()) == visited.end();
      std::sort(filtered[k].begin(), filtered[k].end());
      rec.check("enumeration = exhaustive filter " + nk(n, k), unique && visited == filtered[k],
                std::to_string(visited.size()) + " vs " + std::to_string(filtered[k].size()));
    }
  }
}

}  // namespace

std::optional<VerifySuite> parse_verify_suite(std::string_view name) {
  for (VerifySuite s : {VerifySuite::kFormulas, VerifySuite::kTheorem1, VerifySuite::kTheorem2,
                        VerifySuite::kTheorem4, VerifySuite::kRho, VerifySuite::kOracle,
                        VerifySuite::kAll}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::kFormulas: return "formulas";
    case VerifySuite::kTheorem1: return "theorem1";
    case VerifySuite::kTheorem2: return "theorem2";
    case VerifySuite::kTheorem4: return "theorem4";
    case VerifySuite::kRho: return "rho";
    case VerifySuite::kOracle: return "oracle";
    case VerifySuite::kAll: return "all";
  }
  return "?";
}

std::size_t VerifyReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerifyReport run_verify(VerifySuite suite, std::size_t n_max, unsigned threads,
                        const std::function<void(const CheckResult&)>& on_check) {
  VerifyReport report;
  Recorder rec(report, on_check);
  const bool all = suite == VerifySuite::kAll;
  if (all || suite == VerifySuite::kFormulas) suite_formulas(rec, n_max);
  if (all || suite == VerifySuite::kTheorem1) suite_theorem1(rec, n_max, threads);
  if (all || suite == VerifySuite::kTheorem2) suite_theorem2(rec, n_max, threads);
  if (all || suite == VerifySuite::kTheorem4) suite_theorem4(rec, n_max, threads);
  if (all || suite == VerifySuite::kRho) suite_rho(rec, n_max);
  if (all || suite == VerifySuite::kOracle) suite_oracle(rec, n_max, threads);
  return report;
}

}  // namespace lambdakit
