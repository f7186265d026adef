// lambdakit command-line front end: count, enumerate, classify, table, verify.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lambdakit/lambdakit.hpp"

namespace {

using namespace lambdakit;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMethodMismatch = 3;
constexpr int kExitTooLarge = 4;

enum class Method { kEnum, kDp, kFormula };
enum class Format { kPlain, kCsv, kJson, kJsonl };

struct CliConfig {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t n_max = 6;
  Method method = Method::kDp;
  std::optional<Format> format;
  std::string output;
  bool split = false;
  bool theorem4 = false;
  std::string suite = "all";
  std::uint64_t max_matrices = 10'000'000;
};

/// Failure with a specific exit status.
struct ExitError {
  int code;
  std::string message;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ExitError{kExitUsage, "cannot open output file " + path};
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

bool has_formula(std::size_t k) { return k == 2 || k == 3; }

Count lambda_by(Method method, std::size_t n, std::size_t k, unsigned threads) {
  if (n == 0) return k == 0 ? 1 : 0;
  switch (method) {
    case Method::kEnum: return count_lambda(n, k, threads);
    case Method::kDp: return dp_count(n, k);
    case Method::kFormula: return k == 2 ? lambda2_good(n) : lambda3_explicit(n);
  }
  return 0;
}

void require_formula(const CliConfig& cfg) {
  if (cfg.method == Method::kFormula && !has_formula(cfg.k)) {
    throw ExitError{kExitMethodMismatch,
                    "--method formula is only available for k=2 and k=3, got k=" +
                        std::to_string(cfg.k)};
  }
}

int run_count(const CliConfig& cfg, unsigned threads) {
  if (cfg.n < 1 || cfg.n > BinaryMatrix::kMaxDim) {
    throw ExitError{kExitUsage, "--n must be in 1..64"};
  }
  require_formula(cfg);
  const Format format = cfg.format.value_or(Format::kPlain);
  Output out(cfg.output);
  std::ostream& os = out.stream();

  Count lambda;
  SplitCount split;
  if (cfg.split) {
    if (cfg.method == Method::kEnum) {
      split = count_split(cfg.n, cfg.k, threads);
    } else {
      lambda = lambda_by(cfg.method, cfg.n, cfg.k, threads);
      split.plus = cfg.k == 0 || cfg.k > cfg.n ? Count{0}
                                               : lambda_plus_from_total(cfg.n, cfg.k, lambda);
      split.minus = lambda - split.plus;
    }
    lambda = split.total();
  } else {
    lambda = lambda_by(cfg.method, cfg.n, cfg.k, threads);
  }

  const std::string n = std::to_string(cfg.n);
  const std::string k = std::to_string(cfg.k);
  switch (format) {
    case Format::kPlain:
      if (cfg.split) {
        os << "plus=" << split.plus << " minus=" << split.minus << "\n";
      } else {
        os << lambda << "\n";
      }
      break;
    case Format::kCsv:
      if (cfg.split) {
        os << "n,k,lambda,plus,minus\n"
           << n << "," << k << "," << lambda << "," << split.plus << "," << split.minus << "\n";
      } else {
        os << "n,k,lambda\n" << n << "," << k << "," << lambda << "\n";
      }
      break;
    case Format::kJson:
    case Format::kJsonl:
      os << "{\"k\":" << k << ",\"lambda\":" << lambda;
      if (cfg.split) os << ",\"minus\":" << split.minus;
      os << ",\"n\":" << n;
      if (cfg.split) os << ",\"plus\":" << split.plus;
      os << "}\n";
      break;
  }
  return kExitOk;
}

int run_table(const CliConfig& cfg, unsigned threads) {
  if (cfg.n_max < cfg.k || cfg.n_max > BinaryMatrix::kMaxDim) {
    throw ExitError{kExitUsage, "invalid range: need k <= --n-max <= 64"};
  }
  require_formula(cfg);
  LambdaTable rows;
  if (cfg.method == Method::kDp) {
    rows = dp_table(cfg.k, cfg.n_max);
  } else {
    for (std::size_t n = cfg.k; n <= cfg.n_max; ++n) {
      rows.emplace_back(n, lambda_by(cfg.method, n, cfg.k, threads));
    }
  }
  Output out(cfg.output);
  switch (cfg.format.value_or(Format::kCsv)) {
    case Format::kCsv: out.stream() << table_csv(cfg.k, rows); break;
    case Format::kJson:
    case Format::kJsonl: out.stream() << table_json(cfg.k, rows); break;
    case Format::kPlain: out.stream() << table_plain(cfg.k, rows); break;
  }
  return kExitOk;
}

int run_enumerate(const CliConfig& cfg) {
  if (cfg.n < 1 || cfg.n > BinaryMatrix::kMaxDim) {
    throw ExitError{kExitUsage, "--n must be in 1..64"};
  }
  const Count expected = dp_count(cfg.n, cfg.k);
  if (expected > cfg.max_matrices) {
    throw ExitError{kExitTooLarge, "refusing to stream " + to_string(expected) +
                                       " matrices (cap --max-matrices " +
                                       std::to_string(cfg.max_matrices) + ")"};
  }
  Output out(cfg.output);
  std::ostream& os = out.stream();
  std::uint64_t since_flush = 0;
  const Count count = enumerate_lambda(cfg.n, cfg.k, [&](const BinaryMatrix& m) {
    os << serialize_matrix(m, MatrixFormat::kJsonlRecord) << '\n';
    if (++since_flush == 4096) {
      os.flush();
      since_flush = 0;
    }
  });
  os << "{\"count\":" << count << ",\"k\":" << cfg.k << ",\"n\":" << cfg.n
     << ",\"summary\":true}\n";
  os.flush();
  return kExitOk;
}

int run_classify(const CliConfig& cfg, unsigned threads) {
  if (cfg.n < 3 || cfg.n > 7) throw ExitError{kExitUsage, "classify needs 3 <= --n <= 7"};
  if (cfg.theorem4 && cfg.n < 4) throw ExitError{kExitUsage, "--theorem4 needs --n >= 4"};
  const Format format = cfg.format.value_or(Format::kJson);
  Output out(cfg.output);
  std::ostream& os = out.stream();

  std::optional<Theorem4Report> report;
  ClassCounts counts;
  if (cfg.theorem4) {
    report = theorem4_check(cfg.n, threads);
    counts = report->counts;
  } else {
    counts = class_counts(cfg.n, threads);
  }

  switch (format) {
    case Format::kJson:
    case Format::kJsonl:
      os << census_json(cfg.n, counts);
      if (report) os << theorem4_json(*report);
      break;
    case Format::kCsv:
      os << census_csv_header() << census_csv_row(cfg.n, counts);
      if (report) {
        os << "n,lhs,rhs,holds\n"
           << report->n << "," << report->lhs << "," << report->rhs << ","
           << (report->holds ? "true" : "false") << "\n";
      }
      break;
    case Format::kPlain:
      os << "n=" << cfg.n << " alpha=" << counts.alpha << " beta=" << counts.beta
         << " gamma=" << counts.gamma << " delta=" << counts.delta << " epsilon=" << counts.epsilon
         << " zeta=" << counts.zeta << " eta=" << counts.eta << " lambda_plus=" << counts.total()
         << "\n";
      if (report) {
        os << "theorem4 n=" << report->n << " lhs=" << report->lhs << " rhs=" << report->rhs
           << " holds=" << (report->holds ? "true" : "false") << "\n";
      }
      break;
  }
  return report && !report->holds ? kExitFailure : kExitOk;
}

int run_verify_command(const CliConfig& cfg, unsigned threads) {
  const auto suite = parse_verify_suite(cfg.suite);
  if (!suite) throw ExitError{kExitUsage, "unknown suite '" + cfg.suite + "'"};
  Output out(cfg.output);
  std::ostream& os = out.stream();
  const VerifyReport report = run_verify(*suite, cfg.n_max, threads, [&](const CheckResult& c) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
    os.flush();
  });
  os << "summary: " << report.checks.size() << " checks, " << report.failed() << " failed\n";
  return report.all_passed() ? kExitOk : kExitFailure;
}

const std::map<std::string, Method> kMethods{
    {"enum", Method::kEnum}, {"dp", Method::kDp}, {"formula", Method::kFormula}};
const std::map<std::string, Format> kFormats{{"plain", Format::kPlain},
                                             {"csv", Format::kCsv},
                                             {"json", Format::kJson},
                                             {"jsonl", Format::kJsonl}};

void add_output(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("-o,--output", cfg.output, "Write to this file instead of standard output");
}

void add_format(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Count, enumerate and classify square 0/1 matrices with k ones in every row and column"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Print lambda_{n,k}");
  count->add_option("--n", cfg.n, "Matrix dimension")->required();
  count->add_option("--k", cfg.k, "Ones per row and column")->required();
  count->add_option("--method", cfg.method, "Counting method")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  count->add_flag("--split", cfg.split, "Print lambda^+ and lambda^- (bottom-right entry 1 / 0)");
  add_format(count, cfg);
  add_output(count, cfg);

  auto* enumerate = app.add_subcommand("enumerate", "Stream every matrix as JSONL");
  enumerate->add_option("--n", cfg.n, "Matrix dimension")->required();
  enumerate->add_option("--k", cfg.k, "Ones per row and column")->required();
  enumerate->add_option("--max-matrices", cfg.max_matrices, "Refuse to stream more than this");
  add_output(enumerate, cfg);

  auto* classify = app.add_subcommand("classify", "Census of the seven classes of Lambda_n^{3+}");
  classify->add_option("--n", cfg.n, "Matrix dimension (3..7)")->required();
  classify->add_flag("--theorem4", cfg.theorem4, "Also evaluate the class identity for lambda^+_{n,3}");
  add_format(classify, cfg);
  add_output(classify, cfg);

  auto* table = app.add_subcommand("table", "lambda_{n,k} for n = k..n-max");
  table->add_option("--k", cfg.k, "Ones per row and column")->required();
  table->add_option("--n-max", cfg.n_max, "Largest dimension")->required();
  table->add_option("--method", cfg.method, "Counting method")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  add_format(table, cfg);
  add_output(table, cfg);

  auto* verify = app.add_subcommand("verify", "Run identity checks; exit 1 on any failure");
  verify->add_option("--suite", cfg.suite, "formulas, theorem1, theorem2, theorem4, rho, oracle or all");
  verify->add_option("--n-max", cfg.n_max, "Largest dimension to check");
  add_output(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const unsigned threads = threads_from_env();
  try {
    if (*count) return run_count(cfg, threads);
    if (*enumerate) return run_enumerate(cfg);
    if (*classify) return run_classify(cfg, threads);
    if (*table) return run_table(cfg, threads);
    if (*verify) return run_verify_command(cfg, threads);
  } catch (const ExitError& e) {
    std::cerr << "lambdakit: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "lambdakit: " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidParameter ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}
