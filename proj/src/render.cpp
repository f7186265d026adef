#include "lambdakit/render.hpp"

#include <string>

namespace lambdakit {
namespace {

std::string field(std::string_view key, const std::string& value) {
  return "\"" + std::string(key) + "\":" + value;
}

}  // namespace

std::string census_json(std::size_t n, const ClassCounts& c) {
  return "{" + field("alpha", to_string(c.alpha)) + "," + field("beta", to_string(c.beta)) + "," +
         field("delta", to_string(c.delta)) + "," + field("epsilon", to_string(c.epsilon)) + "," +
         field("eta", to_string(c.eta)) + "," + field("gamma", to_string(c.gamma)) + "," +
         field("lambda_plus", to_string(c.total())) + "," + field("n", std::to_string(n)) + "," +
         field("zeta", to_string(c.zeta)) + "}\n";
}

std::string census_csv_header() { return "n,alpha,beta,gamma,delta,epsilon,zeta,eta,lambda_plus\n"; }

std::string census_csv_row(std::size_t n, const ClassCounts& c) {
  return std::to_string(n) + "," + to_string(c.alpha) + "," + to_string(c.beta) + "," +
         to_string(c.gamma) + "," + to_string(c.delta) + "," + to_string(c.epsilon) + "," +
         to_string(c.zeta) + "," + to_string(c.eta) + "," + to_string(c.total()) + "\n";
}

std::string theorem4_json(const Theorem4Report& r) {
  return "{" + field("holds", r.holds ? "true" : "false") + "," + field("lhs", to_string(r.lhs)) +
         "," + field("n", std::to_string(r.n)) + "," + field("rhs", to_string(r.rhs)) + "}\n";
}

std::string table_csv(std::size_t k, const LambdaTable& rows) {
  std::string out = "n,k,lambda\n";
  for (const auto& [n, lambda] : rows) {
    out += std::to_string(n) + "," + std::to_string(k) + "," + to_string(lambda) + "\n";
  }
  return out;
}

std::string table_json(std::size_t k, const LambdaTable& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ",";
    out += "{" + field("k", std::to_string(k)) + "," + field("lambda", to_string(rows[i].second)) +
           "," + field("n", std::to_string(rows[i].first)) + "}";
  }
  return out + "]\n";
}

std::string table_plain(std::size_t, const LambdaTable& rows) {
  std::string out;
  for (const auto& [n, lambda] : rows) out += std::to_string(n) + " " + to_string(lambda) + "\n";
  return out;
}

}  // namespace lambdakit
