#include "lambdakit/binary_matrix.hpp"

#include <bit>
#include <string>

#include <nlohmann/json.hpp>

#include "lambdakit/error.hpp"

namespace lambdakit {
namespace {

void check_dimension(std::size_t n) {
  if (n == 0 || n > BinaryMatrix::kMaxDim) {
    fail(ErrorCode::kInvalidParameter,
         "matrix dimension must be in 1.." + std::to_string(BinaryMatrix::kMaxDim) + ", got " +
             std::to_string(n));
  }
}

RowBits parse_row(std::string_view line, std::size_t row_index) {
  RowBits bits = 0;
  for (std::size_t j = 0; j < line.size(); ++j) {
    const char c = line[j];
    if (c == '1') {
      bits |= RowBits{1} << j;
    } else if (c != '0') {
      fail(ErrorCode::kParseError, "illegal character '" + std::string(1, c) + "' at (" +
                                       std::to_string(row_index + 1) + "," +
                                       std::to_string(j + 1) + ")");
    }
  }
  return bits;
}

std::string row_string(const BinaryMatrix& a, std::size_t i) {
  std::string out(a.n(), '0');
  for (std::size_t j = 0; j < a.n(); ++j) {
    if (a.at(i, j)) out[j] = '1';
  }
  return out;
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t n) : rows_(n, 0) { check_dimension(n); }

BinaryMatrix::BinaryMatrix(std::size_t n, std::vector<RowBits> rows) : rows_(std::move(rows)) {
  check_dimension(n);
  if (rows_.size() != n) {
    fail(ErrorCode::kInvalidParameter,
         "expected " + std::to_string(n) + " rows, got " + std::to_string(rows_.size()));
  }
  const RowBits mask = low_mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i] & ~mask) {
      fail(ErrorCode::kInvalidParameter,
           "row " + std::to_string(i + 1) + " has bits beyond column " + std::to_string(n));
    }
  }
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = RowBits{1} << i;
  return m;
}

BinaryMatrix BinaryMatrix::all_ones(std::size_t n) {
  BinaryMatrix m(n);
  for (auto& r : m.rows_) r = low_mask(n);
  return m;
}

RowBits BinaryMatrix::column(std::size_t j) const noexcept {
  RowBits col = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) col |= ((rows_[i] >> j) & 1U) << i;
  return col;
}

std::size_t BinaryMatrix::row_sum(std::size_t i) const noexcept {
  return static_cast<std::size_t>(std::popcount(rows_[i]));
}

std::size_t BinaryMatrix::column_sum(std::size_t j) const noexcept {
  return static_cast<std::size_t>(std::popcount(column(j)));
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool value) noexcept {
  const RowBits bit = RowBits{1} << j;
  rows_[i] = value ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

RowBits BinaryMatrix::full_mask() const noexcept { return low_mask(n()); }

unsigned TildeSubmatrix::pattern() const noexcept {
  return (unsigned{entries[0][0]} << 3) | (unsigned{entries[0][1]} << 2) |
         (unsigned{entries[1][0]} << 1) | unsigned{entries[1][1]};
}

TildeSubmatrix TildeSubmatrix::swap_rows() const noexcept {
  TildeSubmatrix out = *this;
  std::swap(out.s, out.t);
  std::swap(out.entries[0], out.entries[1]);
  return out;
}

TildeSubmatrix TildeSubmatrix::swap_columns() const noexcept {
  TildeSubmatrix out = *this;
  std::swap(out.p, out.q);
  std::swap(out.entries[0][0], out.entries[0][1]);
  std::swap(out.entries[1][0], out.entries[1][1]);
  return out;
}

BinaryMatrix parse_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty() || (lines.size() == 1 && lines[0].empty())) {
    fail(ErrorCode::kParseError, "empty matrix text");
  }
  const std::size_t n = lines.size();
  if (n > BinaryMatrix::kMaxDim) {
    fail(ErrorCode::kInvalidParameter, "matrix dimension " + std::to_string(n) + " exceeds " +
                                           std::to_string(BinaryMatrix::kMaxDim));
  }
  std::vector<RowBits> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lines[i].size() != n) {
      fail(ErrorCode::kParseError, "non-square input: row " + std::to_string(i + 1) + " has " +
                                       std::to_string(lines[i].size()) + " columns, expected " +
                                       std::to_string(n));
    }
    rows.push_back(parse_row(lines[i], i));
  }
  return BinaryMatrix(n, std::move(rows));
}

BinaryMatrix parse_matrix_record(std::string_view line) {
  nlohmann::json record;
  try {
    record = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParseError, std::string("malformed JSON record: ") + e.what());
  }
  if (!record.is_object() || !record.contains("n") || !record.contains("rows") ||
      !record["n"].is_number_unsigned() || !record["rows"].is_array()) {
    fail(ErrorCode::kParseError, "record needs an unsigned 'n' and a 'rows' array");
  }
  const auto n = record["n"].get<std::size_t>();
  std::string text;
  for (const auto& row : record["rows"]) {
    if (!row.is_string()) fail(ErrorCode::kParseError, "rows must be bit strings");
    if (!text.empty()) text += '\n';
    text += row.get<std::string>();
  }
  BinaryMatrix m = parse_matrix(text);
  if (m.n() != n) {
    fail(ErrorCode::kParseError, "record declares n=" + std::to_string(n) + " but has " +
                                     std::to_string(m.n()) + " rows");
  }
  return m;
}

std::string serialize_matrix(const BinaryMatrix& a, MatrixFormat format) {
  std::string out;
  if (format == MatrixFormat::kPlain) {
    for (std::size_t i = 0; i < a.n(); ++i) {
      if (i > 0) out += '\n';
      out += row_string(a, i);
    }
    return out;
  }
  out = "{\"n\":" + std::to_string(a.n()) + ",\"rows\":[";
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (i > 0) out += ',';
    out += '"';
    out += row_string(a, i);
    out += '"';
  }
  out += "]}";
  return out;
}

bool is_lambda(const BinaryMatrix& a, std::size_t k) {
  const std::size_t n = a.n();
  if (k > n) {
    fail(ErrorCode::kInvalidParameter,
         "k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  }
  std::vector<std::size_t> col_sums(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const RowBits r = a.row(i);
    if (static_cast<std::size_t>(std::popcount(r)) != k) return false;
    for (RowBits bits = r; bits != 0; bits &= bits - 1) ++col_sums[std::countr_zero(bits)];
  }
  for (std::size_t s : col_sums) {
    if (s != k) return false;
  }
  return true;
}

BinaryMatrix complement(const BinaryMatrix& a) {
  BinaryMatrix out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) out.set_row(i, ~a.row(i));
  return out;
}

BinaryMatrix transpose(const BinaryMatrix& a) {
  BinaryMatrix out(a.n());
  for (std::size_t j = 0; j < a.n(); ++j) out.set_row(j, a.column(j));
  return out;
}

TildeSubmatrix tilde_submatrix(const BinaryMatrix& x) {
  const std::size_t n = x.n();
  if (n < 3 || !is_lambda(x, 3)) {
    fail(ErrorCode::kNotLambda3, "matrix does not have exactly three ones in every row and column");
  }
  const std::size_t last = n - 1;
  if (!x.at(last, last)) {
    fail(ErrorCode::kNotInPlusSet,
         "entry (" + std::to_string(n) + "," + std::to_string(n) + ") is 0");
  }
  // Exactly two further ones in the last column and the last row.
  const RowBits rows_with_last = x.column(last) & ~(RowBits{1} << last);
  const RowBits cols_in_last = x.row(last) & ~(RowBits{1} << last);

  TildeSubmatrix tilde;
  tilde.s = static_cast<std::size_t>(std::countr_zero(rows_with_last));
  tilde.t = static_cast<std::size_t>(std::countr_zero(rows_with_last & (rows_with_last - 1)));
  tilde.p = static_cast<std::size_t>(std::countr_zero(cols_in_last));
  tilde.q = static_cast<std::size_t>(std::countr_zero(cols_in_last & (cols_in_last - 1)));
  tilde.entries = {{{x.at(tilde.s, tilde.p), x.at(tilde.s, tilde.q)},
                    {x.at(tilde.t, tilde.p), x.at(tilde.t, tilde.q)}}};
  return tilde;
}

std::vector<std::pair<std::size_t, std::size_t>> to_bipartite_edges(const BinaryMatrix& a) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (RowBits bits = a.row(i); bits != 0; bits &= bits - 1) {
      edges.emplace_back(i, static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return edges;
}

}  // namespace lambdakit
