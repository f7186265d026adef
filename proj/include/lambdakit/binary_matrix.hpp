#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lambdakit {

/// One matrix row packed into a machine word; bit j holds column j (0-based).
using RowBits = std::uint64_t;

/// Square 0/1 matrix of dimension 1..kMaxDim.
///
/// Indices in the C++ API are 0-based. Error messages and every textual
/// rendering use 1-based (row, column) pairs.
class BinaryMatrix {
 public:
  static constexpr std::size_t kMaxDim = 64;

  /// All-zeros n x n matrix.
  explicit BinaryMatrix(std::size_t n);
  BinaryMatrix(std::size_t n, std::vector<RowBits> rows);

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix all_ones(std::size_t n);

  std::size_t n() const noexcept { return rows_.size(); }
  bool at(std::size_t i, std::size_t j) const noexcept { return (rows_[i] >> j) & 1U; }
  RowBits row(std::size_t i) const noexcept { return rows_[i]; }
  std::span<const RowBits> rows() const noexcept { return rows_; }

  /// Column j packed the same way as a row: bit i holds row i.
  RowBits column(std::size_t j) const noexcept;

  std::size_t row_sum(std::size_t i) const noexcept;
  std::size_t column_sum(std::size_t j) const noexcept;

  void set(std::size_t i, std::size_t j, bool value) noexcept;
  void set_row(std::size_t i, RowBits bits) noexcept { rows_[i] = bits & full_mask(); }

  /// Mask with the low n bits set.
  RowBits full_mask() const noexcept;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
  friend auto operator<=>(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::vector<RowBits> rows_;
};

/// Mask with the low n bits set, for 0 <= n <= 64.
constexpr RowBits low_mask(std::size_t n) noexcept {
  return n >= 64 ? ~RowBits{0} : ((RowBits{1} << n) - 1);
}

/// The 2x2 submatrix of X in Lambda_n^{3+} cut out by the two non-final rows
/// carrying the last column's ones (s < t) and the two non-final columns
/// carrying the last row's ones (p < q). Indices are 0-based.
struct TildeSubmatrix {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  /// entries[r][c], r indexes {s, t}, c indexes {p, q}.
  std::array<std::array<bool, 2>, 2> entries{};

  /// Four-bit code: x_sp is bit 3, x_sq bit 2, x_tp bit 1, x_tq bit 0.
  unsigned pattern() const noexcept;

  /// Same submatrix with the roles of s and t exchanged.
  TildeSubmatrix swap_rows() const noexcept;
  /// Same submatrix with the roles of p and q exchanged.
  TildeSubmatrix swap_columns() const noexcept;

  friend bool operator==(const TildeSubmatrix&, const TildeSubmatrix&) = default;
};

enum class MatrixFormat { kPlain, kJsonlRecord };

/// Parses LF-separated bit-string rows. A single trailing newline and CR
/// before LF are tolerated.
BinaryMatrix parse_matrix(std::string_view text);

/// Parses one `{"n":N,"rows":[...]}` record as written by serialize_matrix.
BinaryMatrix parse_matrix_record(std::string_view line);

std::string serialize_matrix(const BinaryMatrix& a, MatrixFormat format = MatrixFormat::kPlain);

/// True iff every row sum and every column sum equals k. k > n is rejected.
bool is_lambda(const BinaryMatrix& a, std::size_t k);

BinaryMatrix complement(const BinaryMatrix& a);
BinaryMatrix transpose(const BinaryMatrix& a);

TildeSubmatrix tilde_submatrix(const BinaryMatrix& x);

/// Edge (i, j) for every a_ij = 1, rows as left vertices, in row-major order.
std::vector<std::pair<std::size_t, std::size_t>> to_bipartite_edges(const BinaryMatrix& a);

}  // namespace lambdakit
