#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lambdakit/binary_matrix.hpp"
#include "lambdakit/count.hpp"

namespace lambdakit {

using MatrixVisitor = std::function<void(const BinaryMatrix&)>;

struct SplitCount {
  Count plus;   // a_nn = 1
  Count minus;  // a_nn = 0

  Count total() const { return plus + minus; }
  friend bool operator==(const SplitCount&, const SplitCount&) = default;
};

/// Visits every Lambda_n^k matrix exactly once in lexicographic order: rows
/// top to bottom, each row's column set in ascending lexicographic order.
/// Returns the number of matrices visited. The reference passed to `visit`
/// is only valid for the duration of the call.
Count enumerate_lambda(std::size_t n, std::size_t k, const MatrixVisitor& visit);

/// Same matrix multiset as enumerate_lambda, with the search split over
/// `threads` workers by first-row subset. `visit` must be safe to call
/// concurrently; visit order is unspecified.
Count enumerate_lambda_parallel(std::size_t n, std::size_t k, const MatrixVisitor& visit,
                                unsigned threads);

/// lambda_{n,k} by exhaustive search (no visitor). n < k yields 0.
Count count_lambda(std::size_t n, std::size_t k, unsigned threads = 1);

/// lambda^+ and lambda^- in a single search pass.
SplitCount count_split(std::size_t n, std::size_t k, unsigned threads = 1);

/// Data of the rho-class of A: matrices obtained from A by moving its columns
/// that end in 1 to other positions, keeping the order of the remaining
/// columns. Equivalently, the matrices that coincide with A once every column
/// ending in 1 is deleted and whose deleted columns form the same multiset as
/// A's. (Equal remainders alone do not pin down the deleted columns.)
struct RhoClassStats {
  /// Columns of A ending in 1, ascending, 0-based.
  std::vector<std::size_t> j_set;
  /// Sizes of the groups of equal columns within j_set, in order of each
  /// group's first column. Sums to k.
  std::vector<std::size_t> multiplicities;
  Count class_size;
  Count p_plus;
  Count p_minus;
};

RhoClassStats rho_class_stats(const BinaryMatrix& a, std::size_t k);

/// All members of the rho-class of A (A included), without duplicates, in a
/// deterministic order. Size grows like n!/(n-k)!, so keep n small.
std::vector<BinaryMatrix> rho_class_generate(const BinaryMatrix& a, std::size_t k);

/// Reads LAMBDAKIT_THREADS; 1 when unset or unparsable.
unsigned threads_from_env();

}  // namespace lambdakit
