#include "lambdakit/enumerator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

#include "lambdakit/error.hpp"

namespace lambdakit {
namespace {

constexpr std::size_t kMaxDim = BinaryMatrix::kMaxDim;

void check_enumeration_args(std::size_t n) {
  if (n == 0 || n > kMaxDim) {
    fail(ErrorCode::kInvalidParameter,
         "enumeration needs 1 <= n <= " + std::to_string(kMaxDim) + ", got n=" + std::to_string(n));
  }
}

/// Calls f(subset) for every k-subset S of `avail` with forced ⊆ S, in
/// ascending lexicographic order of the sorted column tuple.
template <class F>
void choose_columns(RowBits avail, RowBits forced, std::size_t need, RowBits chosen, F& f) {
  if (static_cast<std::size_t>(std::popcount(forced)) > need) return;
  if (need == 0) {
    f(chosen);
    return;
  }
  RowBits candidates = avail;
  // Skipping past a forced column would leave it out of the row.
  if (forced != 0) candidates &= low_mask(static_cast<std::size_t>(std::countr_zero(forced)) + 1);
  while (candidates != 0) {
    const auto j = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    const RowBits bit = RowBits{1} << j;
    const RowBits above = avail & ~low_mask(j + 1);
    if (static_cast<std::size_t>(std::popcount(above)) + 1 < need) break;
    choose_columns(above, forced & ~bit, need - 1, chosen | bit, f);
  }
}

/// Row-by-row backtracking state. caps[j] is the number of ones column j
/// still needs. With equal row sums, a partial fill extends to a full matrix
/// iff caps[j] <= rows_left for every j, so forcing the columns with
/// caps[j] == rows_left keeps the search free of dead ends.
struct SearchState {
  std::size_t n = 0;
  std::size_t k = 0;
  std::array<std::uint8_t, kMaxDim> caps{};

  SearchState(std::size_t n_, std::size_t k_) : n(n_), k(k_) {
    std::fill_n(caps.begin(), n, static_cast<std::uint8_t>(k));
  }

  void masks(std::size_t rows_left, RowBits& avail, RowBits& forced) const {
    avail = 0;
    forced = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (caps[j] > 0) avail |= RowBits{1} << j;
      if (caps[j] == rows_left) forced |= RowBits{1} << j;
    }
  }

  void take(RowBits row) {
    for (RowBits b = row; b != 0; b &= b - 1) --caps[std::countr_zero(b)];
  }
  void give_back(RowBits row) {
    for (RowBits b = row; b != 0; b &= b - 1) ++caps[std::countr_zero(b)];
  }
};

struct PlusMinus {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
};

std::uint64_t small_binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

/// Counts completions from row `row` on. The last two rows are counted in
/// closed form: with two rows left every column needs 0, 1 or 2 ones, the
/// 2-columns go to both rows and the 1-columns split evenly between them.
void count_from(SearchState& st, std::size_t row, PlusMinus& acc) {
  const std::size_t n = st.n;
  const std::size_t rows_left = n - row;
  const std::size_t last = n - 1;
  if (rows_left == 1) {
    (st.caps[last] == 1 ? acc.plus : acc.minus) += 1;
    return;
  }
  if (rows_left == 2) {
    std::size_t twos = 0;
    std::size_t ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (st.caps[j] == 2) ++twos;
      if (st.caps[j] == 1) ++ones;
    }
    const std::size_t free_slots = st.k - twos;
    const std::uint64_t ways = small_binomial(ones, free_slots);
    switch (st.caps[last]) {
      case 2: acc.plus += ways; break;
      case 0: acc.minus += ways; break;
      default: {
        // Row n-1 picks its free ones among the other 1-columns.
        const std::uint64_t plus = small_binomial(ones - 1, free_slots);
        acc.plus += plus;
        acc.minus += ways - plus;
      }
    }
    return;
  }
  RowBits avail;
  RowBits forced;
  st.masks(rows_left, avail, forced);
  auto next = [&](RowBits chosen) {
    st.take(chosen);
    count_from(st, row + 1, acc);
    st.give_back(chosen);
  };
  choose_columns(avail, forced, st.k, 0, next);
}

void visit_from(SearchState& st, std::size_t row, BinaryMatrix& current,
                const MatrixVisitor& visit, std::uint64_t& visited) {
  if (row == st.n) {
    visit(current);
    ++visited;
    return;
  }
  RowBits avail;
  RowBits forced;
  st.masks(st.n - row, avail, forced);
  auto next = [&](RowBits chosen) {
    current.set_row(row, chosen);
    st.take(chosen);
    visit_from(st, row + 1, current, visit, visited);
    st.give_back(chosen);
  };
  choose_columns(avail, forced, st.k, 0, next);
}

std::vector<RowBits> first_rows(std::size_t n, std::size_t k) {
  std::vector<RowBits> out;
  auto push = [&](RowBits r) { out.push_back(r); };
  // Every column can still take k >= 1 ones, so nothing is forced unless n == k.
  const RowBits all = low_mask(n);
  choose_columns(all, n == k ? all : RowBits{0}, k, 0, push);
  return out;
}

/// Runs `work(first_row, state)` over all first-row subsets on `threads`
/// workers, each with its own SearchState.
template <class Work>
void for_each_first_row(std::size_t n, std::size_t k, unsigned threads, Work&& work) {
  const std::vector<RowBits> roots = first_rows(n, k);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, threads), roots.size()));
  std::atomic<std::size_t> next{0};
  auto run = [&](unsigned worker) {
    SearchState st(n, k);
    for (std::size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1)) {
      st.take(roots[i]);
      work(worker, roots[i], st);
      st.give_back(roots[i]);
    }
  };
  if (workers <= 1) {
    run(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
}

PlusMinus split_search(std::size_t n, std::size_t k, unsigned threads) {
  if (n == 1) {
    // The single cell is a_nn.
    return k == 1 ? PlusMinus{1, 0} : PlusMinus{0, 1};
  }
  std::vector<PlusMinus> partial(std::max(1U, threads));
  for_each_first_row(n, k, threads, [&](unsigned worker, RowBits, SearchState& st) {
    count_from(st, 1, partial[worker]);
  });
  PlusMinus total;
  for (const auto& p : partial) {
    total.plus += p.plus;
    total.minus += p.minus;
  }
  return total;
}

}  // namespace

Count enumerate_lambda(std::size_t n, std::size_t k, const MatrixVisitor& visit) {
  check_enumeration_args(n);
  if (k > n) return 0;
  SearchState st(n, k);
  BinaryMatrix current(n);
  std::uint64_t visited = 0;
  visit_from(st, 0, current, visit, visited);
  return visited;
}

Count enumerate_lambda_parallel(std::size_t n, std::size_t k, const MatrixVisitor& visit,
                                unsigned threads) {
  check_enumeration_args(n);
  if (k > n) return 0;
  if (threads <= 1) return enumerate_lambda(n, k, visit);
  std::vector<std::uint64_t> visited(threads, 0);
  for_each_first_row(n, k, threads, [&](unsigned worker, RowBits root, SearchState& st) {
    BinaryMatrix current(n);
    current.set_row(0, root);
    visit_from(st, 1, current, visit, visited[worker]);
  });
  Count total = 0;
  for (auto v : visited) total += v;
  return total;
}

Count count_lambda(std::size_t n, std::size_t k, unsigned threads) {
  check_enumeration_args(n);
  if (k > n) return 0;
  const PlusMinus pm = split_search(n, k, threads);
  return Count{pm.plus} + pm.minus;
}

SplitCount count_split(std::size_t n, std::size_t k, unsigned threads) {
  check_enumeration_args(n);
  if (k > n) return {0, 0};
  const PlusMinus pm = split_search(n, k, threads);
  return {Count{pm.plus}, Count{pm.minus}};
}

RhoClassStats rho_class_stats(const BinaryMatrix& a, std::size_t k) {
  const std::size_t n = a.n();
  if (k == 0) fail(ErrorCode::kInvalidParameter, "rho-classes need k >= 1");
  if (!is_lambda(a, k)) {
    fail(ErrorCode::kNotLambda, "matrix is not a Lambda_" + std::to_string(n) + "^" +
                                    std::to_string(k) + " matrix");
  }
  RhoClassStats stats;
  std::vector<RowBits> group_columns;
  for (RowBits bits = a.row(n - 1); bits != 0; bits &= bits - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(bits));
    stats.j_set.push_back(j);
    const RowBits col = a.column(j);
    const auto it = std::find(group_columns.begin(), group_columns.end(), col);
    if (it == group_columns.end()) {
      group_columns.push_back(col);
      stats.multiplicities.push_back(1);
    } else {
      ++stats.multiplicities[static_cast<std::size_t>(it - group_columns.begin())];
    }
  }
  Count group_factorials = 1;
  for (std::size_t m : stats.multiplicities) group_factorials *= factorial(static_cast<std::uint32_t>(m));

  const auto n32 = static_cast<std::uint32_t>(n);
  const auto k32 = static_cast<std::uint32_t>(k);
  stats.class_size =
      exact_div(factorial(n32), group_factorials * factorial(n32 - k32), "rho class size");
  // With n-1 < k every member has a 1 in the last column of the last row.
  stats.p_minus = n - 1 >= k ? exact_div(factorial(n32 - 1),
                                         group_factorials * factorial(n32 - 1 - k32), "p_minus")
                             : Count{0};
  stats.p_plus = stats.class_size - stats.p_minus;
  return stats;
}

std::vector<BinaryMatrix> rho_class_generate(const BinaryMatrix& a, std::size_t k) {
  const RhoClassStats stats = rho_class_stats(a, k);
  const std::size_t n = a.n();

  std::vector<RowBits> kept_columns;
  for (std::size_t j = 0; j < n; ++j) {
    if (!a.at(n - 1, j)) kept_columns.push_back(a.column(j));
  }
  std::vector<RowBits> group_columns;
  std::vector<std::size_t> labels;
  for (std::size_t j : stats.j_set) {
    const RowBits col = a.column(j);
    auto it = std::find(group_columns.begin(), group_columns.end(), col);
    if (it == group_columns.end()) {
      group_columns.push_back(col);
      it = group_columns.end() - 1;
    }
    labels.push_back(static_cast<std::size_t>(it - group_columns.begin()));
  }
  std::sort(labels.begin(), labels.end());

  std::vector<BinaryMatrix> out;
  auto place = [&](RowBits positions) {
    std::vector<std::size_t> order = labels;
    do {
      BinaryMatrix m(n);
      std::size_t next_kept = 0;
      std::size_t next_label = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const RowBits col = (positions >> j) & 1U ? group_columns[order[next_label++]]
                                                  : kept_columns[next_kept++];
        for (RowBits b = col; b != 0; b &= b - 1) m.set(static_cast<std::size_t>(std::countr_zero(b)), j, true);
      }
      out.push_back(std::move(m));
    } while (std::next_permutation(order.begin(), order.end()));
  };
  choose_columns(low_mask(n), RowBits{0}, k, 0, place);
  return out;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("LAMBDAKIT_THREADS");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) return 1;
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<long>(value, hw));
}

}  // namespace lambdakit
