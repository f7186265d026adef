#include "lambdakit/profile_dp.hpp"

#include <map>
#include <string>

#include "lambdakit/error.hpp"

namespace lambdakit {
namespace {

using Layer = std::map<DeficitProfile, Count>;

/// Distributes one row's k ones over the deficit classes: m[d] columns move
/// from class d to class d-1, weighted by prod_d C(counts[d], m[d]).
void spread_row(const DeficitProfile& from, const Count& weight, std::size_t d,
                std::size_t ones_left, std::vector<std::size_t>& moved, Layer& into) {
  if (d == 0) {
    if (ones_left != 0) return;
    DeficitProfile to = from;
    for (std::size_t c = 1; c < moved.size(); ++c) {
      to.counts[c] -= moved[c];
      to.counts[c - 1] += moved[c];
    }
    into[to] += weight;
    return;
  }
  const std::size_t available = from.counts[d];
  for (std::size_t m = 0; m <= std::min(available, ones_left); ++m) {
    moved[d] = m;
    spread_row(from, weight * binomial(static_cast<std::uint32_t>(available),
                                       static_cast<std::uint32_t>(m)),
               d - 1, ones_left - m, moved, into);
  }
  moved[d] = 0;
}

/// Largest d with counts[d] > 0; zero for the finished profile.
std::size_t max_deficit(const DeficitProfile& p) {
  for (std::size_t d = p.counts.size(); d-- > 1;) {
    if (p.counts[d] > 0) return d;
  }
  return 0;
}

std::size_t outstanding(const DeficitProfile& p) {
  std::size_t total = 0;
  for (std::size_t d = 0; d < p.counts.size(); ++d) total += d * p.counts[d];
  return total;
}

}  // namespace

DeficitProfile profile_from_deficits(const std::vector<std::size_t>& deficits, std::size_t k) {
  DeficitProfile p{std::vector<std::size_t>(k + 1, 0)};
  for (std::size_t d : deficits) {
    if (d > k) {
      fail(ErrorCode::kInvalidParameter,
           "column deficit " + std::to_string(d) + " exceeds k=" + std::to_string(k));
    }
    ++p.counts[d];
  }
  return p;
}

Count dp_count_from(const DeficitProfile& profile, std::size_t k) {
  if (profile.counts.size() != k + 1) {
    fail(ErrorCode::kInvalidParameter, "profile must have k+1 entries");
  }
  const std::size_t total = outstanding(profile);
  if (k == 0) return total == 0 ? 1 : 0;
  if (total % k != 0) return 0;
  const std::size_t rows = total / k;

  Layer layer{{profile, Count{1}}};
  std::vector<std::size_t> moved(k + 1, 0);
  for (std::size_t row = 0; row < rows; ++row) {
    const std::size_t rows_left = rows - row;
    Layer next;
    for (const auto& [state, ways] : layer) {
      // A column needing more ones than there are rows left can never finish.
      if (max_deficit(state) > rows_left) continue;
      spread_row(state, ways, k, k, moved, next);
    }
    layer = std::move(next);
  }
  std::size_t columns = 0;
  for (std::size_t c : profile.counts) columns += c;
  DeficitProfile finished{std::vector<std::size_t>(k + 1, 0)};
  finished.counts[0] = columns;
  const auto done = layer.find(finished);
  return done == layer.end() ? Count{0} : done->second;
}

Count dp_count(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (n == 0 || k == 0) return 1;
  return dp_count_from(profile_from_deficits(std::vector<std::size_t>(n, k), k), k);
}

std::vector<std::pair<std::size_t, Count>> dp_table(std::size_t k, std::size_t n_max) {
  std::vector<std::pair<std::size_t, Count>> rows;
  for (std::size_t n = k; n <= n_max; ++n) rows.emplace_back(n, dp_count(n, k));
  return rows;
}

}  // namespace lambdakit
