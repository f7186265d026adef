#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lambdakit/count.hpp"

namespace lambdakit {

/// Column-deficit profile: counts[d] is the number of columns that still need
/// exactly d ones. The number of unfilled rows is implied by sum d*counts[d] / k.
struct DeficitProfile {
  std::vector<std::size_t> counts;

  friend bool operator==(const DeficitProfile&, const DeficitProfile&) = default;
  friend auto operator<=>(const DeficitProfile&, const DeficitProfile&) = default;
};

/// Profile of a partial fill from the per-column outstanding ones. Every
/// entry must be <= k.
DeficitProfile profile_from_deficits(const std::vector<std::size_t>& deficits, std::size_t k);

/// Number of ways to complete a partial fill with the given profile, every
/// remaining row taking exactly k ones. Zero for infeasible profiles.
Count dp_count_from(const DeficitProfile& profile, std::size_t k);

/// lambda_{n,k} by row-at-a-time dynamic programming over deficit profiles.
/// Polynomial in n for fixed k. (n, 0) gives 1, including the empty n = 0
/// matrix; k > n gives 0.
Count dp_count(std::size_t n, std::size_t k);

/// (n, lambda_{n,k}) for n = k..n_max. Empty when n_max < k.
std::vector<std::pair<std::size_t, Count>> dp_table(std::size_t k, std::size_t n_max);

}  // namespace lambdakit
