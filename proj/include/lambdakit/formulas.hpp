#pragma once

#include <cstddef>

#include "lambdakit/count.hpp"

namespace lambdakit {

// Closed forms and recursions for lambda_{n,2}, lambda_{n,3} and the
// plus/minus split. All arithmetic is exact; every division asserts a zero
// remainder and raises ErrorCode::kInternalFault otherwise.

/// Sum over partitions of n into parts >= 2 of (n!)^2 / prod_r x_r! (2r)^{x_r},
/// where x_r is the multiplicity of part r. Zero for n = 1.
Count lambda2_partition_sum(std::size_t n);

/// lambda_n = n(n-1)^2 [(2n-3) lambda_{n-2} + (n-2)^2 lambda_{n-3}] / 2 for
/// n >= 4, from lambda_1 = 0, lambda_2 = 1, lambda_3 = 6.
Count lambda2_anand(std::size_t n);

/// lambda_n = (n-1) n lambda_{n-1} + ((n-1)^2 n / 2) lambda_{n-2} for n >= 3,
/// from lambda_1 = 0, lambda_2 = 1.
Count lambda2_good(std::size_t n);

struct LambdaPi {
  Count lambda;
  Count pi;
};

/// Coupled forward sweep of lambda_{n,2} together with the auxiliary
/// sequence pi_n (pi_1 = pi_2 = pi_3 = 0, pi_4 = 9).
LambdaPi lambda2_system(std::size_t n);

/// lambda^+_{n,2} = 2(n-1) lambda_{n-1,2} + (n-1)^2 lambda_{n-2,2}, n >= 3.
Count lambda2_plus(std::size_t n);

/// k * lambda / n. Raises kInconsistentInput when n does not divide k * lambda.
Count lambda_plus_from_total(std::size_t n, std::size_t k, const Count& lambda);

/// (n - k) * lambda_plus / k. Raises kInconsistentInput when k does not
/// divide (n - k) * lambda_plus.
Count lambda_minus_from_plus(std::size_t n, std::size_t k, const Count& lambda_plus);

/// Explicit alternating sum for lambda_{n,3} over all alpha + beta + gamma = n,
/// evaluated in exact rationals.
Count lambda3_explicit(std::size_t n);

}  // namespace lambdakit
