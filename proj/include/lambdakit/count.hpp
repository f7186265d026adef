#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lambdakit {

/// Arbitrary-precision integer used for every count. Values handed out by the
/// library are nonnegative; signed arithmetic is allowed in intermediate terms.
using Count = boost::multiprecision::cpp_int;

/// Exact rational, always held in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

std::string to_string(const Count& value);
Count count_from_string(const std::string& digits);

/// n! from a process-wide cache that grows on demand. Thread-safe.
Count factorial(std::uint32_t n);

/// C(n, r) from cached Pascal rows; zero when r > n. Thread-safe.
Count binomial(std::uint32_t n, std::uint32_t r);

/// numerator / denominator, raising kInternalFault if the division leaves a
/// remainder. `what` names the quantity for the error message.
Count exact_div(const Count& numerator, const Count& denominator, const char* what);

}  // namespace lambdakit
