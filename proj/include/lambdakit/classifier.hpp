#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "lambdakit/binary_matrix.hpp"
#include "lambdakit/count.hpp"

namespace lambdakit {

/// The seven classes partitioning Lambda_n^{3+} by the pattern of X~.
enum class ClassLabel {
  kA,      // four ones
  kB,      // three ones
  kGamma,  // one all-ones column, the other zero
  kDelta,  // one all-ones row, the other zero
  kE,      // ones on one diagonal only
  kZ,      // a single one
  kH,      // all zeros
};

inline constexpr std::array<ClassLabel, 7> kAllClassLabels = {
    ClassLabel::kA, ClassLabel::kB, ClassLabel::kGamma, ClassLabel::kDelta,
    ClassLabel::kE, ClassLabel::kZ, ClassLabel::kH};

std::string_view to_string(ClassLabel label);

struct ClassCounts {
  Count alpha;
  Count beta;
  Count gamma;
  Count delta;
  Count epsilon;
  Count zeta;
  Count eta;

  Count& operator[](ClassLabel label);
  const Count& operator[](ClassLabel label) const;
  Count total() const;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Class of a 2x2 pattern, by lookup on TildeSubmatrix::pattern().
ClassLabel classify_pattern(const TildeSubmatrix& tilde);

/// Validates X in Lambda_n^{3+} and classifies its X~ submatrix.
ClassLabel classify_plus3(const BinaryMatrix& x);

/// Census of Lambda_n^{3+} by exhaustive enumeration, 3 <= n <= 7.
ClassCounts class_counts(std::size_t n, unsigned threads = 1);

struct Theorem4Report {
  std::size_t n = 0;
  Count lhs;  // lambda^+_{n,3}, enumerated
  Count rhs;  // 3(n-1)(3n-8)/2 * lambda_{n-1,3} + alpha + beta + 2 gamma - eta
  ClassCounts counts;
  bool holds = false;
};

/// Evaluates both sides of the lambda^+_{n,3} class identity, 4 <= n <= 7.
Theorem4Report theorem4_check(std::size_t n, unsigned threads = 1);

}  // namespace lambdakit
