#pragma once

#include <cstdint>
#include <random>

#include "qlag/bigrational.hpp"

namespace qlag {

/// Deterministic source of small-height rationals. Only raw engine output
/// and integer modulo are used, so streams agree across standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int height = 7) : engine_(seed), height_(height) {}

  /// p/r with 1 <= |p| <= height, 1 <= r <= height; never 0, 1 or -1.
  BigRational next();
  /// Uniform integer in [lo, hi].
  int next_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
  int height_;
};

inline constexpr int kMaxResamples = 200;

}  // namespace qlag
