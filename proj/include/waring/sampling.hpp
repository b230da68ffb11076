#pragma once

#include <cstdint>
#include <random>

#include "waring/geometry.hpp"

namespace waring {

/// Reproducible source of pseudo-random rational point sets.
///
/// Coordinates are integers drawn uniformly from [-bound, bound] using
/// rejection sampling on raw mt19937_64 output, so a seed yields the same
/// points on every platform. Zero vectors and repeated points are redrawn.
class PointSampler {
 public:
  static constexpr std::int64_t kDefaultBound = 50;

  explicit PointSampler(std::uint64_t seed, std::int64_t bound = kDefaultBound);

  std::int64_t coordinate();
  ProjectivePoint point(std::size_t n);
  PointSet point_set(std::size_t n, std::size_t count);

 private:
  std::mt19937_64 engine_;
  std::int64_t bound_;
};

}  // namespace waring
