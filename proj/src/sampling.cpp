#include "waring/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

PointSampler::PointSampler(std::uint64_t seed, std::int64_t bound) : engine_(seed), bound_(bound) {
  if (bound < 1) throw std::invalid_argument("sampling bound must be positive");
}

std::int64_t PointSampler::coordinate() {
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound_ + 1);
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
  std::uint64_t u;
  do {
    u = engine_();
  } while (u >= limit);
  return static_cast<std::int64_t>(u % span) - bound_;
}

ProjectivePoint PointSampler::point(std::size_t n) {
  for (;;) {
    std::vector<Rational> c(n + 1);
    bool nonzero = false;
    for (auto& x : c) {
      x = static_cast<long>(coordinate());
      nonzero = nonzero || x != 0;
    }
    if (nonzero) return ProjectivePoint(std::move(c));
  }
}

PointSet PointSampler::point_set(std::size_t n, std::size_t count) {
  if (n == 0 && count > 1) throw std::invalid_argument("P^0 has a single point");
  std::vector<ProjectivePoint> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    ProjectivePoint p = point(n);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

}  // namespace waring
