#pragma once

#include <initializer_list>
#include <vector>

#include "waring/geometry.hpp"
#include "waring/sampling.hpp"

namespace waring::test {

inline ProjectivePoint pt(std::initializer_list<long> coords) {
  std::vector<Rational> c;
  for (long x : coords) c.emplace_back(x);
  return ProjectivePoint(std::move(c));
}

inline PointSet pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<ProjectivePoint> out;
  for (const auto& r : rows) out.push_back(pt(r));
  return PointSet(std::move(out));
}

/// (1 : t : t^2 : ... : t^n) for the given parameters.
inline PointSet rational_normal_curve(std::size_t n, std::initializer_list<long> params) {
  std::vector<ProjectivePoint> out;
  for (long t : params) {
    std::vector<Rational> c;
    Rational v = 1;
    for (std::size_t i = 0; i <= n; ++i) {
      c.push_back(v);
      v *= t;
    }
    out.emplace_back(std::move(c));
  }
  return PointSet(std::move(out));
}

/// e_0, ..., e_n and (1, ..., 1).
inline PointSet simplex_plus_ones(std::size_t n) {
  std::vector<ProjectivePoint> out;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Rational> c(n + 1);
    c[i] = 1;
    out.emplace_back(std::move(c));
  }
  out.emplace_back(std::vector<Rational>(n + 1, Rational(1)));
  return PointSet(std::move(out));
}

inline PointSet general_points(std::size_t n, std::size_t count, std::uint64_t seed) {
  PointSampler s(seed);
  return s.point_set(n, count);
}

}  // namespace waring::test
