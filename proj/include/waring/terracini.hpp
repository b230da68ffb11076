#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "waring/geometry.hpp"
#include "waring/matrix.hpp"

namespace waring {

/// The forms L^{d-1} x_0, ..., L^{d-1} x_n where L is the linear form with
/// the coordinates of p. They span the affine cone over the tangent space to
/// ν_d(P^n) at ν_d(p). Requires d >= 2.
std::vector<Form> tangent_space_basis(const ProjectivePoint& p, unsigned d);

/// All dimensions are projective (rank - 1).
struct TerraciniReport {
  std::size_t points;          ///< r = ℓ(A)
  std::size_t ambient_dim;     ///< N(d, n)
  long dim;                    ///< dimension of the Terracini space
  long max_possible;           ///< (n+1) r - 1
  bool is_maximal;             ///< dim = min(max_possible, N)
  bool tangents_independent;   ///< dim = max_possible

  friend bool operator==(const TerraciniReport&, const TerraciniReport&) = default;
};

/// r(n+1) × C(n+d,d) coefficient matrix of every L_i^{d-1} x_j.
Matrix terracini_matrix(const PointSet& a, unsigned d);

TerraciniReport terracini_dimension(const PointSet& a, unsigned d);

/// Maximum Terracini dimension over `trials` pseudo-random sets of r points
/// of P^n drawn by PointSampler(seed). With jobs > 1 trials run
/// concurrently; the result is the same.
long generic_terracini_dimension(std::size_t n, unsigned d, std::size_t r, std::size_t trials,
                                 std::uint64_t seed, unsigned jobs = 1);

}  // namespace waring
