#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/geometry.hpp"
#include "waring/matrix.hpp"

namespace waring {

/// Hilbert function h_Z(0..j_max) of a finite set together with its first
/// difference Dh_Z. j_max is at least ℓ(Z) - 1, where the function has
/// reached ℓ(Z) and stays there.
class HilbertProfile {
 public:
  HilbertProfile(std::size_t set_size, std::vector<std::size_t> values);

  std::size_t set_size() const { return set_size_; }
  std::size_t j_max() const { return values_.size() - 1; }
  const std::vector<std::size_t>& values() const { return values_; }
  const std::vector<std::size_t>& diffs() const { return diffs_; }

  /// h_Z(d) for any integer d: 0 below zero, ℓ beyond j_max.
  std::size_t value(long d) const;
  /// Dh_Z(d) for any integer d.
  std::size_t diff(long d) const;
  /// Dh_Z with trailing zeros removed, e.g. (1,2,2,1).
  std::vector<std::size_t> h_vector() const;
  /// Smallest d with h_Z(d) = ℓ(Z).
  std::size_t separation_degree() const;

  friend bool operator==(const HilbertProfile&, const HilbertProfile&) = default;

 private:
  std::size_t set_size_;
  std::vector<std::size_t> values_;
  std::vector<std::size_t> diffs_;
};

/// ℓ(Z) × C(n+d,d) matrix of monomial values at the canonical coordinates.
Matrix evaluation_matrix(const PointSet& z, unsigned d);

/// h_Z(d) = rank of the degree-d evaluation map; 0 for d < 0.
std::size_t hilbert_function(const PointSet& z, long d);

/// Profile on 0..max(ℓ(Z) - 1, min_j_max).
HilbertProfile hilbert_profile(const PointSet& z, std::size_t min_j_max = 0);

/// h_Z(d) = ℓ(Z).
bool is_separated(const PointSet& z, unsigned d);

/// True if some degree-d form vanishes on Z minus the indexed point but not
/// on it. Throws std::out_of_range for a bad index.
bool separates_point(const PointSet& z, std::size_t index, unsigned d);

/// Cayley–Bacharach in degree i: no point of Z is separated from the others
/// by degree-i forms. Always false for a singleton.
bool satisfies_cb(const PointSet& z, unsigned i);

/// Largest i with CB(i), or nullopt if CB(0) already fails (singletons).
std::optional<unsigned> largest_cb_degree(const PointSet& z);

/// Checks Dh(0)+...+Dh(j) <= Dh(i+1-j)+...+Dh(i+1) for all 0 <= j <= i+1.
/// Every set with CB(i) satisfies it.
bool check_gkr_inequality(const HilbertProfile& profile, unsigned i);

/// For Z = A ∪ B: h_Z(d) < ℓ(Z). Necessary for A and B to be two
/// different minimal decompositions of one degree-d form.
bool union_profile_drop(const PointSet& a, const PointSet& b, unsigned d);

/// Projective dimension of <ν_d(A)> ∩ <ν_d(B)>, computed as ℓ(Z) - h_Z(d) - 1
/// with Z = A ∪ B (-1 means empty). Requires A, B disjoint and ν_d(A),
/// ν_d(B) each linearly independent; throws std::invalid_argument otherwise.
long span_intersection_dim(const PointSet& a, const PointSet& b, unsigned d);

}  // namespace waring
