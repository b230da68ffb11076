#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "waring/geometry.hpp"

namespace waring {

/// Largest k such that every subset of A with at most k points is linearly
/// independent. `jobs` > 1 spreads subset checks over worker threads; the
/// result does not depend on it.
std::size_t kruskal_rank(const PointSet& a, unsigned jobs = 1);

/// Linear general position: kruskal_rank(A) = min(ℓ(A), n+1).
bool is_lgp(const PointSet& a, unsigned jobs = 1);

/// Kruskal rank of ν_j(A).
std::size_t veronese_kruskal_rank(const PointSet& a, unsigned j, unsigned jobs = 1);

/// Largest Veronese degree the GUP test has to inspect: the first j with
/// C(n+j, j) >= ℓ(A). Beyond it, maximal Kruskal rank means ν_j(A) is
/// linearly independent, which propagates upward since h_A is non-decreasing.
unsigned gup_degree_cutoff(const PointSet& a);

/// General uniform position: ν_j(A) has maximal Kruskal rank for all j >= 1.
bool is_gup(const PointSet& a, unsigned jobs = 1);

struct Partition {
  unsigned a;
  unsigned b;
  unsigned c;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// d = a + b + c with 0 < a <= b <= c, most unbalanced (largest c) first;
/// ties broken by smaller a.
std::vector<Partition> three_part_partitions(unsigned d);

struct KruskalReport {
  Partition partition;
  std::array<std::size_t, 3> ranks;  ///< Kruskal ranks of ν_a(A), ν_b(A), ν_c(A)
  long bound;                        ///< floor((k_a + k_b + k_c - 2) / 2)
  bool passes;                       ///< 2ℓ(A) <= k_a + k_b + k_c - 2
};

/// One report per partition of d. Throws std::invalid_argument for d < 3.
std::vector<KruskalReport> reshaped_kruskal(const PointSet& a, unsigned d, unsigned jobs = 1);

/// Builds a report from precomputed ranks.
KruskalReport make_kruskal_report(std::size_t set_size, Partition p, std::array<std::size_t, 3> ranks);

}  // namespace waring
