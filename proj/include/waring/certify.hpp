#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "waring/geometry.hpp"
#include "waring/hilbert.hpp"
#include "waring/kruskal.hpp"
#include "waring/terracini.hpp"

namespace waring {

enum class Verdict { Identifiable, NotMinimal, Inconclusive };

/// Sufficient conditions for a form with minimal decomposition A to have
/// rank ℓ(A) and a unique minimal decomposition.
enum class Criterion {
  Sylvester,         ///< binary forms below (or at, for odd d) the generic rank
  LinearBound,       ///< 2ℓ(A) <= d + 1
  SpanningBound,     ///< <A> = P^n and 2ℓ(A) <= d + n
  NoAlignedSubset,   ///< ℓ(A) <= d and fewer than d/2 points on any line
  PlaneGup,          ///< n = 2, A in general uniform position, 8ℓ(A) < d^2 + d
  ReshapedKruskal,   ///< 2ℓ(A) <= k_a + k_b + k_c - 2 for some d = a + b + c
  QuarticTerracini,  ///< d = 4, ℓ(A) = 2k - 1 and Terracini space of full dimension
};

std::string_view to_string(Verdict v);
std::string_view to_string(Criterion c);

struct CriterionHit {
  Criterion criterion;
  std::string detail;
};

/// Everything the criteria look at, so a certificate can be re-checked
/// without touching the points again.
struct Diagnostics {
  std::size_t ambient_dim = 0;
  std::size_t points = 0;
  unsigned degree = 0;
  long span_dim = 0;
  HilbertProfile hilbert{1, {1}};
  std::size_t hilbert_at_degree = 0;  ///< h_A(d)
  std::size_t max_collinear = 0;
  /// (j, Kruskal rank of ν_j(A)) for j = 1 .. max(1, d - 2).
  std::vector<std::pair<unsigned, std::size_t>> kruskal_ranks;
  std::optional<bool> gup;                    ///< computed only in the plane
  std::vector<KruskalReport> kruskal_reports; ///< empty for d < 3
  std::optional<TerraciniReport> terracini;   ///< absent for d < 2
  std::size_t complementary_bound = 0;

  std::optional<std::size_t> kruskal_rank_at(unsigned j) const;
};

struct TraceEntry {
  Criterion criterion;
  bool fired;
  std::string reason;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Criterion> criterion;  ///< set iff Identifiable
  std::optional<std::size_t> rank;     ///< ℓ(A) iff Identifiable
  std::string detail;
  Diagnostics diagnostics;
  std::vector<TraceEntry> trace;
};

struct CertifyOptions {
  unsigned jobs = 1;
};

/// h_A(d) = ℓ(A): ν_d(A) is linearly independent.
bool check_minimal(const PointSet& a, unsigned d);

/// Generic rank of binary forms of degree d: floor(d/2) + 1.
std::size_t binary_generic_rank(unsigned d);

std::optional<CriterionHit> criterion_sylvester(const PointSet& a, unsigned d);
std::optional<CriterionHit> criterion_linear_bound(const PointSet& a, unsigned d);
std::optional<CriterionHit> criterion_spanning_bound(const PointSet& a, unsigned d);
std::optional<CriterionHit> criterion_no_aligned_subset(const PointSet& a, unsigned d);
std::optional<CriterionHit> criterion_plane_gup(const PointSet& a, unsigned d);
std::optional<CriterionHit> criterion_reshaped_kruskal(const PointSet& a, unsigned d);

/// Degree-4 test driven by the Kruskal rank k of A:
///   ℓ(A) > 2k - 1: not applicable;
///   ℓ(A) < 2k - 1: reshaped Kruskal decides (reported as ReshapedKruskal);
///   ℓ(A) = 2k - 1: fires iff the Terracini space has dimension (2k-1)(n+1)-1.
std::optional<CriterionHit> criterion_quartic(const PointSet& a);

/// Proven lower bound on ℓ(B) for any other minimal decomposition B of a
/// degree-d form with minimal decomposition A; 0 when nothing is known.
std::size_t complementary_bound(const PointSet& a, unsigned d);

/// Runs the criteria cheapest-first; the first one to fire wins. Throws
/// std::invalid_argument for d < 1.
Certificate certify(const PointSet& a, unsigned d, const CertifyOptions& options = {});

/// Re-derives the recorded criterion's hypothesis from the diagnostics
/// alone. True for every Identifiable certificate produced by certify().
bool recheck_from_diagnostics(const Certificate& cert);

struct IdentifiabilityException {
  std::optional<std::size_t> rank;  ///< nullopt: every subgeneric rank >= 2
  std::string note;
};

struct GenericInfo {
  std::size_t n = 0;
  unsigned d = 0;
  std::size_t expected_generic_rank = 0;  ///< ceil(C(n+d,d) / (n+1))
  std::size_t generic_rank = 0;
  bool generic_rank_verified = false;     ///< false: formula only, no oracle run
  std::vector<IdentifiabilityException> exceptions;
};

struct GenericOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 2;
  unsigned jobs = 1;
  std::size_t max_basis_size = 500;  ///< oracle runs only when C(n+d,d) <= this
};

/// Requires d >= 2 and n >= 1.
GenericInfo generic_info(std::size_t n, unsigned d, const GenericOptions& options = {});

}  // namespace waring
