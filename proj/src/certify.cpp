#include "waring/certify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace waring {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Identifiable: return "identifiable";
    case Verdict::NotMinimal: return "not_minimal";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::Sylvester: return "sylvester";
    case Criterion::LinearBound: return "linear_bound";
    case Criterion::SpanningBound: return "spanning_bound";
    case Criterion::NoAlignedSubset: return "no_aligned_subset";
    case Criterion::PlaneGup: return "plane_gup";
    case Criterion::ReshapedKruskal: return "reshaped_kruskal";
    case Criterion::QuarticTerracini: return "quartic_terracini";
  }
  return "unknown";
}

std::optional<std::size_t> Diagnostics::kruskal_rank_at(unsigned j) const {
  for (const auto& [deg, k] : kruskal_ranks)
    if (deg == j) return k;
  return std::nullopt;
}

namespace {

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

struct Attempt {
  std::optional<CriterionHit> hit;
  std::string reason;
};

Attempt fired(Criterion c, std::string detail) {
  std::string reason = detail;
  return {CriterionHit{c, std::move(detail)}, std::move(reason)};
}

Attempt declined(std::string reason) { return {std::nullopt, std::move(reason)}; }

// Lazily computed invariants of one (A, d), shared by all criteria.
class Evaluator {
 public:
  Evaluator(const PointSet& a, unsigned d, unsigned jobs) : a_(a), d_(d), jobs_(jobs) {}

  const PointSet& points() const { return a_; }
  unsigned degree() const { return d_; }
  std::size_t ell() const { return a_.size(); }
  std::size_t n() const { return a_.ambient_dim(); }

  long span() {
    if (!span_) span_ = span_dim(a_);
    return *span_;
  }
  std::size_t collinear() {
    if (!collinear_) collinear_ = max_collinear_subset_size(a_);
    return *collinear_;
  }
  std::size_t kruskal(unsigned j) {
    auto it = kruskal_.find(j);
    if (it == kruskal_.end()) it = kruskal_.emplace(j, veronese_kruskal_rank(a_, j, jobs_)).first;
    return it->second;
  }
  bool gup() {
    if (!gup_) {
      bool ok = true;
      for (unsigned j = 1; ok && j <= gup_degree_cutoff(a_); ++j)
        ok = kruskal(j) == std::min(ell(), basis_size(n(), j));
      gup_ = ok;
    }
    return *gup_;
  }
  const std::vector<KruskalReport>& reports() {
    if (!reports_) {
      reports_.emplace();
      for (const auto& p : three_part_partitions(d_))
        reports_->push_back(make_kruskal_report(ell(), p, {kruskal(p.a), kruskal(p.b), kruskal(p.c)}));
    }
    return *reports_;
  }
  const TerraciniReport& terracini() {
    if (!terracini_) terracini_ = terracini_dimension(a_, d_);
    return *terracini_;
  }

 private:
  const PointSet& a_;
  unsigned d_;
  unsigned jobs_;
  std::optional<long> span_;
  std::optional<std::size_t> collinear_;
  std::map<unsigned, std::size_t> kruskal_;
  std::optional<bool> gup_;
  std::optional<std::vector<KruskalReport>> reports_;
  std::optional<TerraciniReport> terracini_;
};

Attempt try_sylvester(Evaluator& ev) {
  if (ev.n() != 1) return declined("only for binary forms (n = 1)");
  const std::size_t r = binary_generic_rank(ev.degree());
  if (ev.ell() < r) return fired(Criterion::Sylvester, cat("l = ", ev.ell(), " < generic rank ", r));
  if (ev.ell() == r && ev.degree() % 2 == 1) {
    return fired(Criterion::Sylvester, cat("l = generic rank ", r, " with d odd"));
  }
  return declined(cat("l = ", ev.ell(), " not below generic rank ", r));
}

Attempt try_linear_bound(Evaluator& ev) {
  const std::size_t d = ev.degree();
  if (2 * ev.ell() <= d + 1) return fired(Criterion::LinearBound, cat("2l = ", 2 * ev.ell(), " <= d + 1 = ", d + 1));
  return declined(cat("2l = ", 2 * ev.ell(), " > d + 1 = ", d + 1));
}

Attempt try_spanning_bound(Evaluator& ev) {
  const std::size_t d = ev.degree();
  if (ev.span() != static_cast<long>(ev.n())) return declined(cat("A spans only a P^", ev.span()));
  if (2 * ev.ell() <= d + ev.n()) {
    return fired(Criterion::SpanningBound, cat("A spans P^", ev.n(), " and 2l = ", 2 * ev.ell(), " <= d + n = ", d + ev.n()));
  }
  return declined(cat("2l = ", 2 * ev.ell(), " > d + n = ", d + ev.n()));
}

Attempt try_no_aligned_subset(Evaluator& ev) {
  const std::size_t d = ev.degree();
  if (ev.ell() > d) return declined(cat("l = ", ev.ell(), " > d = ", d));
  // Strict reading: the largest aligned subset must be smaller than d/2.
  if (2 * ev.collinear() < d) {
    return fired(Criterion::NoAlignedSubset, cat("l <= d and at most ", ev.collinear(), " < d/2 points on a line"));
  }
  return declined(cat(ev.collinear(), " aligned points, not below d/2"));
}

Attempt try_plane_gup(Evaluator& ev) {
  if (ev.n() != 2) return declined("only for plane sets (n = 2)");
  const std::size_t d = ev.degree();
  if (8 * ev.ell() >= d * d + d) return declined(cat("8l = ", 8 * ev.ell(), " >= d^2 + d = ", d * d + d));
  if (!ev.gup()) return declined("A is not in general uniform position");
  return fired(Criterion::PlaneGup, cat("A in general uniform position and 8l = ", 8 * ev.ell(), " < d^2 + d = ", d * d + d));
}

Attempt try_reshaped_kruskal(Evaluator& ev) {
  if (ev.degree() < 3) return declined("needs d >= 3");
  for (const auto& r : ev.reports()) {
    if (r.passes) {
      const auto& p = r.partition;
      return fired(Criterion::ReshapedKruskal,
                   cat("partition (", p.a, ",", p.b, ",", p.c, "): ranks (", r.ranks[0], ",", r.ranks[1], ",", r.ranks[2],
                       "), l = ", ev.ell(), " <= ", r.bound));
    }
  }
  return declined("no partition gives 2l <= k_a + k_b + k_c - 2");
}

Attempt try_quartic(Evaluator& ev) {
  if (ev.degree() != 4) return declined("only for quartics (d = 4)");
  const std::size_t k = ev.kruskal(1);
  const std::size_t bound = 2 * k - 1;
  if (ev.ell() > bound) return declined(cat("l = ", ev.ell(), " > 2k - 1 = ", bound, " (k = ", k, ")"));
  if (ev.ell() < bound) {
    Attempt a = try_reshaped_kruskal(ev);
    a.reason = cat("l < 2k - 1 = ", bound, ", deferred to reshaped Kruskal: ", a.reason);
    if (a.hit) a.hit->detail = a.reason;
    return a;
  }
  const auto& t = ev.terracini();
  const long target = static_cast<long>(bound * (ev.n() + 1)) - 1;
  if (t.dim == target) {
    return fired(Criterion::QuarticTerracini, cat("k = ", k, ", l = 2k - 1, Terracini dimension ", t.dim, " = (2k-1)(n+1) - 1"));
  }
  return declined(cat("Terracini dimension ", t.dim, " < (2k-1)(n+1) - 1 = ", target));
}

std::size_t complementary_bound_impl(Evaluator& ev) {
  const long ell = static_cast<long>(ev.ell());
  const long d = ev.degree();
  const long n = static_cast<long>(ev.n());
  long bound = 0;
  if (n == 1 && ell < d + 1) {
    bound = d + 2 - ell;
  } else if (ev.span() == n) {
    bound = d + n - ell;
  }
  return static_cast<std::size_t>(std::max(0L, bound));
}

}  // namespace

bool check_minimal(const PointSet& a, unsigned d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  return is_separated(a, d);
}

std::size_t binary_generic_rank(unsigned d) { return d / 2 + 1; }

std::optional<CriterionHit> criterion_sylvester(const PointSet& a, unsigned d) {
  Evaluator ev(a, d, 1);
  return try_sylvester(ev).hit;
}

std::optional<CriterionHit> criterion_linear_bound(const PointSet& a, unsigned d) {
  Evaluator ev(a, d, 1);
  return try_linear_bound(ev).hit;
}

std::optional<CriterionHit> criterion_spanning_bound(const PointSet& a, unsigned d) {
  Evaluator ev(a, d, 1);
  return try_spanning_bound(ev).hit;
}

std::optional<CriterionHit> criterion_no_aligned_subset(const PointSet& a, unsigned d) {
  Evaluator ev(a, d, 1);
  return try_no_aligned_subset(ev).hit;
}

std::optional<CriterionHit> criterion_plane_gup(const PointSet& a, unsigned d) {
  Evaluator ev(a, d, 1);
  return try_plane_gup(ev).hit;
}

std::optional<CriterionHit> criterion_reshaped_kruskal(const PointSet& a, unsigned d) {
  Evaluator ev(a, d, 1);
  return try_reshaped_kruskal(ev).hit;
}

std::optional<CriterionHit> criterion_quartic(const PointSet& a) {
  Evaluator ev(a, 4, 1);
  return try_quartic(ev).hit;
}

std::size_t complementary_bound(const PointSet& a, unsigned d) {
  Evaluator ev(a, d, 1);
  return complementary_bound_impl(ev);
}

Certificate certify(const PointSet& a, unsigned d, const CertifyOptions& options) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  Evaluator ev(a, d, std::max(1u, options.jobs));
  Certificate cert;
  auto& diag = cert.diagnostics;
  diag.ambient_dim = a.ambient_dim();
  diag.points = a.size();
  diag.degree = d;
  diag.hilbert = hilbert_profile(a, d);
  diag.hilbert_at_degree = diag.hilbert.value(d);

  if (diag.hilbert_at_degree < a.size()) {
    cert.verdict = Verdict::NotMinimal;
    cert.detail = cat("h_A(", d, ") = ", diag.hilbert_at_degree, " < l = ", a.size(),
                      ": nu_d(A) is linearly dependent");
  } else {
    using Step = Attempt (*)(Evaluator&);
    const std::pair<Criterion, Step> steps[] = {
        {Criterion::Sylvester, try_sylvester},
        {Criterion::LinearBound, try_linear_bound},
        {Criterion::SpanningBound, try_spanning_bound},
        {Criterion::NoAlignedSubset, try_no_aligned_subset},
        {Criterion::PlaneGup, try_plane_gup},
        {Criterion::ReshapedKruskal, try_reshaped_kruskal},
        {Criterion::QuarticTerracini, try_quartic},
    };
    for (const auto& [criterion, step] : steps) {
      if (criterion == Criterion::QuarticTerracini && d != 4) continue;
      Attempt attempt = step(ev);
      cert.trace.push_back({criterion, attempt.hit.has_value(), attempt.reason});
      if (attempt.hit) {
        cert.verdict = Verdict::Identifiable;
        cert.criterion = attempt.hit->criterion;
        cert.rank = a.size();
        cert.detail = attempt.hit->detail;
        break;
      }
    }
    if (cert.verdict != Verdict::Identifiable) cert.detail = "no criterion applies";
  }

  diag.span_dim = ev.span();
  diag.max_collinear = ev.collinear();
  for (unsigned j = 1; j <= std::max(1u, d >= 2 ? d - 2 : 1u); ++j) diag.kruskal_ranks.emplace_back(j, ev.kruskal(j));
  if (a.ambient_dim() == 2) diag.gup = ev.gup();
  if (d >= 3) diag.kruskal_reports = ev.reports();
  if (d >= 2) diag.terracini = ev.terracini();
  diag.complementary_bound = complementary_bound_impl(ev);
  return cert;
}

bool recheck_from_diagnostics(const Certificate& cert) {
  if (cert.verdict != Verdict::Identifiable) return false;
  if (!cert.criterion || cert.rank != cert.diagnostics.points) return false;
  const auto& g = cert.diagnostics;
  const std::size_t ell = g.points;
  const std::size_t d = g.degree;
  const std::size_t n = g.ambient_dim;
  if (g.hilbert_at_degree != ell) return false;

  auto reshaped_ok = [&] {
    return std::any_of(g.kruskal_reports.begin(), g.kruskal_reports.end(), [&](const KruskalReport& r) {
      return 2 * static_cast<long>(ell) <= static_cast<long>(r.ranks[0] + r.ranks[1] + r.ranks[2]) - 2;
    });
  };

  switch (*cert.criterion) {
    case Criterion::Sylvester: {
      const std::size_t r = binary_generic_rank(static_cast<unsigned>(d));
      return n == 1 && (ell < r || (ell == r && d % 2 == 1));
    }
    case Criterion::LinearBound: return 2 * ell <= d + 1;
    case Criterion::SpanningBound: return g.span_dim == static_cast<long>(n) && 2 * ell <= d + n;
    case Criterion::NoAlignedSubset: return ell <= d && 2 * g.max_collinear < d;
    case Criterion::PlaneGup: return n == 2 && g.gup == true && 8 * ell < d * d + d;
    case Criterion::ReshapedKruskal: return reshaped_ok();
    case Criterion::QuarticTerracini: {
      const auto k = g.kruskal_rank_at(1);
      if (d != 4 || !k || !g.terracini) return false;
      return ell == 2 * *k - 1 && g.terracini->dim == static_cast<long>((2 * *k - 1) * (n + 1)) - 1;
    }
  }
  return false;
}

GenericInfo generic_info(std::size_t n, unsigned d, const GenericOptions& options) {
  if (d < 2 || n < 1) throw std::invalid_argument("generic_info needs d >= 2 and n >= 1");
  GenericInfo info;
  info.n = n;
  info.d = d;
  const std::size_t space = basis_size(n, d);
  info.expected_generic_rank = (space + n) / (n + 1);
  info.generic_rank = info.expected_generic_rank;

  if (space <= options.max_basis_size) {
    // Terracini's lemma: the generic rank is the first r whose secant variety
    // fills P^N. It is never below the expected value.
    const long full = static_cast<long>(space) - 1;
    // Every r passed over has r(n+1) - 1 >= N, so a deficient Terracini
    // space means a defective secant variety.
    std::size_t r = info.expected_generic_rank;
    while (generic_terracini_dimension(n, d, r, options.trials, options.seed + r, options.jobs) < full) {
      if (d > 2) info.exceptions.push_back({r, "defective secant variety: infinitely many decompositions"});
      ++r;
    }
    info.generic_rank = r;
    info.generic_rank_verified = true;
  }

  if (d == 2) {
    info.exceptions.insert(info.exceptions.begin(), {std::nullopt, "infinitely many decompositions"});
  }
  struct Triple {
    std::size_t n;
    unsigned d;
    std::size_t r;
  };
  constexpr Triple two_decompositions[] = {{2, 6, 9}, {3, 4, 8}, {5, 3, 9}};
  for (const auto& t : two_decompositions) {
    if (t.n == n && t.d == d) info.exceptions.push_back({t.r, "exactly two decompositions"});
  }
  std::stable_sort(info.exceptions.begin(), info.exceptions.end(),
                   [](const IdentifiabilityException& x, const IdentifiabilityException& y) { return x.rank < y.rank; });
  return info;
}

}  // namespace waring
