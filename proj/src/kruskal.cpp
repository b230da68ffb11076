#include "waring/kruskal.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "waring/matrix.hpp"

namespace waring {

namespace {

// Advances `idx` to the next s-combination of {0..n-1} in lex order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// True if every s-subset of the rows of `coords` is linearly independent.
bool all_subsets_independent(const Matrix& coords, std::size_t s, unsigned jobs) {
  const std::size_t n = coords.rows();
  auto independent = [&](const std::vector<std::size_t>& idx) { return rank(coords.select_rows(idx)) == s; };

  if (jobs <= 1) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      if (!independent(idx)) return false;
    } while (next_combination(idx, n));
    return true;
  }

  // Worker w checks the combinations whose ordinal is w mod jobs.
  std::atomic<bool> dependent{false};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      std::vector<std::size_t> idx(s);
      for (std::size_t i = 0; i < s; ++i) idx[i] = i;
      std::size_t ordinal = 0;
      do {
        if (dependent.load(std::memory_order_relaxed)) return;
        if (ordinal++ % jobs == w && !independent(idx)) {
          dependent.store(true, std::memory_order_relaxed);
          return;
        }
      } while (next_combination(idx, n));
    });
  }
  workers.clear();
  return !dependent.load();
}

}  // namespace

std::size_t kruskal_rank(const PointSet& a, unsigned jobs) {
  if (a.size() == 1) return 1;
  const Matrix coords = a.coordinate_matrix();
  const std::size_t cap = std::min(a.size(), a.ambient_dim() + 1);
  // Whole set independent: every subset is too.
  if (cap == a.size() && rank(coords) == a.size()) return a.size();
  // Distinct projective points are pairwise independent.
  std::size_t k = 2;
  for (std::size_t s = 3; s <= cap; ++s) {
    if (!all_subsets_independent(coords, s, jobs)) break;
    k = s;
  }
  return k;
}

bool is_lgp(const PointSet& a, unsigned jobs) {
  return kruskal_rank(a, jobs) == std::min(a.size(), a.ambient_dim() + 1);
}

std::size_t veronese_kruskal_rank(const PointSet& a, unsigned j, unsigned jobs) {
  if (j < 1) throw std::invalid_argument("Veronese degree must be at least 1");
  return kruskal_rank(veronese_embed_set(a, j), jobs);
}

unsigned gup_degree_cutoff(const PointSet& a) {
  unsigned j = 1;
  while (basis_size(a.ambient_dim(), j) < a.size()) ++j;
  return j;
}

bool is_gup(const PointSet& a, unsigned jobs) {
  const unsigned top = gup_degree_cutoff(a);
  for (unsigned j = 1; j <= top; ++j) {
    const std::size_t target = std::min(a.size(), basis_size(a.ambient_dim(), j));
    if (veronese_kruskal_rank(a, j, jobs) != target) return false;
  }
  return true;
}

std::vector<Partition> three_part_partitions(unsigned d) {
  std::vector<Partition> out;
  for (unsigned a = 1; 3 * a <= d; ++a)
    for (unsigned b = a; a + 2 * b <= d; ++b) out.push_back({a, b, d - a - b});
  std::stable_sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    return x.c != y.c ? x.c > y.c : x.a < y.a;
  });
  return out;
}

KruskalReport make_kruskal_report(std::size_t set_size, Partition p, std::array<std::size_t, 3> ranks) {
  const long sum = static_cast<long>(ranks[0] + ranks[1] + ranks[2]) - 2;
  // sum >= 1 since every Kruskal rank is at least 1.
  return KruskalReport{p, ranks, sum / 2, 2 * static_cast<long>(set_size) <= sum};
}

std::vector<KruskalReport> reshaped_kruskal(const PointSet& a, unsigned d, unsigned jobs) {
  if (d < 3) throw std::invalid_argument("reshaped Kruskal needs d >= 3 for a three-part partition");
  std::map<unsigned, std::size_t> cache;
  auto k = [&](unsigned j) {
    auto it = cache.find(j);
    if (it == cache.end()) it = cache.emplace(j, veronese_kruskal_rank(a, j, jobs)).first;
    return it->second;
  };
  std::vector<KruskalReport> out;
  for (const auto& p : three_part_partitions(d)) out.push_back(make_kruskal_report(a.size(), p, {k(p.a), k(p.b), k(p.c)}));
  return out;
}

}  // namespace waring
