#include "waring/hilbert.hpp"

#include <stdexcept>

namespace waring {

HilbertProfile::HilbertProfile(std::size_t set_size, std::vector<std::size_t> values)
    : set_size_(set_size), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("empty Hilbert profile");
  diffs_.reserve(values_.size());
  std::size_t prev = 0;
  for (auto v : values_) {
    if (v < prev) throw std::invalid_argument("Hilbert function must be non-decreasing");
    diffs_.push_back(v - prev);
    prev = v;
  }
}

std::size_t HilbertProfile::value(long d) const {
  if (d < 0) return 0;
  if (static_cast<std::size_t>(d) > j_max()) return set_size_;
  return values_[static_cast<std::size_t>(d)];
}

std::size_t HilbertProfile::diff(long d) const { return value(d) - value(d - 1); }

std::vector<std::size_t> HilbertProfile::h_vector() const {
  std::vector<std::size_t> out = diffs_;
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::size_t HilbertProfile::separation_degree() const {
  for (std::size_t d = 0; d <= j_max(); ++d)
    if (values_[d] == set_size_) return d;
  return j_max() + 1;
}

Matrix evaluation_matrix(const PointSet& z, unsigned d) {
  const auto basis = monomial_basis(z.ambient_dim(), d);
  Matrix m(z.size(), basis.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = monomial_value(basis[j], z[i].coords());
  return m;
}

std::size_t hilbert_function(const PointSet& z, long d) {
  if (d < 0) return 0;
  return rank(evaluation_matrix(z, static_cast<unsigned>(d)));
}

HilbertProfile hilbert_profile(const PointSet& z, std::size_t min_j_max) {
  const std::size_t top = std::max(z.size() - 1, min_j_max);
  std::vector<std::size_t> values;
  values.reserve(top + 1);
  for (std::size_t d = 0; d <= top; ++d) values.push_back(hilbert_function(z, static_cast<long>(d)));
  return HilbertProfile(z.size(), std::move(values));
}

bool is_separated(const PointSet& z, unsigned d) { return hilbert_function(z, d) == z.size(); }

namespace {

// dim I_{Z∖P}(d) > dim I_Z(d), i.e. dropping the row lowers the rank.
bool separates_row(const Matrix& ev, std::size_t full_rank, std::size_t index) {
  return rank(ev.without_row(index)) < full_rank;
}

}  // namespace

bool separates_point(const PointSet& z, std::size_t index, unsigned d) {
  if (index >= z.size()) throw std::out_of_range("point index out of range");
  const Matrix ev = evaluation_matrix(z, d);
  return separates_row(ev, rank(ev), index);
}

bool satisfies_cb(const PointSet& z, unsigned i) {
  if (z.size() < 2) return false;
  const Matrix ev = evaluation_matrix(z, i);
  const std::size_t full = rank(ev);
  if (full == z.size()) return false;
  for (std::size_t p = 0; p < z.size(); ++p) {
    if (separates_row(ev, full, p)) return false;
  }
  return true;
}

std::optional<unsigned> largest_cb_degree(const PointSet& z) {
  std::optional<unsigned> best;
  // CB(i) implies CB(i-1), and fails once h_Z(i) = ℓ(Z), i.e. by i = ℓ - 1.
  for (unsigned i = 0; i < z.size(); ++i) {
    if (!satisfies_cb(z, i)) break;
    best = i;
  }
  return best;
}

bool check_gkr_inequality(const HilbertProfile& profile, unsigned i) {
  const long top = static_cast<long>(i) + 1;
  for (long j = 0; j <= top; ++j) {
    std::size_t head = 0;
    for (long t = 0; t <= j; ++t) head += profile.diff(t);
    std::size_t tail = 0;
    for (long t = top - j; t <= top; ++t) tail += profile.diff(t);
    if (head > tail) return false;
  }
  return true;
}

bool union_profile_drop(const PointSet& a, const PointSet& b, unsigned d) {
  const PointSet z = set_union(a, b);
  return hilbert_function(z, d) < z.size();
}

long span_intersection_dim(const PointSet& a, const PointSet& b, unsigned d) {
  if (!are_disjoint(a, b)) throw std::invalid_argument("span_intersection_dim needs disjoint point sets");
  if (!is_separated(a, d) || !is_separated(b, d)) {
    throw std::invalid_argument("span_intersection_dim needs both Veronese images linearly independent");
  }
  const PointSet z = set_union(a, b);
  return static_cast<long>(z.size()) - static_cast<long>(hilbert_function(z, d)) - 1;
}

}  // namespace waring
