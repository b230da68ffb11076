#include "waring/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace waring {

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("a projective point needs at least one coordinate");
  const auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& x) { return x != 0; });
  if (lead == coords_.end()) throw std::invalid_argument("all coordinates of a projective point are zero");
  const Rational scale = *lead;
  for (auto& x : coords_) {
    x.canonicalize();
    x /= scale;
  }
}

DuplicatePointError::DuplicatePointError(std::size_t first, std::size_t second)
    : std::invalid_argument("point " + std::to_string(second) + " duplicates point " + std::to_string(first)),
      first_(first),
      second_(second) {}

PointSet::PointSet(std::vector<ProjectivePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("a point set must be nonempty");
  const std::size_t n = points_.front().ambient_dim();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].ambient_dim() != n) {
      throw std::invalid_argument("point " + std::to_string(i) + " lives in P^" +
                                  std::to_string(points_[i].ambient_dim()) + ", expected P^" + std::to_string(n));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[j] == points_[i]) throw DuplicatePointError(j, i);
    }
  }
}

bool PointSet::contains(const ProjectivePoint& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<ProjectivePoint> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(points_.at(i));
  return PointSet(std::move(out));
}

Matrix PointSet::coordinate_matrix() const {
  Matrix m(size(), ambient_dim() + 1);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j <= ambient_dim(); ++j) m(i, j) = points_[i][j];
  return m;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("point sets live in different projective spaces");
  std::vector<ProjectivePoint> all = a.points();
  for (const auto& p : b) {
    if (!a.contains(p)) all.push_back(p);
  }
  return PointSet(std::move(all));
}

bool are_disjoint(const PointSet& a, const PointSet& b) {
  return std::none_of(b.begin(), b.end(), [&](const ProjectivePoint& p) { return a.contains(p); });
}

unsigned Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

std::vector<Monomial> monomial_basis(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n + 1, 0);
  // Depth-first with the largest exponent of the earliest variable first.
  auto fill = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == n) {
      e[var] = remaining;
      out.push_back(Monomial{e});
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
  };
  fill(fill, 0, d);
  return out;
}

std::size_t basis_size(std::size_t n, unsigned d) { return binomial(n + d, d).get_ui(); }

std::size_t veronese_target_dim(std::size_t n, unsigned d) { return basis_size(n, d) - 1; }

Integer multinomial(unsigned d, std::span<const unsigned> exponents) {
  Integer out = 1;
  unsigned left = d;
  for (unsigned e : exponents) {
    out *= binomial(left, e);
    left -= e;
  }
  return out;
}

Rational monomial_value(const Monomial& m, std::span<const Rational> coords) {
  Rational v = 1;
  Rational p;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    mpz_pow_ui(p.get_num_mpz_t(), coords[i].get_num_mpz_t(), m.exponents[i]);
    mpz_pow_ui(p.get_den_mpz_t(), coords[i].get_den_mpz_t(), m.exponents[i]);
    v *= p;
  }
  return v;
}

Form::Form(std::size_t ambient_dim, unsigned degree) : ambient_dim_(ambient_dim), degree_(degree) {}

Form Form::linear(std::span<const Rational> coeffs) { return power_of_linear(coeffs, 1); }

Form Form::power_of_linear(std::span<const Rational> coeffs, unsigned d) {
  if (coeffs.empty()) throw std::invalid_argument("linear form needs at least one variable");
  Form f(coeffs.size() - 1, d);
  for (auto& m : monomial_basis(coeffs.size() - 1, d)) {
    Rational c = monomial_value(m, coeffs) * Rational(multinomial(d, m.exponents));
    f.add_term(m, c);
  }
  return f;
}

Form Form::variable(std::size_t ambient_dim, std::size_t index) {
  if (index > ambient_dim) throw std::out_of_range("variable index out of range");
  Form f(ambient_dim, 1);
  Monomial m{std::vector<unsigned>(ambient_dim + 1, 0)};
  m.exponents[index] = 1;
  f.add_term(m, 1);
  return f;
}

void Form::add_term(const Monomial& m, const Rational& c) {
  if (m.exponents.size() != ambient_dim_ + 1 || m.degree() != degree_) {
    throw std::invalid_argument("monomial does not match the form's degree or variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Form::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Form::coefficients() const {
  const auto basis = monomial_basis(ambient_dim_, degree_);
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(coefficient(m));
  return out;
}

Form Form::operator*(const Form& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("forms in different numbers of variables");
  Form out(ambient_dim_, degree_ + other.degree_);
  Monomial m{std::vector<unsigned>(ambient_dim_ + 1)};
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      for (std::size_t i = 0; i <= ambient_dim_; ++i) m.exponents[i] = ma.exponents[i] + mb.exponents[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Form Form::operator+(const Form& other) const {
  if (other.ambient_dim_ != ambient_dim_ || other.degree_ != degree_) {
    throw DimensionMismatch("cannot add forms of different shape");
  }
  Form out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Form Form::operator-(const Form& other) const { return *this + other * Rational(-1); }

Form Form::operator*(const Rational& scalar) const {
  Form out(ambient_dim_, degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * scalar);
  return out;
}

Rational evaluate_form(const Form& f, const ProjectivePoint& p) {
  if (f.ambient_dim() != p.ambient_dim()) throw DimensionMismatch("form and point live in different spaces");
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) sum += c * monomial_value(m, p.coords());
  return sum;
}

ProjectivePoint veronese_embed(const ProjectivePoint& p, unsigned d) {
  if (d < 1) throw std::invalid_argument("Veronese degree must be at least 1");
  return ProjectivePoint(Form::power_of_linear(p.coords(), d).coefficients());
}

PointSet veronese_embed_set(const PointSet& a, unsigned d) {
  std::vector<ProjectivePoint> out;
  out.reserve(a.size());
  for (const auto& p : a) out.push_back(veronese_embed(p, d));
  return PointSet(std::move(out));
}

long span_dim(const PointSet& a) { return static_cast<long>(rank(a.coordinate_matrix())) - 1; }

bool is_linearly_independent(const PointSet& a) { return span_dim(a) == static_cast<long>(a.size()) - 1; }

std::size_t max_collinear_subset_size(const PointSet& a) {
  if (a.size() <= 2) return a.size();
  const Matrix coords = a.coordinate_matrix();
  std::size_t best = 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      std::size_t on_line = 2;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (k == i || k == j) continue;
        const std::size_t idx[] = {i, j, k};
        if (rank(coords.select_rows(idx)) == 2) ++on_line;
      }
      best = std::max(best, on_line);
    }
  }
  return best;
}

}  // namespace waring
