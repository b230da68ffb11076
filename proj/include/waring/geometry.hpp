#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "waring/matrix.hpp"
#include "waring/rational.hpp"

namespace waring {

/// A point of P^n given by n+1 homogeneous coordinates. Stored scaled so that
/// the first nonzero coordinate is 1; two points are equal iff their stored
/// coordinates are equal.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Rational> coords);

  std::size_t ambient_dim() const { return coords_.size() - 1; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<Rational> coords_;
};

class DuplicatePointError : public std::invalid_argument {
 public:
  DuplicatePointError(std::size_t first, std::size_t second);
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Ordered, nonempty collection of distinct points of one P^n.
class PointSet {
 public:
  /// Throws std::invalid_argument if empty or of mixed dimension, and
  /// DuplicatePointError if two entries are the same projective point.
  explicit PointSet(std::vector<ProjectivePoint> points);

  std::size_t ambient_dim() const { return points_.front().ambient_dim(); }
  std::size_t size() const { return points_.size(); }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const ProjectivePoint& p) const;
  PointSet subset(std::span<const std::size_t> indices) const;

  /// ℓ × (n+1) matrix of canonical coordinates, one row per point.
  Matrix coordinate_matrix() const;

 private:
  std::vector<ProjectivePoint> points_;
};

/// A ∪ B with B's points already in A dropped; A's order first.
PointSet set_union(const PointSet& a, const PointSet& b);
bool are_disjoint(const PointSet& a, const PointSet& b);

/// Exponent vector of a monomial in x_0..x_n.
struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  /// Plain lexicographic comparison of exponent vectors.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// All monomials of degree d in n+1 variables, in lex order with
/// x_0 > x_1 > ... > x_n, largest first (x_0^d is slot 0, x_n^d is last).
std::vector<Monomial> monomial_basis(std::size_t n, unsigned d);

/// C(n+d, d), the dimension of Sym^d of an (n+1)-dimensional space.
std::size_t basis_size(std::size_t n, unsigned d);

/// N(d,n) = C(n+d,d) - 1, the projective dimension of the Veronese target.
std::size_t veronese_target_dim(std::size_t n, unsigned d);

Integer multinomial(unsigned d, std::span<const unsigned> exponents);

Rational monomial_value(const Monomial& m, std::span<const Rational> coords);

/// Homogeneous polynomial of fixed degree in n+1 variables. Zero
/// coefficients are never stored; terms iterate in monomial_basis order.
class Form {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  Form(std::size_t ambient_dim, unsigned degree);

  static Form linear(std::span<const Rational> coeffs);
  /// (sum_i coeffs_i x_i)^d expanded with multinomial coefficients.
  static Form power_of_linear(std::span<const Rational> coeffs, unsigned d);
  static Form variable(std::size_t ambient_dim, std::size_t index);

  std::size_t ambient_dim() const { return ambient_dim_; }
  unsigned degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  /// Dense coefficient vector in monomial_basis order.
  std::vector<Rational> coefficients() const;

  Form operator*(const Form& other) const;
  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  Form operator*(const Rational& scalar) const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  std::size_t ambient_dim_;
  unsigned degree_;
  TermMap terms_;
};

/// Evaluates f at the canonical coordinates of p.
Rational evaluate_form(const Form& f, const ProjectivePoint& p);

/// ν_d(p): coefficients of (Σ a_i x_i)^d in monomial_basis order.
ProjectivePoint veronese_embed(const ProjectivePoint& p, unsigned d);
PointSet veronese_embed_set(const PointSet& a, unsigned d);

/// Projective dimension of the linear span <A>.
long span_dim(const PointSet& a);
bool is_linearly_independent(const PointSet& a);

/// Largest number of points of A on a common line.
std::size_t max_collinear_subset_size(const PointSet& a);

}  // namespace waring
