#include "waring/terracini.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "waring/sampling.hpp"

namespace waring {

std::vector<Form> tangent_space_basis(const ProjectivePoint& p, unsigned d) {
  if (d < 2) throw std::invalid_argument("tangent spaces to ν_d need d >= 2");
  const Form power = Form::power_of_linear(p.coords(), d - 1);
  std::vector<Form> out;
  out.reserve(p.ambient_dim() + 1);
  for (std::size_t j = 0; j <= p.ambient_dim(); ++j) out.push_back(power * Form::variable(p.ambient_dim(), j));
  return out;
}

Matrix terracini_matrix(const PointSet& a, unsigned d) {
  const std::size_t n = a.ambient_dim();
  Matrix m(a.size() * (n + 1), basis_size(n, d));
  std::size_t row = 0;
  for (const auto& p : a) {
    for (const auto& f : tangent_space_basis(p, d)) {
      const auto coeffs = f.coefficients();
      for (std::size_t j = 0; j < coeffs.size(); ++j) m(row, j) = coeffs[j];
      ++row;
    }
  }
  return m;
}

TerraciniReport terracini_dimension(const PointSet& a, unsigned d) {
  const std::size_t n = a.ambient_dim();
  const long dim = static_cast<long>(rank(terracini_matrix(a, d))) - 1;
  const long max_possible = static_cast<long>((n + 1) * a.size()) - 1;
  const long ambient = static_cast<long>(veronese_target_dim(n, d));
  return TerraciniReport{a.size(), static_cast<std::size_t>(ambient), dim, max_possible,
                         dim == std::min(max_possible, ambient), dim == max_possible};
}

long generic_terracini_dimension(std::size_t n, unsigned d, std::size_t r, std::size_t trials,
                                 std::uint64_t seed, unsigned jobs) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  // Draw every sample up front so the point sets do not depend on scheduling.
  PointSampler sampler(seed);
  std::vector<PointSet> samples;
  samples.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) samples.push_back(sampler.point_set(n, r));

  std::vector<long> dims(trials, -1);
  if (jobs <= 1) {
    for (std::size_t t = 0; t < trials; ++t) dims[t] = terracini_dimension(samples[t], d).dim;
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += jobs) dims[t] = terracini_dimension(samples[t], d).dim;
      });
    }
  }
  return *std::max_element(dims.begin(), dims.end());
}

}  // namespace waring
