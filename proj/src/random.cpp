#include "lazyq/random.hpp"

#include <cmath>

namespace lazyq {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

ComplexMatrix random_density_matrix(Rng& rng, std::size_t rank) {
  const ComplexMatrix g = ginibre(rng, 4, rank);
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  // Remove rounding asymmetry so downstream Hermiticity checks see exact
  // symmetry.
  for (std::size_t i = 0; i < 4; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

ComplexMatrix random_su2(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& c : q) {
      c = normal(rng);
      n2 += c * c;
    }
  } while (n2 < 1e-12);
  const double n = std::sqrt(n2);
  for (double& c : q) c /= n;
  return ComplexMatrix{{Complex(q[0], q[1]), Complex(q[2], q[3])},
                       {Complex(-q[2], q[3]), Complex(q[0], -q[1])}};
}

std::vector<Complex> random_pure_vector(Rng& rng, std::size_t dim) {
  const ComplexMatrix g = ginibre(rng, dim, 1);
  double n2 = 0.0;
  for (const auto& e : g.entries()) n2 += std::norm(e);
  std::vector<Complex> v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = g(i, 0) / std::sqrt(n2);
  return v;
}

}  // namespace lazyq
