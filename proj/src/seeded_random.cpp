#include "zeno/seeded_random.hpp"

namespace zeno {

std::mt19937_64 indexed_rng(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step keeps neighbouring indices decorrelated.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return std::mt19937_64(z);
}

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

HermitianOperator random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
  const ComplexMatrix g = random_matrix(rng, dim);
  return HermitianOperator((g + g.adjoint().eval()) / 2.0);
}

DensityState random_density(std::mt19937_64& rng, Eigen::Index dim) {
  const ComplexMatrix g = random_matrix(rng, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityState((rho + rho.adjoint().eval()) / 2.0);
}

Eigen::VectorXcd random_unit_vector(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v[i] = Complex(gauss(rng), gauss(rng));
  }
  v.normalize();
  return v;
}

}  // namespace zeno
