#pragma once

#include <cstdint>
#include <random>

#include "zeno/operator_core.hpp"

namespace zeno {

/// Engine for grid index `index` derived from a base seed. Each grid
/// point owns an independent stream, so results do not depend on how
/// work is split across workers.
std::mt19937_64 indexed_rng(std::uint64_t seed, std::uint64_t index);

/// Ginibre matrix: independent standard complex Gaussian entries.
ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index dim);

HermitianOperator random_hermitian(std::mt19937_64& rng, Eigen::Index dim);

/// Full-rank random density matrix G G* / tr(G G*).
DensityState random_density(std::mt19937_64& rng, Eigen::Index dim);

Eigen::VectorXcd random_unit_vector(std::mt19937_64& rng, Eigen::Index dim);

}  // namespace zeno
