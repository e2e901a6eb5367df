#pragma once

// Seeded samplers: Ginibre density matrices, Haar single-qubit unitaries,
// and a counter-based seeding helper so that sample i of a run always
// draws from the same stream regardless of how work is sharded.

#include <cstdint>
#include <random>

#include "lazyq/matrix.hpp"

namespace lazyq {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the independent stream belonging to sample `index` of a run
/// seeded with `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// n x m matrix of i.i.d. standard complex Gaussians.
ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols);

/// G G^dagger / tr(G G^dagger) for a 4 x rank Ginibre G (Hilbert-Schmidt
/// measure when rank = 4).
ComplexMatrix random_density_matrix(Rng& rng, std::size_t rank = 4);

/// Haar-random element of SU(2).
ComplexMatrix random_su2(Rng& rng);

/// Random pure two-qubit state vector.
std::vector<Complex> random_pure_vector(Rng& rng, std::size_t dim);

}  // namespace lazyq
