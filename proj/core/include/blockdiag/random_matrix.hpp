#pragma once

#include <cstdint>
#include <random>

#include "blockdiag/block_partition.hpp"
#include "blockdiag/matrix.hpp"

namespace blockdiag {

// All randomness in this library flows through std::mt19937_64 (the 64-bit
// Mersenne twister, fully specified by the C++ standard) combined with the
// explicit uniform and Box-Muller transforms below, so every draw is
// bit-for-bit reproducible from its seed on any conforming platform.

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// One standard-normal pair via the Box-Muller transform.
inline std::pair<double, double> normal_pair(std::mt19937_64& rng) {
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log1p(-u1)); // 1-u1 in (0,1], no log(0)
    const double a = 2.0 * M_PI * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

/// Gaussian-unitary-ensemble recipe: row-major i.i.d. complex Gaussians
/// (one normal_pair per entry), hermitized as (A + A^+)/2, then rescaled to
/// ||result||_F = scale. Deterministic for fixed (n, seed, scale).
ComplexMatrix generate_random_hermitian(int n, std::uint64_t seed, double scale);

/// Haar-distributed unitary on the given dimension (complex Ginibre, QR,
/// phase fix making the R diagonal positive).
ComplexMatrix random_unitary(int n, std::mt19937_64& rng);

/// Block-diagonal unitary, one independent Haar block per partition block.
ComplexMatrix random_block_unitary(const BlockPartition& P, std::mt19937_64& rng);

} // namespace blockdiag
