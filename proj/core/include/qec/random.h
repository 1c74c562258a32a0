#pragma once

#include <cstdint>
#include <random>

#include "qec/state.h"

namespace qec {

using Rng = std::mt19937_64;

// Counter-based stream derivation: every (master, index) pair gets an
// independent 64-bit seed, so per-trial randomness does not depend on the
// order trials are evaluated in.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);
Rng make_stream(std::uint64_t master, std::uint64_t index);

// Haar-random pure state (normalized complex Gaussian vector).
StateVector random_state(int n, Rng& rng);
Amplitudes random_gaussian_vector(std::size_t dim, Rng& rng);

// Haar-random 2x2 unitary.
Matrix2 random_unitary(Rng& rng);

}  // namespace qec
