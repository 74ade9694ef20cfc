#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "qimp/simcore/state_vector.hpp"

namespace qimp {

/// All sampling goes through an explicitly seeded generator; there is no
/// hidden global randomness anywhere in the library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw from [0, 1).
    double uniform() { return dist_(engine_); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

/// Stream-splitting for parallel per-pixel experiments: mixes (seed, index)
/// into an independent derived seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Exact analytic P(qubit = 1); no sampling involved.
double marginal_prob_one(const StateVector& psi, int qubit);

/// Projective z-axis measurement of one qubit: draws the outcome with its
/// analytic probability, zeroes the opposite branch and renormalizes.
std::pair<int, StateVector> measure_qubit(const StateVector& psi, int qubit, Rng& rng);

/// Collapse onto a chosen branch (M_0 / M_1 followed by renormalization).
/// Projecting onto a zero-probability branch raises InternalError.
StateVector project_qubit(const StateVector& psi, int qubit, int bit);

/// Single draw of a full-register basis index with probability |amp|^2.
std::size_t sample_basis_index(const StateVector& psi, Rng& rng);

}  // namespace qimp
