#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qimp/simcore/gates.hpp"

namespace qimp::kernels {

/// Gate-application kernels over a dense amplitude array.
///
/// Each kernel exists in two forms: a serial reference implementation,
/// kept as the ground truth for testing, and an OpenMP variant used for
/// large registers. Control semantics: an amplitude participates iff
/// (index & ctrl_mask) == ctrl_mask and (index & anti_mask) == 0;
/// everything else is left untouched.

enum class Policy {
    Auto,      // parallel above a size threshold
    Serial,    // always the reference kernel
    Parallel,  // always the OpenMP kernel
};

/// Registers with at least this many amplitudes go parallel under Auto.
inline constexpr std::size_t kParallelCutoff = std::size_t{1} << 14;

/// Widest simultaneous-target gate the kernels accept.
inline constexpr int kMaxTargets = 6;
inline constexpr std::size_t kMaxBlock = std::size_t{1} << kMaxTargets;

void apply1_serial(std::vector<cdouble>& amps, const GateMatrix& g, int target,
                   std::uint64_t ctrl_mask, std::uint64_t anti_mask);
void apply1_omp(std::vector<cdouble>& amps, const GateMatrix& g, int target,
                std::uint64_t ctrl_mask, std::uint64_t anti_mask);

void applyn_serial(std::vector<cdouble>& amps, const GateMatrix& g,
                   std::span<const int> targets, std::uint64_t ctrl_mask,
                   std::uint64_t anti_mask);
void applyn_omp(std::vector<cdouble>& amps, const GateMatrix& g,
                std::span<const int> targets, std::uint64_t ctrl_mask,
                std::uint64_t anti_mask);

double norm_sq_serial(std::span<const cdouble> amps);
double norm_sq_omp(std::span<const cdouble> amps);

/// Sum of |amp|^2 over indices whose bit `qubit` is one.
double prob_one_serial(std::span<const cdouble> amps, int qubit);
double prob_one_omp(std::span<const cdouble> amps, int qubit);

/// Zero the branch where bit `qubit` == (1 - kept_bit) and rescale the
/// survivor by `scale`.
void collapse_serial(std::vector<cdouble>& amps, int qubit, int kept_bit, double scale);
void collapse_omp(std::vector<cdouble>& amps, int qubit, int kept_bit, double scale);

/// Dispatchers used by StateVector; pick serial or OpenMP per `policy`.
void apply(std::vector<cdouble>& amps, const GateMatrix& g, std::span<const int> targets,
           std::uint64_t ctrl_mask, std::uint64_t anti_mask, Policy policy);
double norm_sq(std::span<const cdouble> amps, Policy policy);
double prob_one(std::span<const cdouble> amps, int qubit, Policy policy);
void collapse(std::vector<cdouble>& amps, int qubit, int kept_bit, double scale, Policy policy);

}  // namespace qimp::kernels
