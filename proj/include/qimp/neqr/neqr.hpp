#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qimp/circuit/circuit.hpp"
#include "qimp/imagepipe/image.hpp"
#include "qimp/simcore/state_vector.hpp"

namespace qimp {

/// 2x2 grayscale tile, entries f(Y,X) ordered (0,0),(0,1),(1,0),(1,1).
struct NeqrTile {
    std::array<int, 4> f{};

    int value(int y, int x) const { return f[2 * y + x]; }
};

/// Register layout of the tile circuit: q[0..7] hold the gray code with
/// q[0] = C^0 (the most significant bit), q[8] = X0, q[9] = Y0. A printed
/// basis string q9..q0 therefore shows the gray code reversed.
inline constexpr int kNeqrValueQubits = 8;
inline constexpr int kNeqrQubits = 10;

/// Tile preparation circuit: H on both position qubits, then one doubly
/// controlled X per set code bit of each pixel, anticontrolled where the
/// pixel coordinate bit is 0. Deferred execution yields
/// (1/2) sum |f(Y,X)>|YX>.
Circuit neqr_build(const NeqrTile& tile);

/// Basis index of branch (y, x) in the layout above.
std::size_t neqr_branch_index(const NeqrTile& tile, int y, int x);

/// Analytic per-qubit P(1), q0 first.
std::vector<double> neqr_marginals(const StateVector& state);

/// Pairwise Wootters concurrence of every qubit pair; diagonal entries are
/// -1 (not applicable).
std::vector<std::vector<double>> neqr_entanglement_matrix(const StateVector& state);

struct TeleportAmplitude {
    std::size_t index;
    std::string bitstring;  // q12..q0
    std::complex<double> amp;
    double probability;
};

struct TeleportReport {
    /// Post-measurement state for the no-correction outcome record
    /// (both measured qubits read 0), the canonical representative.
    std::vector<TeleportAmplitude> amplitudes;
    double destination_p1 = 0.0;  // P(q12 = 1) of the full deferred state
    double destination_p0 = 0.0;
    bool golden_pass = false;     // matches the reference values at 1e-8
    /// Same payload sent through an uncorrelated |+>|+> channel pair; its
    /// destination marginal (0.5) shows the coupling is what carries the
    /// payload statistics.
    double negative_control_p1 = 0.0;
    bool negative_control_deviates = false;

    std::string to_json() const;
};

/// The 13-qubit coupling experiment: NEQR tile, payload T·H·T·H|0> on
/// q[10], channel pair swapped in from (q0, q9), Bell measurement with
/// classically controlled X/Z corrections on q[12]; run deferred.
TeleportReport neqr_teleport_test(const NeqrTile& tile);

/// The teleport circuit itself (13 qubits, 2 classical bits).
Circuit neqr_teleport_circuit(const NeqrTile& tile);

struct NeqrSample {
    int tile_row, tile_col;  // tile origin in pixels
    int y, x;                // sampled position inside the tile
    int value;               // sampled gray value
};

struct SampleLog {
    std::vector<NeqrSample> samples;
    std::string to_json() const;
};

/// One full-register shot per 2x2 tile; the sampled pixel receives the
/// sampled value, the other three are zero-filled.
struct NeqrRecovery {
    GrayImage image;
    SampleLog log;
};
NeqrRecovery neqr_measure_recover(const GrayImage& img, std::uint64_t seed);

}  // namespace qimp
