#pragma once

#include <cstdint>
#include <vector>

#include "qimp/imagepipe/image.hpp"
#include "qimp/simcore/measurement.hpp"
#include "qimp/simcore/state_vector.hpp"

namespace qimp {

/// Angle encoding of a 2^n x 2^n grayscale image: one angle per pixel in
/// [0, pi/2], pixel order row-major.
struct FrqiAngles {
    int n = 0;                  // side exponent; image is 2^n x 2^n
    std::vector<double> theta;  // length 4^n

    std::size_t pixel_count() const { return theta.size(); }
};

/// theta_i = (pi/2) * g_i / 255; bijective with exact endpoints.
FrqiAngles angles_from_gray(const GrayImage& img);

/// Analytic amplitude-level construction over 2n+1 qubits: qubit 2n is the
/// color qubit, qubits 0..2n-1 hold the position |i>. Amplitude at
/// (color b, position i) is cos(theta_i)/2^n for b = 0 and sin(theta_i)/2^n
/// for b = 1.
StateVector frqi_encode(const FrqiAngles& angles);

/// Single color qubit (cos theta, sin theta).
StateVector color_qubit(double theta);

/// One z-axis measurement per pixel on its color qubit: output pixel is 255
/// on outcome 1, else 0. P(255) = sin^2(theta_i) in the sampling model.
GrayImage frqi_measure_recover(const GrayImage& img, std::uint64_t seed);

/// One full-register shot of the complete state: returns (color bit,
/// position index) drawn with joint probability cos^2/sin^2(theta_i)/4^n.
struct FrqiSample {
    int color_bit;
    std::size_t position;
};
FrqiSample frqi_sample_full(const FrqiAngles& angles, Rng& rng);

}  // namespace qimp
