#include "qimp/frqi/frqi.hpp"

#include <cmath>

#include "qimp/simcore/errors.hpp"

namespace qimp {

namespace {

int side_exponent(const GrayImage& img) {
    if (img.rows != img.cols) throw StructuralError("image must be square");
    int n = 0;
    while ((1 << n) < img.rows) ++n;
    if ((1 << n) != img.rows) throw StructuralError("image side must be a power of two");
    return n;
}

}  // namespace

FrqiAngles angles_from_gray(const GrayImage& img) {
    FrqiAngles a;
    a.n = side_exponent(img);
    a.theta.reserve(img.pixels.size());
    for (std::uint8_t g : img.pixels) a.theta.push_back(M_PI / 2.0 * g / 255.0);
    return a;
}

StateVector frqi_encode(const FrqiAngles& angles) {
    const int position_qubits = 2 * angles.n;
    const int n_qubits = position_qubits + 1;
    if (n_qubits > kMaxQubits) throw SizeError("FRQI register exceeds the qubit cap");
    if (angles.theta.size() != (std::size_t{1} << position_qubits))
        throw StructuralError("angle count does not match the register");

    const double scale = 1.0 / static_cast<double>(std::size_t{1} << angles.n);
    std::vector<cdouble> amps(std::size_t{1} << n_qubits);
    const std::size_t color_bit = std::size_t{1} << position_qubits;
    for (std::size_t i = 0; i < angles.theta.size(); ++i) {
        const double th = angles.theta[i];
        if (th < 0.0 || th > M_PI / 2.0 + 1e-12)
            throw ParameterError("angle outside [0, pi/2]");
        amps[i] = scale * std::cos(th);
        amps[color_bit | i] = scale * std::sin(th);
    }
    return StateVector::from_amplitudes(n_qubits, std::move(amps));
}

StateVector color_qubit(double theta) {
    if (theta < 0.0 || theta > M_PI / 2.0 + 1e-12)
        throw ParameterError("angle outside [0, pi/2]");
    return StateVector::from_amplitudes(1, {std::cos(theta), std::sin(theta)});
}

GrayImage frqi_measure_recover(const GrayImage& img, std::uint64_t seed) {
    const FrqiAngles angles = angles_from_gray(img);
    GrayImage out(img.rows, img.cols);
    const std::int64_t n = static_cast<std::int64_t>(angles.theta.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        StateVector q = color_qubit(angles.theta[i]);
        const int bit = measure_qubit(q, 0, rng).first;
        out.pixels[i] = bit ? 255 : 0;
    }
    return out;
}

FrqiSample frqi_sample_full(const FrqiAngles& angles, Rng& rng) {
    const StateVector psi = frqi_encode(angles);
    const std::size_t idx = sample_basis_index(psi, rng);
    const std::size_t color_bit = std::size_t{1} << (2 * angles.n);
    return {idx & color_bit ? 1 : 0, idx & (color_bit - 1)};
}

}  // namespace qimp
