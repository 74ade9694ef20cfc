#include "qimp/simcore/measurement.hpp"

#include <cmath>

namespace qimp {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double marginal_prob_one(const StateVector& psi, int qubit) {
    if (qubit < 0 || qubit >= psi.n_qubits())
        throw StructuralError("qubit " + std::to_string(qubit) + " out of range");
    return kernels::prob_one(psi.amps(), qubit, psi.policy());
}

namespace {

StateVector collapse_to(const StateVector& psi, int qubit, int bit, double prob) {
    std::vector<cdouble> amps(psi.amps().begin(), psi.amps().end());
    kernels::collapse(amps, qubit, bit, 1.0 / std::sqrt(prob), psi.policy());
    return StateVector::from_amplitudes(psi.n_qubits(), std::move(amps));
}

}  // namespace

std::pair<int, StateVector> measure_qubit(const StateVector& psi, int qubit, Rng& rng) {
    const double p1 = marginal_prob_one(psi, qubit);
    // u in [0,1): outcome 1 is unreachable when p1 == 0 and certain when
    // p1 == 1, so the selected branch always has nonzero probability.
    const int outcome = rng.uniform() < p1 ? 1 : 0;
    const double prob = outcome == 1 ? p1 : 1.0 - p1;
    if (prob <= 0.0) throw InternalError("measurement selected a zero-probability branch");
    return {outcome, collapse_to(psi, qubit, outcome, prob)};
}

StateVector project_qubit(const StateVector& psi, int qubit, int bit) {
    const double p1 = marginal_prob_one(psi, qubit);
    const double prob = bit == 1 ? p1 : 1.0 - p1;
    if (prob <= 0.0) throw InternalError("projection onto a zero-probability branch");
    return collapse_to(psi, qubit, bit, prob);
}

std::size_t sample_basis_index(const StateVector& psi, Rng& rng) {
    const double u = rng.uniform();
    double acc = 0.0;
    const auto amps = psi.amps();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        if (u < acc) return i;
    }
    // Round-off can leave acc marginally below 1; fall back to the last
    // nonzero amplitude.
    for (std::size_t i = amps.size(); i-- > 0;)
        if (std::norm(amps[i]) > 0.0) return i;
    throw InternalError("cannot sample from a zero state");
}

}  // namespace qimp
