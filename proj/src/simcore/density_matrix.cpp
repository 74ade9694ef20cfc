#include "qimp/simcore/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>

#include "qimp/simcore/gates.hpp"

namespace qimp {

namespace {

constexpr double kPsdSlack = 1e-10;

int qubits_of_dim(Eigen::Index d) {
    int n = 0;
    while ((Eigen::Index{1} << n) < d) ++n;
    if ((Eigen::Index{1} << n) != d)
        throw StructuralError("density matrix dimension is not a power of two");
    return n;
}

// Square roots of eigenvalues at machine-noise level would inject sqrt(eps)
// errors; anything below this relative cutoff counts as zero.
double noise_cutoff(const Eigen::VectorXd& lam) {
    return 1e-12 * std::max(lam.cwiseAbs().maxCoeff(), 1e-300);
}

// Hermitian square root with tiny negative eigenvalues clamped to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    Eigen::VectorXd lam = es.eigenvalues();
    const double cutoff = noise_cutoff(lam);
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam[i] < -kPsdSlack)
            throw StructuralError("matrix is not positive semidefinite");
        lam[i] = lam[i] <= cutoff ? 0.0 : std::sqrt(lam[i]);
    }
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd mat) : mat_(std::move(mat)) {
    if (mat_.rows() != mat_.cols()) throw StructuralError("density matrix must be square");
    n_qubits_ = qubits_of_dim(mat_.rows());
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
    const auto amps = psi.amps();
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) v[static_cast<Eigen::Index>(i)] = amps[i];
    return DensityMatrix(v * v.adjoint());
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

bool DensityMatrix::is_valid(double tol) const {
    if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(mat_.trace() - cdouble{1.0, 0.0}) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

namespace {

template <typename Lookup>
DensityMatrix partial_trace_impl(int n, std::span<const int> keep, Lookup&& entry) {
    if (keep.empty()) throw StructuralError("keep set must be nonempty");
    if (keep.size() > 10) throw SizeError("cannot keep more than 10 qubits");
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] < 0 || kept[i] >= n) throw StructuralError("kept qubit out of range");
        if (i > 0 && kept[i] == kept[i - 1]) throw StructuralError("duplicate kept qubit");
    }

    const int k = static_cast<int>(kept.size());
    std::vector<int> env;
    for (int q = 0; q < n; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q)) env.push_back(q);

    auto compose = [&](std::size_t sub, std::size_t e) {
        std::size_t idx = 0;
        for (int j = 0; j < k; ++j)
            if ((sub >> j) & 1) idx |= std::size_t{1} << kept[j];
        for (std::size_t j = 0; j < env.size(); ++j)
            if ((e >> j) & 1) idx |= std::size_t{1} << env[j];
        return idx;
    };

    const std::size_t sub_dim = std::size_t{1} << k;
    const std::size_t env_dim = std::size_t{1} << env.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(sub_dim, sub_dim);
    for (std::size_t a = 0; a < sub_dim; ++a)
        for (std::size_t b = 0; b < sub_dim; ++b) {
            cdouble acc{0.0, 0.0};
            for (std::size_t e = 0; e < env_dim; ++e) acc += entry(compose(a, e), compose(b, e));
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
        }
    return DensityMatrix(std::move(out));
}

}  // namespace

DensityMatrix partial_trace(const StateVector& psi, std::span<const int> keep) {
    const auto amps = psi.amps();
    return partial_trace_impl(psi.n_qubits(), keep, [&](std::size_t r, std::size_t c) {
        return amps[r] * std::conj(amps[c]);
    });
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    return partial_trace_impl(rho.n_qubits(), keep, [&](std::size_t r, std::size_t c) {
        return rho.mat()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    });
}

double fidelity(const DensityMatrix& rho_in, const DensityMatrix& rho_out) {
    if (rho_in.dim() != rho_out.dim())
        throw StructuralError("fidelity requires matching dimensions");
    const Eigen::MatrixXcd root = psd_sqrt(rho_out.mat());
    Eigen::MatrixXcd inner = root * rho_in.mat() * root;
    inner = (inner + inner.adjoint()) / 2.0;  // remove numeric skew
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(inner, Eigen::EigenvaluesOnly);
    const double cutoff = noise_cutoff(es.eigenvalues());
    double f = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()[i] > cutoff) f += std::sqrt(es.eigenvalues()[i]);
    return std::min(f, 1.0);
}

double concurrence(const DensityMatrix& rho_2q) {
    if (rho_2q.dim() != 4) throw StructuralError("concurrence requires a two-qubit state");
    if (!rho_2q.is_valid(1e-8)) throw StructuralError("invalid density matrix");

    Eigen::MatrixXcd yy = Eigen::MatrixXcd::Zero(4, 4);
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;

    const Eigen::MatrixXcd rho = rho_2q.mat();
    const Eigen::MatrixXcd rho_tilde = yy * rho.conjugate() * yy;

    // lambda_i are the square roots of the eigenvalues of rho * rho_tilde,
    // computed through the Hermitian form sqrt(rho) rho_tilde sqrt(rho).
    const Eigen::MatrixXcd root = psd_sqrt(rho);
    Eigen::MatrixXcd herm = root * rho_tilde * root;
    herm = (herm + herm.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(es.eigenvalues()[i], 0.0));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

BlochAngles bloch_angles(const DensityMatrix& rho_1q) {
    if (rho_1q.dim() != 2) throw StructuralError("bloch_angles requires a one-qubit state");
    const auto& m = rho_1q.mat();
    const double x = 2.0 * m(0, 1).real();
    const double y = -2.0 * m(0, 1).imag();
    const double z = (m(0, 0) - m(1, 1)).real();

    double theta = std::atan2(std::hypot(x, y), z);
    double phi = std::atan2(y, x);
    if (std::hypot(x, y) < 1e-12) phi = 0.0;
    if (phi < 0.0) phi += 2.0 * M_PI;
    return {theta, phi, rho_1q.purity()};
}

}  // namespace qimp
