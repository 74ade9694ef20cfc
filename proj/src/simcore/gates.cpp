#include "qimp/simcore/gates.hpp"

#include <algorithm>
#include <cmath>

#include "qimp/simcore/errors.hpp"

namespace qimp {

double GateMatrix::unitarity_defect() const {
    const std::size_t d = dim();
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            cdouble acc{0.0, 0.0};
            for (std::size_t k = 0; k < d; ++k) acc += std::conj(at(k, r)) * at(k, c);
            const cdouble want = (r == c) ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
            worst = std::max(worst, std::abs(acc - want));
        }
    }
    return worst;
}

namespace gates {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

GateMatrix identity() { return {1, {1, 0, 0, 1}, "I"}; }

GateMatrix pauli_x() { return {1, {0, 1, 1, 0}, "X"}; }

GateMatrix pauli_y() {
    return {1, {cdouble{0, 0}, cdouble{0, -1}, cdouble{0, 1}, cdouble{0, 0}}, "Y"};
}

GateMatrix pauli_z() { return {1, {1, 0, 0, -1}, "Z"}; }

GateMatrix hadamard() {
    return {1, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}, "H"};
}

GateMatrix t_gate() {
    return {1, {1, 0, 0, std::polar(1.0, M_PI / 4.0)}, "T"};
}

GateMatrix swap() {
    return {2,
            {1, 0, 0, 0,  //
             0, 0, 1, 0,  //
             0, 1, 0, 0,  //
             0, 0, 0, 1},
            "SWAP"};
}

GateMatrix ry(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {1, {c, -s, s, c}, "RY"};
}

bool lookup(const std::string& name, double param, GateMatrix& out) {
    if (name == "I") out = identity();
    else if (name == "X") out = pauli_x();
    else if (name == "Y") out = pauli_y();
    else if (name == "Z") out = pauli_z();
    else if (name == "H") out = hadamard();
    else if (name == "T") out = t_gate();
    else if (name == "SWAP") out = swap();
    else if (name == "RY") out = ry(param);
    else return false;
    return true;
}

bool is_builtin(const std::string& name) {
    GateMatrix scratch;
    return lookup(name, 0.0, scratch);
}

}  // namespace gates

void GateRegistry::register_gate(const std::string& name, GateMatrix matrix) {
    if (!matrix.is_unitary())
        throw GateError("gate '" + name + "' is not unitary and was rejected");
    if (contains(name) || gates::is_builtin(name))
        throw GateError("gate '" + name + "' already registered");
    matrix.name = name;
    gates_.push_back(std::move(matrix));
}

bool GateRegistry::contains(const std::string& name) const {
    return std::any_of(gates_.begin(), gates_.end(),
                       [&](const GateMatrix& g) { return g.name == name; });
}

const GateMatrix& GateRegistry::get(const std::string& name) const {
    for (const GateMatrix& g : gates_)
        if (g.name == name) return g;
    throw GateError("unknown gate '" + name + "'");
}

}  // namespace qimp
