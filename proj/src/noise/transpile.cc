#include "graphlab/noise/transpile.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace graphlab::noise {

namespace {

using sim::Gate;
using sim::GateKind;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

sim::Matrix2 matmul(const sim::Matrix2 &a, const sim::Matrix2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

/// U(theta, phi, lambda) = RZ(phi) RY(theta) RZ(lambda) up to phase, emitted
/// as rz(lambda) sx rz(theta + pi) sx rz(phi + pi) in circuit order.
std::vector<Gate> zsx_sequence(int q, double theta, double phi, double lambda) {
    return {Gate::rz(q, lambda), Gate::sx(q), Gate::rz(q, theta + kPi), Gate::sx(q), Gate::rz(q, phi + kPi)};
}

void append_checked(sim::Circuit &out, const Gate &original, std::vector<Gate> replacement) {
    if (!equal_up_to_phase(sequence_matrix(replacement), sim::gate_matrix(original))) {
        throw std::logic_error("basis decomposition of " + original.str() + " does not reproduce its matrix");
    }
    for (const auto &g : replacement) {
        out.append(g);
    }
}

}  // namespace

bool is_basis_gate(GateKind kind) {
    return kind == GateKind::kID || kind == GateKind::kX || kind == GateKind::kSX || kind == GateKind::kRZ ||
           kind == GateKind::kCNOT;
}

BasisCircuit::BasisCircuit(sim::Circuit c) : circuit_(std::move(c)) {
    for (const auto &g : circuit_.gates()) {
        if (!is_basis_gate(g.kind)) {
            throw DomainError("gate " + g.str() + " is not in the basis {id, x, sx, rz, cx}");
        }
    }
}

BasisCircuit BasisCircuit::then(const BasisCircuit &suffix) const {
    sim::Circuit c = circuit_;
    c.append(suffix.circuit_);
    return BasisCircuit(std::move(c));
}

sim::Matrix2 sequence_matrix(const std::vector<Gate> &gates) {
    sim::Matrix2 acc = {1, 0, 0, 1};
    for (const auto &g : gates) {
        acc = matmul(sim::gate_matrix(g), acc);
    }
    return acc;
}

bool equal_up_to_phase(const sim::Matrix2 &a, const sim::Matrix2 &b, double tol) {
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < 4; i++) {
        if (std::abs(b[i]) > std::abs(b[pivot])) {
            pivot = i;
        }
    }
    if (std::abs(b[pivot]) < tol) {
        return false;
    }
    cplx phase = a[pivot] / b[pivot];
    if (std::abs(std::abs(phase) - 1) > tol) {
        return false;
    }
    for (std::size_t i = 0; i < 4; i++) {
        if (std::abs(a[i] - phase * b[i]) > tol) {
            return false;
        }
    }
    return true;
}

BasisCircuit transpile(const sim::Circuit &c) {
    sim::Circuit out(c.num_qubits());
    for (const auto &g : c.gates()) {
        const int q = g.qubits[0];
        switch (g.kind) {
            case GateKind::kRZZ:
                out.append(Gate::cnot(g.qubits[0], g.qubits[1]));
                out.append(Gate::rz(g.qubits[1], g.angle));
                out.append(Gate::cnot(g.qubits[0], g.qubits[1]));
                break;
            case GateKind::kRX:
                append_checked(out, g, zsx_sequence(q, g.angle, -kPi / 2, kPi / 2));
                break;
            case GateKind::kRY:
                append_checked(out, g, zsx_sequence(q, g.angle, 0, 0));
                break;
            case GateKind::kRZ:
            case GateKind::kX:
            case GateKind::kSX:
            case GateKind::kCNOT:
            case GateKind::kID:
                out.append(g);
                break;
        }
    }
    return BasisCircuit(std::move(out));
}

}  // namespace graphlab::noise
