#include "graphlab/simcore/statevector.h"

#include <bit>
#include <cmath>
#include <cstdint>

namespace graphlab::sim {

namespace {

using cplx = std::complex<double>;

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw DomainError("qubit " + std::to_string(q) + " outside [0," + std::to_string(n) + ")");
    }
}

}  // namespace

Matrix2 gate_matrix(const Gate &g) {
    const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
    const cplx i(0, 1);
    switch (g.kind) {
        case GateKind::kRX:
            return {c, -i * s, -i * s, c};
        case GateKind::kRY:
            return {c, -s, s, c};
        case GateKind::kRZ:
            return {cplx(c, -s), 0, 0, cplx(c, s)};
        case GateKind::kX:
            return {0, 1, 1, 0};
        case GateKind::kSX:
            return {cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5)};
        case GateKind::kID:
            return {1, 0, 0, 1};
        case GateKind::kRZZ:
        case GateKind::kCNOT:
            break;
    }
    throw DomainError(std::string("no single-qubit matrix for ") + gate_name(g.kind));
}

Statevector::Statevector(int num_qubits, int max_qubits) : n_(num_qubits) {
    if (n_ < 1) {
        throw DomainError("statevector needs at least one qubit");
    }
    if (n_ > max_qubits) {
        throw ResourceError(std::to_string(n_) + " qubits exceeds the configured maximum of " +
                            std::to_string(max_qubits));
    }
    amps_.assign(std::size_t{1} << n_, cplx(0, 0));
    amps_[0] = 1;
}

void Statevector::apply(const Gate &g) {
    switch (g.kind) {
        case GateKind::kRZZ:
            apply_rzz(g.qubits[0], g.qubits[1], g.angle);
            return;
        case GateKind::kCNOT:
            apply_cnot(g.qubits[0], g.qubits[1]);
            return;
        case GateKind::kID:
            check_qubit(g.qubits[0], n_);
            return;
        default:
            apply_matrix(g.qubits[0], gate_matrix(g));
    }
}

void Statevector::apply_matrix(int q, const Matrix2 &m) {
    check_qubit(q, n_);
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k++) {
            cplx a0 = amps_[k];
            cplx a1 = amps_[k + stride];
            amps_[k] = m[0] * a0 + m[1] * a1;
            amps_[k + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void Statevector::apply_cnot(int control, int target) {
    check_qubit(control, n_);
    check_qubit(target, n_);
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t k = 0; k < amps_.size(); k++) {
        if ((k & cmask) && !(k & tmask)) {
            std::swap(amps_[k], amps_[k | tmask]);
        }
    }
}

void Statevector::apply_rzz(int q0, int q1, double angle) {
    check_qubit(q0, n_);
    check_qubit(q1, n_);
    const cplx same = std::polar(1.0, -angle / 2);
    const cplx differ = std::polar(1.0, angle / 2);
    for (std::size_t k = 0; k < amps_.size(); k++) {
        bool parity = ((k >> q0) ^ (k >> q1)) & 1;
        amps_[k] *= parity ? differ : same;
    }
}

void Statevector::apply_pauli(int q, PauliAxis axis) {
    check_qubit(q, n_);
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k++) {
            cplx &a0 = amps_[k];
            cplx &a1 = amps_[k + stride];
            switch (axis) {
                case PauliAxis::kX:
                    std::swap(a0, a1);
                    break;
                case PauliAxis::kY: {
                    cplx t = a0;
                    a0 = cplx(0, -1) * a1;
                    a1 = cplx(0, 1) * t;
                    break;
                }
                case PauliAxis::kZ:
                    a1 = -a1;
                    break;
            }
        }
    }
}

double Statevector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> Statevector::marginal_probabilities(std::span<const int> qubits) const {
    for (int q : qubits) {
        check_qubit(q, n_);
    }
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (std::size_t k = 0; k < amps_.size(); k++) {
        std::size_t outcome = 0;
        for (std::size_t i = 0; i < qubits.size(); i++) {
            outcome |= ((k >> qubits[i]) & 1) << i;
        }
        probs[outcome] += std::norm(amps_[k]);
    }
    return probs;
}

Statevector run(const Circuit &c, int max_qubits) {
    Statevector s(c.num_qubits(), max_qubits);
    for (const auto &g : c.gates()) {
        s.apply(g);
    }
    return s;
}

double expectation(const Statevector &s, std::span<const PauliTerm> ops) {
    if (ops.empty()) {
        throw DomainError("expectation needs at least one Pauli factor");
    }
    std::uint64_t xmask = 0, signmask = 0, seen = 0;
    int num_y = 0;
    for (const auto &op : ops) {
        check_qubit(op.qubit, s.num_qubits());
        std::uint64_t bit = std::uint64_t{1} << op.qubit;
        if (seen & bit) {
            throw DomainError("qubit " + std::to_string(op.qubit) + " appears twice in a Pauli product");
        }
        seen |= bit;
        if (op.axis != PauliAxis::kZ) {
            xmask |= bit;
        }
        if (op.axis != PauliAxis::kX) {
            signmask |= bit;
        }
        if (op.axis == PauliAxis::kY) {
            num_y++;
        }
    }
    // P|k> = i^{num_y} (-1)^{popcount(k & signmask)} |k ^ xmask>
    auto amps = s.amplitudes();
    cplx total(0, 0);
    for (std::size_t k = 0; k < amps.size(); k++) {
        cplx term = std::conj(amps[k ^ xmask]) * amps[k];
        total += (std::popcount(k & signmask) & 1) ? -term : term;
    }
    static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    total *= kIPow[num_y % 4];
    if (std::abs(total.imag()) > 1e-12) {
        throw std::logic_error("Pauli expectation has imaginary part " + std::to_string(total.imag()));
    }
    return total.real();
}

std::complex<double> inner_product(const Statevector &a, const Statevector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("inner product of statevectors with different qubit counts");
    }
    cplx total(0, 0);
    auto x = a.amplitudes(), y = b.amplitudes();
    for (std::size_t k = 0; k < x.size(); k++) {
        total += std::conj(x[k]) * y[k];
    }
    return total;
}

}  // namespace graphlab::sim
