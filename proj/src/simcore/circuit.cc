#include "graphlab/simcore/circuit.h"

#include <numbers>
#include <set>
#include <sstream>

namespace graphlab::sim {

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::kRX:
            return "rx";
        case GateKind::kRY:
            return "ry";
        case GateKind::kRZ:
            return "rz";
        case GateKind::kRZZ:
            return "rzz";
        case GateKind::kX:
            return "x";
        case GateKind::kSX:
            return "sx";
        case GateKind::kCNOT:
            return "cx";
        case GateKind::kID:
            return "id";
    }
    return "?";
}

int gate_arity(GateKind kind) {
    return (kind == GateKind::kRZZ || kind == GateKind::kCNOT) ? 2 : 1;
}

bool gate_has_angle(GateKind kind) {
    return kind == GateKind::kRX || kind == GateKind::kRY || kind == GateKind::kRZ ||
           kind == GateKind::kRZZ;
}

std::string Gate::str() const {
    std::ostringstream out;
    out << gate_name(kind);
    if (gate_has_angle(kind)) {
        out << "(" << angle << ")";
    }
    out << " q[" << qubits[0] << "]";
    if (arity() == 2) {
        out << ", q[" << qubits[1] << "]";
    }
    return out.str();
}

Circuit::Circuit(int num_qubits) : n_(num_qubits) {
    if (n_ < 1) {
        throw DomainError("circuit needs at least one qubit");
    }
}

Circuit &Circuit::append(const Gate &g) {
    for (int i = 0; i < g.arity(); i++) {
        if (g.qubits[i] < 0 || g.qubits[i] >= n_) {
            throw DomainError("gate " + g.str() + " addresses a qubit outside [0," + std::to_string(n_) + ")");
        }
    }
    if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
        throw DomainError("gate " + g.str() + " uses the same qubit twice");
    }
    gates_.push_back(g);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_ > n_) {
        throw DomainError("cannot append a wider circuit");
    }
    for (const auto &g : other.gates_) {
        append(g);
    }
    return *this;
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "circuit(" << n_ << " qubits)\n";
    for (const auto &g : gates_) {
        out << "  " << g.str() << "\n";
    }
    return out.str();
}

Circuit build_graph_circuit(const WeightedGraph &g) {
    Circuit c(g.n());
    for (int i = 0; i < g.n(); i++) {
        c.append(Gate::rx(i, g.phi(i)));
    }
    for (const auto &e : g.edges()) {
        c.append(Gate::rzz(e.j, e.k, e.theta));
    }
    return c;
}

Circuit measurement_circuit(const Circuit &c, const std::vector<PauliTerm> &targets) {
    std::set<int> seen;
    Circuit out = c;
    for (const auto &t : targets) {
        if (!seen.insert(t.qubit).second) {
            throw DomainError("qubit " + std::to_string(t.qubit) + " measured twice");
        }
        switch (t.axis) {
            case PauliAxis::kX:
                out.append(Gate::ry(t.qubit, -std::numbers::pi / 2));
                break;
            case PauliAxis::kY:
                out.append(Gate::rx(t.qubit, std::numbers::pi / 2));
                break;
            case PauliAxis::kZ:
                if (t.qubit < 0 || t.qubit >= c.num_qubits()) {
                    throw DomainError("measured qubit " + std::to_string(t.qubit) + " out of range");
                }
                break;
        }
    }
    return out;
}

}  // namespace graphlab::sim
