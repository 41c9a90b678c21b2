#pragma once

#include <array>
#include <string>
#include <vector>

#include "graphlab/errors.h"
#include "graphlab/graph.h"
#include "graphlab/pauli.h"

namespace graphlab::sim {

enum class GateKind { kRX, kRY, kRZ, kRZZ, kX, kSX, kCNOT, kID };

const char *gate_name(GateKind kind);
int gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);

/// One gate application. Angles are in radians; rotations follow
/// R_P(a) = exp(-i a P / 2), RZZ(a) = exp(-i a Z Z / 2). For CNOT
/// qubits[0] is the control.
struct Gate {
    GateKind kind;
    std::array<int, 2> qubits{-1, -1};
    double angle = 0;

    static Gate rx(int q, double a) { return {GateKind::kRX, {q, -1}, a}; }
    static Gate ry(int q, double a) { return {GateKind::kRY, {q, -1}, a}; }
    static Gate rz(int q, double a) { return {GateKind::kRZ, {q, -1}, a}; }
    static Gate rzz(int q0, int q1, double a) { return {GateKind::kRZZ, {q0, q1}, a}; }
    static Gate x(int q) { return {GateKind::kX, {q, -1}, 0}; }
    static Gate sx(int q) { return {GateKind::kSX, {q, -1}, 0}; }
    static Gate cnot(int control, int target) { return {GateKind::kCNOT, {control, target}, 0}; }
    static Gate id(int q) { return {GateKind::kID, {q, -1}, 0}; }

    int arity() const { return gate_arity(kind); }
    std::string str() const;

    bool operator==(const Gate &) const = default;
};

class Circuit {
   public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return n_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Throws DomainError when a qubit index is out of range or the two
    /// qubits of a two-qubit gate coincide.
    Circuit &append(const Gate &g);
    Circuit &append(const Circuit &other);

    std::string str() const;

   private:
    int n_;
    std::vector<Gate> gates_;
};

/// RX_i(phi_i) on every vertex in index order, then RZZ_jk(theta_jk) for
/// every edge in canonical (j, k) order.
Circuit build_graph_circuit(const WeightedGraph &g);

/// Appends the basis change that maps `axis` onto Z before a standard-basis
/// measurement: RY(-pi/2) for X, RX(pi/2) for Y, nothing for Z.
/// Throws DomainError on duplicate target qubits.
Circuit measurement_circuit(const Circuit &c, const std::vector<PauliTerm> &targets);

}  // namespace graphlab::sim
