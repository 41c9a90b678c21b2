#pragma once

#include "graphlab/simcore/circuit.h"
#include "graphlab/simcore/statevector.h"

namespace graphlab::noise {

/// Circuit over the hardware basis {ID, X, SX, RZ, CNOT}.
class BasisCircuit {
   public:
    /// Throws DomainError if any gate is outside the basis.
    explicit BasisCircuit(sim::Circuit c);

    int num_qubits() const { return circuit_.num_qubits(); }
    const sim::Circuit &circuit() const { return circuit_; }
    const std::vector<sim::Gate> &gates() const { return circuit_.gates(); }

    /// Concatenation; both operands are already basis circuits.
    BasisCircuit then(const BasisCircuit &suffix) const;

   private:
    sim::Circuit circuit_;
};

bool is_basis_gate(sim::GateKind kind);

/// Rewrites every gate into the basis, all-to-all connectivity:
///   RZZ_jk(t)  -> CNOT_jk, RZ_k(t), CNOT_jk
///   RX(a), RY(a) -> RZ, SX, RZ, SX, RZ
/// Each single-qubit replacement is checked against the original 2x2 matrix
/// (up to global phase); a mismatch throws std::logic_error.
BasisCircuit transpile(const sim::Circuit &c);

/// True if a == e^{i g} b for some g, entrywise within tol.
bool equal_up_to_phase(const sim::Matrix2 &a, const sim::Matrix2 &b, double tol = 1e-12);

/// Product of the single-qubit gates in circuit order (first gate applied first).
sim::Matrix2 sequence_matrix(const std::vector<sim::Gate> &gates);

}  // namespace graphlab::noise
