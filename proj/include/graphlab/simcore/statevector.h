#pragma once

#include <complex>
#include <span>
#include <vector>

#include "graphlab/pauli.h"
#include "graphlab/simcore/circuit.h"

namespace graphlab::sim {

inline constexpr int kDefaultMaxQubits = 24;

using Matrix2 = std::array<std::complex<double>, 4>;  // row-major

Matrix2 gate_matrix(const Gate &g);

/// Dense 2^n amplitude vector. Qubit q is bit q of the amplitude index
/// (qubit 0 least significant).
class Statevector {
   public:
    /// |0...0>. Throws ResourceError when n exceeds max_qubits.
    explicit Statevector(int num_qubits, int max_qubits = kDefaultMaxQubits);

    int num_qubits() const { return n_; }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> mutable_amplitudes() { return amps_; }

    void apply(const Gate &g);
    void apply_matrix(int q, const Matrix2 &m);
    void apply_cnot(int control, int target);
    void apply_rzz(int q0, int q1, double angle);
    void apply_pauli(int q, PauliAxis axis);

    double norm_squared() const;
    /// Probability of each outcome of `qubits`; bit i of the outcome index is qubits[i].
    std::vector<double> marginal_probabilities(std::span<const int> qubits) const;

   private:
    int n_;
    std::vector<std::complex<double>> amps_;
};

/// Applies the circuit to |0...0>.
Statevector run(const Circuit &c, int max_qubits = kDefaultMaxQubits);

/// Exact <psi| prod_i sigma^{a_i}_{q_i} |psi>. Throws DomainError on
/// duplicate or out-of-range qubits, std::logic_error if the result has an
/// imaginary part above 1e-12.
double expectation(const Statevector &s, std::span<const PauliTerm> ops);

std::complex<double> inner_product(const Statevector &a, const Statevector &b);

}  // namespace graphlab::sim
