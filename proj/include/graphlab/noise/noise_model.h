#pragma once

#include <cstdint>
#include <vector>

#include "graphlab/noise/transpile.h"
#include "graphlab/simcore/sampling.h"

namespace graphlab::noise {

/// Stochastic Pauli noise plus classical readout flips.
///   err_1q: after each X / SX, apply X, Y or Z (uniformly) with this probability.
///   err_2q: after each CNOT, apply one of the 15 non-identity two-qubit Paulis
///           (uniformly) with this probability.
///   readout_flip: each measured bit is flipped independently with this probability.
/// RZ and ID are noiseless.
struct NoiseModel {
    double readout_flip = 0;
    double err_1q = 0;
    double err_2q = 0;

    /// Readout 1e-2, X/SX 1e-4, CNOT 1e-2.
    static NoiseModel superconducting_default() { return {1e-2, 1e-4, 1e-2}; }

    /// Throws DomainError unless every probability lies in [0, 1].
    void validate() const;
    bool gate_noise_free() const { return err_1q == 0 && err_2q == 0; }
    bool operator==(const NoiseModel &) const = default;
};

struct TrajectoryConfig {
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
};

/// Monte-Carlo trajectory sampling of `qubits` after running `bc` under `nm`.
///
/// Seed contract: outcome draws use make_rng(seed) exactly as sim::sample
/// does, so with err_1q = err_2q = readout_flip = 0 the counts match
/// sim::sample on the same state and seed. Error insertion and readout
/// flips use streams derive_seed(seed, 1) and derive_seed(seed, 2).
sim::ShotCounts noisy_sample(const BasisCircuit &bc, const NoiseModel &nm, const std::vector<int> &qubits,
                             const TrajectoryConfig &cfg, int max_qubits = sim::kDefaultMaxQubits);

/// Measurement-basis rotations for `targets`, already in the basis.
BasisCircuit measurement_rotations(int num_qubits, const std::vector<PauliTerm> &targets);

double noisy_estimate_pauli_mean(const BasisCircuit &bc, const NoiseModel &nm, int l, PauliAxis axis,
                                 const TrajectoryConfig &cfg, int max_qubits = sim::kDefaultMaxQubits);

double noisy_estimate_correlator(const BasisCircuit &bc, const NoiseModel &nm, int l, int m, PauliAxis a,
                                 PauliAxis b, const TrajectoryConfig &cfg,
                                 int max_qubits = sim::kDefaultMaxQubits);

}  // namespace graphlab::noise
