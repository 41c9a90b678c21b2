#include <cmath>
#include <set>

#include "graphlab/noise/noise_model.h"

namespace graphlab::noise {

namespace {

using sim::GateKind;

struct NoisyGate {
    std::size_t index;  // position in the circuit
    double probability;
    bool two_qubit;
};

struct ErrorEvent {
    std::size_t gate;  // position in NoisyGate list
    int pauli;         // 1..3 for one qubit, 1..15 (base-4 pair) for two
};

constexpr PauliAxis kAxisOf[4] = {PauliAxis::kZ, PauliAxis::kX, PauliAxis::kY, PauliAxis::kZ};

void apply_error(sim::Statevector &s, const sim::Gate &g, int pauli, bool two_qubit) {
    if (!two_qubit) {
        s.apply_pauli(g.qubits[0], kAxisOf[pauli]);
        return;
    }
    int on_control = pauli & 3, on_target = pauli >> 2;
    if (on_control) {
        s.apply_pauli(g.qubits[0], kAxisOf[on_control]);
    }
    if (on_target) {
        s.apply_pauli(g.qubits[1], kAxisOf[on_target]);
    }
}

}  // namespace

void NoiseModel::validate() const {
    for (double p : {readout_flip, err_1q, err_2q}) {
        if (!(p >= 0 && p <= 1)) {
            throw DomainError("noise probabilities must lie in [0, 1]");
        }
    }
}

sim::ShotCounts noisy_sample(const BasisCircuit &bc, const NoiseModel &nm, const std::vector<int> &qubits,
                             const TrajectoryConfig &cfg, int max_qubits) {
    nm.validate();
    if (qubits.empty()) {
        throw DomainError("noisy sampling needs at least one measured qubit");
    }
    if (cfg.shots == 0) {
        throw DomainError("sampling needs at least one shot");
    }
    if (std::set<int>(qubits.begin(), qubits.end()).size() != qubits.size()) {
        throw DomainError("sampled qubits must be distinct");
    }

    const auto &gates = bc.gates();
    std::vector<NoisyGate> noisy;
    for (std::size_t i = 0; i < gates.size(); i++) {
        GateKind k = gates[i].kind;
        if ((k == GateKind::kX || k == GateKind::kSX) && nm.err_1q > 0) {
            noisy.push_back({i, nm.err_1q, false});
        } else if (k == GateKind::kCNOT && nm.err_2q > 0) {
            noisy.push_back({i, nm.err_2q, true});
        }
    }

    // P(first error at gate g) = p_g prod_{h<g} (1 - p_h); P(clean) = prod (1 - p_h).
    std::vector<double> first_error_weight(noisy.size());
    double p_clean = 1;
    for (std::size_t g = 0; g < noisy.size(); g++) {
        first_error_weight[g] = p_clean * noisy[g].probability;
        p_clean *= 1 - noisy[g].probability;
    }

    const sim::Statevector clean = sim::run(bc.circuit(), max_qubits);
    const sim::OutcomeSampler clean_sampler(clean.marginal_probabilities(qubits));
    std::optional<sim::OutcomeSampler> first_error;
    if (!noisy.empty() && p_clean < 1) {
        first_error.emplace(first_error_weight);
    }

    Rng outcome_rng = make_rng(cfg.seed);
    Rng error_rng = make_rng(derive_seed(cfg.seed, 1));
    Rng readout_rng = make_rng(derive_seed(cfg.seed, 2));

    sim::ShotCounts counts(qubits);
    std::vector<ErrorEvent> events;
    for (std::uint64_t shot = 0; shot < cfg.shots; shot++) {
        std::uint64_t outcome;
        if (!first_error || uniform01(error_rng) < p_clean) {
            outcome = clean_sampler.draw(outcome_rng);
        } else {
            events.clear();
            std::size_t first = first_error->draw(error_rng);
            auto pick = [&](std::size_t g) {
                int pauli = noisy[g].two_qubit ? 1 + uniform_index(error_rng, 15) : 1 + uniform_index(error_rng, 3);
                events.push_back({g, pauli});
            };
            pick(first);
            for (std::size_t g = first + 1; g < noisy.size(); g++) {
                if (uniform01(error_rng) < noisy[g].probability) {
                    pick(g);
                }
            }

            sim::Statevector s(bc.num_qubits(), max_qubits);
            std::size_t next = 0;
            for (std::size_t i = 0; i < gates.size(); i++) {
                s.apply(gates[i]);
                while (next < events.size() && noisy[events[next].gate].index == i) {
                    apply_error(s, gates[i], events[next].pauli, noisy[events[next].gate].two_qubit);
                    next++;
                }
            }
            sim::OutcomeSampler sampler(s.marginal_probabilities(qubits));
            outcome = sampler.draw(outcome_rng);
        }

        if (nm.readout_flip > 0) {
            for (std::size_t b = 0; b < qubits.size(); b++) {
                if (uniform01(readout_rng) < nm.readout_flip) {
                    outcome ^= std::uint64_t{1} << b;
                }
            }
        }
        counts.add(outcome);
    }
    return counts;
}

BasisCircuit measurement_rotations(int num_qubits, const std::vector<PauliTerm> &targets) {
    return transpile(sim::measurement_circuit(sim::Circuit(num_qubits), targets));
}

double noisy_estimate_pauli_mean(const BasisCircuit &bc, const NoiseModel &nm, int l, PauliAxis axis,
                                 const TrajectoryConfig &cfg, int max_qubits) {
    auto full = bc.then(measurement_rotations(bc.num_qubits(), {{l, axis}}));
    const int positions[] = {0};
    return noisy_sample(full, nm, {l}, cfg, max_qubits).parity_mean(positions);
}

double noisy_estimate_correlator(const BasisCircuit &bc, const NoiseModel &nm, int l, int m, PauliAxis a,
                                 PauliAxis b, const TrajectoryConfig &cfg, int max_qubits) {
    if (l == m) {
        throw DomainError("correlator needs two distinct qubits");
    }
    auto full = bc.then(measurement_rotations(bc.num_qubits(), {{l, a}, {m, b}}));
    const int positions[] = {0, 1};
    return noisy_sample(full, nm, {l, m}, cfg, max_qubits).parity_mean(positions);
}

}  // namespace graphlab::noise
