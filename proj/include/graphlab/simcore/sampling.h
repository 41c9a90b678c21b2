#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "graphlab/pauli.h"
#include "graphlab/simcore/rng.h"
#include "graphlab/simcore/statevector.h"

namespace graphlab::sim {

/// Measurement record over an ordered list of qubits. Outcome index bit i
/// is the result of qubits[i]; bitstrings are printed most significant
/// first, so the last character belongs to qubits[0].
class ShotCounts {
   public:
    explicit ShotCounts(std::vector<int> qubits);

    void add(std::uint64_t outcome, std::uint64_t count = 1);
    void merge(const ShotCounts &other);

    const std::vector<int> &qubits() const { return qubits_; }
    std::uint64_t shots() const { return shots_; }
    std::uint64_t count(std::uint64_t outcome) const;
    /// Nonzero entries keyed by bitstring.
    std::map<std::string, std::uint64_t> by_bitstring() const;

    /// Mean of prod_{i in positions} (-1)^{bit_i}; positions index into qubits().
    double parity_mean(std::span<const int> positions) const;

    bool operator==(const ShotCounts &) const = default;

   private:
    std::vector<int> qubits_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t shots_ = 0;
};

/// Inverse-CDF sampler over a fixed outcome distribution.
class OutcomeSampler {
   public:
    explicit OutcomeSampler(std::span<const double> probabilities);
    std::uint64_t draw(Rng &rng) const;

   private:
    std::vector<double> cdf_;
};

/// i.i.d. Born-rule samples of `qubits`. Deterministic for a fixed seed.
/// Throws DomainError for shots == 0 or repeated qubits.
ShotCounts sample(const Statevector &s, std::span<const int> qubits, std::uint64_t shots,
                  std::uint64_t seed);

/// (count_0 - count_1) / shots after rotating `axis` onto Z.
double estimate_pauli_mean(const Circuit &c, int l, PauliAxis axis, std::uint64_t shots,
                           std::uint64_t seed, int max_qubits = kDefaultMaxQubits);

/// Two-qubit parity mean after rotating both axes onto Z.
double estimate_correlator(const Circuit &c, int l, int m, PauliAxis a, PauliAxis b,
                           std::uint64_t shots, std::uint64_t seed,
                           int max_qubits = kDefaultMaxQubits);

/// 1/2 (1 - |m|) with |m| clamped to 1.
double gme_from_means(double mx, double my, double mz);

}  // namespace graphlab::sim
