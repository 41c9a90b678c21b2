#include "graphlab/simcore/sampling.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace graphlab::sim {

ShotCounts::ShotCounts(std::vector<int> qubits) : qubits_(std::move(qubits)) {
    if (qubits_.size() > 24) {
        throw ResourceError("cannot record counts over more than 24 qubits");
    }
    counts_.assign(std::size_t{1} << qubits_.size(), 0);
}

void ShotCounts::add(std::uint64_t outcome, std::uint64_t count) {
    counts_.at(outcome) += count;
    shots_ += count;
}

void ShotCounts::merge(const ShotCounts &other) {
    if (other.qubits_ != qubits_) {
        throw DomainError("cannot merge counts over different qubit lists");
    }
    for (std::size_t k = 0; k < counts_.size(); k++) {
        counts_[k] += other.counts_[k];
    }
    shots_ += other.shots_;
}

std::uint64_t ShotCounts::count(std::uint64_t outcome) const {
    return outcome < counts_.size() ? counts_[outcome] : 0;
}

std::map<std::string, std::uint64_t> ShotCounts::by_bitstring() const {
    std::map<std::string, std::uint64_t> out;
    const std::size_t width = qubits_.size();
    for (std::size_t k = 0; k < counts_.size(); k++) {
        if (counts_[k] == 0) {
            continue;
        }
        std::string key(width, '0');
        for (std::size_t i = 0; i < width; i++) {
            if ((k >> i) & 1) {
                key[width - 1 - i] = '1';
            }
        }
        out.emplace(std::move(key), counts_[k]);
    }
    return out;
}

double ShotCounts::parity_mean(std::span<const int> positions) const {
    if (shots_ == 0) {
        throw DomainError("parity of an empty count table");
    }
    std::uint64_t mask = 0;
    for (int p : positions) {
        if (p < 0 || static_cast<std::size_t>(p) >= qubits_.size()) {
            throw DomainError("parity position out of range");
        }
        mask |= std::uint64_t{1} << p;
    }
    std::int64_t total = 0;
    for (std::size_t k = 0; k < counts_.size(); k++) {
        auto c = static_cast<std::int64_t>(counts_[k]);
        total += (std::popcount(k & mask) & 1) ? -c : c;
    }
    return static_cast<double>(total) / static_cast<double>(shots_);
}

OutcomeSampler::OutcomeSampler(std::span<const double> probabilities) {
    cdf_.resize(probabilities.size());
    double acc = 0;
    for (std::size_t k = 0; k < probabilities.size(); k++) {
        acc += probabilities[k];
        cdf_[k] = acc;
    }
    // Renormalize so the last bucket always catches u close to 1.
    for (auto &c : cdf_) {
        c /= acc;
    }
    cdf_.back() = 1.0;
}

std::uint64_t OutcomeSampler::draw(Rng &rng) const {
    double u = uniform01(rng);
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf_.begin(), cdf_.size() - 1));
}

ShotCounts sample(const Statevector &s, std::span<const int> qubits, std::uint64_t shots,
                  std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("sampling needs at least one shot");
    }
    if (std::set<int>(qubits.begin(), qubits.end()).size() != qubits.size()) {
        throw DomainError("sampled qubits must be distinct");
    }
    auto probs = s.marginal_probabilities(qubits);
    OutcomeSampler sampler(probs);
    ShotCounts out({qubits.begin(), qubits.end()});
    Rng rng = make_rng(seed);
    for (std::uint64_t i = 0; i < shots; i++) {
        out.add(sampler.draw(rng));
    }
    return out;
}

double estimate_pauli_mean(const Circuit &c, int l, PauliAxis axis, std::uint64_t shots,
                           std::uint64_t seed, int max_qubits) {
    auto mc = measurement_circuit(c, {{l, axis}});
    auto state = run(mc, max_qubits);
    const int qubits[] = {l};
    const int positions[] = {0};
    return sample(state, qubits, shots, seed).parity_mean(positions);
}

double estimate_correlator(const Circuit &c, int l, int m, PauliAxis a, PauliAxis b,
                           std::uint64_t shots, std::uint64_t seed, int max_qubits) {
    if (l == m) {
        throw DomainError("correlator needs two distinct qubits");
    }
    auto mc = measurement_circuit(c, {{l, a}, {m, b}});
    auto state = run(mc, max_qubits);
    const int qubits[] = {l, m};
    const int positions[] = {0, 1};
    return sample(state, qubits, shots, seed).parity_mean(positions);
}

double gme_from_means(double mx, double my, double mz) {
    double norm = std::sqrt(mx * mx + my * my + mz * mz);
    return 0.5 * (1.0 - std::min(norm, 1.0));
}

}  // namespace graphlab::sim
