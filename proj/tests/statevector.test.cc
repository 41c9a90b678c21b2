#include "graphlab/simcore/statevector.h"

#include <algorithm>
#include <numbers>
#include <random>

#include "graphlab/analytic.h"
#include "gtest/gtest.h"
#include "test_support.h"

using namespace graphlab;
using namespace graphlab::sim;

namespace {

constexpr double kPi = std::numbers::pi;

Circuit random_circuit(std::mt19937_64 &rng, int n, int num_gates) {
    std::uniform_int_distribution<int> kind(0, 7), qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    Circuit c(n);
    while (static_cast<int>(c.size()) < num_gates) {
        int q0 = qubit(rng), q1 = qubit(rng);
        switch (kind(rng)) {
            case 0:
                c.append(Gate::rx(q0, angle(rng)));
                break;
            case 1:
                c.append(Gate::ry(q0, angle(rng)));
                break;
            case 2:
                c.append(Gate::rz(q0, angle(rng)));
                break;
            case 3:
                c.append(Gate::x(q0));
                break;
            case 4:
                c.append(Gate::sx(q0));
                break;
            case 5:
                c.append(Gate::id(q0));
                break;
            case 6:
                if (q0 != q1) {
                    c.append(Gate::rzz(q0, q1, angle(rng)));
                }
                break;
            case 7:
                if (q0 != q1) {
                    c.append(Gate::cnot(q0, q1));
                }
                break;
        }
    }
    return c;
}

}  // namespace

TEST(statevector, build_graph_circuit_layout) {
    auto c = build_graph_circuit(star_graph(4, 0.5, 0.25));
    ASSERT_EQ(c.size(), 9u);
    for (int i = 0; i < 5; i++) {
        EXPECT_EQ(c.gates()[i], Gate::rx(i, 0.5));
    }
    for (int k = 1; k <= 4; k++) {
        EXPECT_EQ(c.gates()[4 + k], Gate::rzz(0, k, 0.25));
    }
    auto edgeless = build_graph_circuit(WeightedGraph(3, {0.1, 0.2, 0.3}, {}));
    EXPECT_EQ(edgeless.size(), 3u);
    auto single = run(build_graph_circuit(WeightedGraph(1, {0.0}, {})));
    EXPECT_EQ(single.amplitudes()[0], std::complex<double>(1, 0));
    EXPECT_EQ(single.amplitudes()[1], std::complex<double>(0, 0));
}

TEST(statevector, run_examples) {
    auto s = run(Circuit(3));
    EXPECT_EQ(s.amplitudes()[0], std::complex<double>(1, 0));
    for (std::size_t k = 1; k < 8; k++) {
        EXPECT_EQ(s.amplitudes()[k], std::complex<double>(0, 0));
    }

    Circuit flip(1);
    flip.append(Gate::rx(0, kPi));
    auto f = run(flip);
    EXPECT_NEAR(std::abs(f.amplitudes()[0]), 0, 1e-15);
    EXPECT_NEAR(f.amplitudes()[1].real(), 0, 1e-15);
    EXPECT_NEAR(f.amplitudes()[1].imag(), -1, 1e-15);

    auto star = run(build_graph_circuit(star_graph(4, kPi / 2, kPi / 2)));
    double mx = expectation(star, std::vector<PauliTerm>{{0, PauliAxis::kX}});
    double my = expectation(star, std::vector<PauliTerm>{{0, PauliAxis::kY}});
    double mz = expectation(star, std::vector<PauliTerm>{{0, PauliAxis::kZ}});
    EXPECT_NEAR(0.5 * (1 - std::sqrt(mx * mx + my * my + mz * mz)), 0.5, 1e-12);
}

TEST(statevector, max_qubits_is_a_resource_error) {
    EXPECT_THROW(Statevector(25), ResourceError);
    EXPECT_THROW(Statevector(6, 5), ResourceError);
    EXPECT_THROW(run(Circuit(6), 5), ResourceError);
    EXPECT_NO_THROW(Statevector(5, 5));
}

TEST(statevector, circuit_validation) {
    Circuit c(2);
    EXPECT_THROW(c.append(Gate::rx(2, 0.1)), DomainError);
    EXPECT_THROW(c.append(Gate::cnot(1, 1)), DomainError);
    EXPECT_THROW(c.append(Gate::rzz(0, -1, 0.1)), DomainError);
}

TEST(statevector, kernels_match_dense_matrices) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; trial++) {
        int n = 1 + trial % 4;
        auto c = random_circuit(rng, n, 25);
        auto s = run(c);
        auto dense = fixtures::dense_run(c);
        for (std::size_t k = 0; k < dense.size(); k++) {
            EXPECT_NEAR(std::abs(s.amplitudes()[k] - dense[k]), 0, 1e-12);
        }
    }
}

TEST(statevector, norm_preserved_per_gate) {
    std::mt19937_64 rng(23);
    auto c = random_circuit(rng, 6, 300);
    Statevector s(6);
    for (const auto &g : c.gates()) {
        s.apply(g);
        ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12) << g.str();
    }
}

TEST(statevector, rotations_invert) {
    std::mt19937_64 rng(29);
    auto prep = random_circuit(rng, 4, 40);
    auto base = run(prep);
    for (double a : {0.3, -1.7, 4.0}) {
        for (auto [fwd, back] : {std::pair{Gate::rx(2, a), Gate::rx(2, -a)}, std::pair{Gate::ry(1, a), Gate::ry(1, -a)},
                                 std::pair{Gate::rz(0, a), Gate::rz(0, -a)},
                                 std::pair{Gate::rzz(3, 1, a), Gate::rzz(3, 1, -a)}}) {
            auto s = base;
            s.apply(fwd);
            s.apply(back);
            for (std::size_t k = 0; k < 16; k++) {
                EXPECT_NEAR(std::abs(s.amplitudes()[k] - base.amplitudes()[k]), 0, 1e-12);
            }
        }
    }
}

TEST(statevector, rzz_is_diagonal) {
    for (std::size_t basis = 0; basis < 8; basis++) {
        Statevector s(3);
        s.mutable_amplitudes()[0] = 0;
        s.mutable_amplitudes()[basis] = 1;
        s.apply(Gate::rzz(0, 2, 1.234));
        for (std::size_t k = 0; k < 8; k++) {
            if (k == basis) {
                EXPECT_NEAR(std::abs(s.amplitudes()[k]), 1, 1e-15);
            } else {
                EXPECT_EQ(s.amplitudes()[k], std::complex<double>(0, 0));
            }
        }
    }
}

TEST(statevector, expectation_examples) {
    auto zero = Statevector(3);
    EXPECT_EQ(expectation(zero, std::vector<PauliTerm>{{1, PauliAxis::kZ}}), 1.0);
    for (double phi : {0.0, 0.4, 2.0, -1.1}) {
        Circuit c(1);
        c.append(Gate::rx(0, phi));
        EXPECT_NEAR(expectation(run(c), std::vector<PauliTerm>{{0, PauliAxis::kY}}), -std::sin(phi), 1e-15);
    }
    EXPECT_THROW(expectation(zero, std::vector<PauliTerm>{{1, PauliAxis::kZ}, {1, PauliAxis::kX}}), DomainError);
    EXPECT_THROW(expectation(zero, std::vector<PauliTerm>{}), DomainError);
}

TEST(statevector, expectation_matches_dense_operator) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; trial++) {
        auto c = random_circuit(rng, 3, 20);
        auto s = run(c);
        for (auto a : kAllAxes) {
            for (auto b : kAllAxes) {
                // apply the Pauli product to a copy, take <psi|P psi>
                auto p = s;
                p.apply_pauli(0, a);
                p.apply_pauli(2, b);
                double direct = inner_product(s, p).real();
                EXPECT_NEAR(expectation(s, std::vector<PauliTerm>{{0, a}, {2, b}}), direct, 1e-12);
            }
        }
    }
}

TEST(statevector, z_mean_is_cos_phi_on_graph_states) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; trial++) {
        auto g = fixtures::random_graph(rng, 2 + trial % 6, 0.5, -kPi, kPi);
        auto s = run(build_graph_circuit(g));
        for (int l = 0; l < g.n(); l++) {
            EXPECT_NEAR(expectation(s, std::vector<PauliTerm>{{l, PauliAxis::kZ}}), std::cos(g.phi(l)), 1e-12);
        }
    }
}

TEST(statevector, rzz_order_independence) {
    std::mt19937_64 rng(61);
    auto g = fixtures::random_graph(rng, 6, 0.7, 0, kPi);
    auto c = build_graph_circuit(g);
    auto reference = run(c);
    std::vector<Gate> gates = c.gates();
    for (int trial = 0; trial < 10; trial++) {
        std::shuffle(gates.begin() + g.n(), gates.end(), rng);
        Circuit shuffled(g.n());
        for (const auto &gate : gates) {
            shuffled.append(gate);
        }
        auto s = run(shuffled);
        for (std::size_t k = 0; k < s.amplitudes().size(); k++) {
            EXPECT_NEAR(std::abs(s.amplitudes()[k] - reference.amplitudes()[k]), 0, 1e-12);
        }
    }
}

TEST(statevector, measurement_circuit_rotations) {
    Circuit c(2);
    auto x = measurement_circuit(c, {{1, PauliAxis::kX}});
    ASSERT_EQ(x.size(), 1u);
    EXPECT_EQ(x.gates()[0], Gate::ry(1, -kPi / 2));
    EXPECT_EQ(measurement_circuit(c, {{0, PauliAxis::kZ}}).size(), 0u);
    auto xy = measurement_circuit(c, {{0, PauliAxis::kX}, {1, PauliAxis::kY}});
    ASSERT_EQ(xy.size(), 2u);
    EXPECT_EQ(xy.gates()[1], Gate::rx(1, kPi / 2));
    EXPECT_THROW(measurement_circuit(c, {{0, PauliAxis::kX}, {0, PauliAxis::kY}}), DomainError);

    // After the rotation, <Z> equals the pre-rotation <axis>.
    std::mt19937_64 rng(71);
    auto prep = random_circuit(rng, 2, 15);
    auto before = run(prep);
    for (auto axis : kAllAxes) {
        auto after = run(measurement_circuit(prep, {{0, axis}}));
        EXPECT_NEAR(expectation(after, std::vector<PauliTerm>{{0, PauliAxis::kZ}}),
                    expectation(before, std::vector<PauliTerm>{{0, axis}}), 1e-12);
    }
}

TEST(statevector, twenty_qubit_star) {
    auto g = star_graph(19, kPi / 3, kPi / 4);
    auto s = run(build_graph_circuit(g));
    EXPECT_NEAR(expectation(s, std::vector<PauliTerm>{{0, PauliAxis::kX}}), analytic::pauli_mean(g, 0, PauliAxis::kX),
                1e-9);
}
