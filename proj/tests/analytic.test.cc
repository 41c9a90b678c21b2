#include "graphlab/analytic.h"

#include <algorithm>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

using namespace graphlab;
using analytic::correlator;
using analytic::correlator_uniform;
using analytic::gme;
using analytic::gme_uniform;
using analytic::pauli_mean;
using analytic::PairLayout;
using fixtures::oracle_expectation;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-9;

/// Two stars of degrees dl (center 0) and dm (center dl+1), joined by a path
/// between their last leaves so that N(l) and N(m) stay disjoint.
WeightedGraph two_stars(int dl, int dm, double phi, double theta) {
    const int l = 0, m = dl + 1;
    std::vector<Edge> edges;
    for (int k = 1; k <= dl; k++) {
        edges.push_back({l, k, theta});
    }
    for (int k = 1; k <= dm; k++) {
        edges.push_back({m, m + k, theta});
    }
    int n = m + dm + 1;
    if (dl > 0 && dm > 0) {
        edges.push_back({dl, n, theta});
        edges.push_back({m + dm, n, theta});
        n++;
    }
    return WeightedGraph(n, std::vector<double>(n, phi), std::move(edges));
}

}  // namespace

TEST(analytic, pauli_mean_examples) {
    WeightedGraph isolated(1, {kPi / 3}, {});
    EXPECT_NEAR(pauli_mean(isolated, 0, PauliAxis::kY), -std::sin(kPi / 3), 1e-15);
    EXPECT_NEAR(pauli_mean(isolated, 0, PauliAxis::kX), 0, 1e-15);
    auto k14 = star_graph(4, 0, 0.7);
    EXPECT_EQ(pauli_mean(k14, 2, PauliAxis::kZ), 1.0);
    EXPECT_THROW(pauli_mean(k14, 5, PauliAxis::kZ), DomainError);
}

TEST(analytic, pauli_mean_matches_oracle_seed42) {
    std::mt19937_64 rng(42);
    auto g = fixtures::random_graph(rng, 6, 0.5, 0, kPi);
    for (int l = 0; l < 6; l++) {
        for (auto axis : kAllAxes) {
            EXPECT_NEAR(pauli_mean(g, l, axis), oracle_expectation(g, {{l, axis}}), kTol)
                << "vertex " << l << " axis " << axis_char(axis);
        }
        auto bv = analytic::bloch_vector(g, l);
        EXPECT_NEAR(gme(g, l), 0.5 * (1 - bv.norm()), kTol);
        double mx = oracle_expectation(g, {{l, PauliAxis::kX}});
        double my = oracle_expectation(g, {{l, PauliAxis::kY}});
        double mz = oracle_expectation(g, {{l, PauliAxis::kZ}});
        EXPECT_NEAR(gme(g, l), 0.5 * (1 - std::sqrt(mx * mx + my * my + mz * mz)), kTol);
    }
}

TEST(analytic, gme_examples) {
    EXPECT_EQ(gme(star_graph(4, 1.1, 0), 0), 0.0);
    EXPECT_NEAR(gme(star_graph(1, kPi / 2, kPi / 2), 0), 0.5, 1e-15);
    EXPECT_THROW(gme(star_graph(1, 1, 1), 2), DomainError);
}

TEST(analytic, gme_uniform_examples) {
    EXPECT_EQ(gme_uniform(0.4, 1.3, 0), 0.0);
    EXPECT_NEAR(gme_uniform(kPi / 2, kPi / 2, 4), 0.5, 1e-15);
    // dense-matrix oracle (tests/oracles/frozen_values.py)
    EXPECT_NEAR(gme_uniform(kPi / 3, kPi / 4, 4), 0.1981552891101328, kTol);
    auto k14 = star_graph(4, kPi / 3, kPi / 4);
    EXPECT_NEAR(gme(k14, 0), 0.1981552891101328, kTol);
    double mx = oracle_expectation(k14, {{0, PauliAxis::kX}});
    double my = oracle_expectation(k14, {{0, PauliAxis::kY}});
    double mz = oracle_expectation(k14, {{0, PauliAxis::kZ}});
    EXPECT_NEAR(0.5 * (1 - std::sqrt(mx * mx + my * my + mz * mz)), 0.1981552891101328, kTol);
    EXPECT_THROW(gme_uniform(1, 1, -1), DomainError);
}

TEST(analytic, gme_star_center_examples) {
    std::vector<double> half_pi(5, kPi / 2);
    EXPECT_NEAR(analytic::gme_star_center(half_pi, std::vector<double>(4, kPi / 2)), 0.5, 1e-15);
    EXPECT_EQ(analytic::gme_star_center(half_pi, std::vector<double>(4, 0.0)), 0.0);

    std::vector<double> phis = {kPi / 3, kPi / 4, kPi / 5, kPi / 6, kPi / 7};
    std::vector<double> thetas = {kPi / 3, kPi / 4, kPi / 5, kPi / 6};
    EXPECT_NEAR(analytic::gme_star_center(phis, thetas), 0.11672193684617249, kTol);
    std::vector<Edge> edges;
    for (int k = 0; k < 4; k++) {
        edges.push_back({0, k + 1, thetas[k]});
    }
    WeightedGraph g(5, phis, edges);
    EXPECT_NEAR(gme(g, 0), analytic::gme_star_center(phis, thetas), 1e-15);

    EXPECT_THROW(analytic::gme_star_center(std::vector<double>(4, 0.0), thetas), DomainError);
    EXPECT_THROW(analytic::gme_star_center(phis, std::vector<double>(5, 0.0)), DomainError);
}

TEST(analytic, correlator_examples) {
    auto g = star_graph(3, 0, 0.8);
    EXPECT_NEAR(correlator(g, 0, 1, PauliAxis::kZ, PauliAxis::kZ), 1.0, 1e-15);

    auto separated = two_stars(2, 2, kPi / 2, 0.9);
    EXPECT_NEAR(correlator(separated, 0, 3, PauliAxis::kX, PauliAxis::kX), 0.0, 1e-15);

    auto path = path_graph(4, kPi / 2, kPi / 3);
    EXPECT_NEAR(correlator(path, 0, 3, PauliAxis::kY, PauliAxis::kY), 0.25, kTol);
    EXPECT_NEAR(correlator_uniform(kPi / 2, kPi / 3, 1, 1, PauliAxis::kY, PauliAxis::kY), 0.25, kTol);
    EXPECT_NEAR(oracle_expectation(path, {{0, PauliAxis::kY}, {3, PauliAxis::kY}}), 0.25, kTol);

    EXPECT_THROW(correlator(g, 1, 1, PauliAxis::kX, PauliAxis::kX), DomainError);
    EXPECT_THROW(correlator(g, 0, 9, PauliAxis::kX, PauliAxis::kX), DomainError);
}

TEST(analytic, correlator_k14_seed7_all_axes) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> w(0, kPi);
    std::vector<double> phis(5);
    for (auto &p : phis) {
        p = w(rng);
    }
    std::vector<Edge> edges;
    for (int k = 1; k <= 4; k++) {
        edges.push_back({0, k, w(rng)});
    }
    WeightedGraph g(5, phis, edges);
    for (auto a : kAllAxes) {
        for (auto b : kAllAxes) {
            EXPECT_NEAR(correlator(g, 0, 1, a, b), oracle_expectation(g, {{0, a}, {1, b}}), kTol)
                << axis_char(a) << axis_char(b);
        }
    }
}

TEST(analytic, correlator_uniform_two_stars_frozen) {
    // dense-matrix oracle (tests/oracles/frozen_values.py)
    const double expected[3][3] = {{0.250269076982411, -0.03707005188553019, 0.3362492559819783},
                                   {-0.17928711449347787, 0.02655614795409711, -0.24088137289060513},
                                   {0.37214814981750366, -0.055122875703131693, 0.49999999999999956}};
    auto g = two_stars(2, 3, kPi / 4, kPi / 5);
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            auto a = kAllAxes[i], b = kAllAxes[j];
            EXPECT_NEAR(correlator(g, 0, 3, a, b), expected[i][j], kTol) << axis_char(a) << axis_char(b);
            EXPECT_NEAR(correlator_uniform(kPi / 4, kPi / 5, 2, 3, a, b), expected[i][j], kTol)
                << axis_char(a) << axis_char(b);
        }
    }
}

TEST(analytic, correlator_uniform_examples) {
    EXPECT_NEAR(correlator_uniform(0.3, 1.1, 2, 5, PauliAxis::kZ, PauliAxis::kZ), std::cos(0.3) * std::cos(0.3), 1e-15);
    for (double theta : {0.1, 0.7, 2.0}) {
        EXPECT_NEAR(correlator_uniform(kPi / 2, theta, 3, 2, PauliAxis::kX, PauliAxis::kY), 0, 1e-15);
    }
    EXPECT_THROW(correlator_uniform(1, 1, -1, 0, PauliAxis::kX, PauliAxis::kX), DomainError);
    EXPECT_THROW(correlator_uniform(1, 1, 0, -2, PauliAxis::kX, PauliAxis::kX), DomainError);
}

TEST(analytic, correlator_uniform_adjacent_layout) {
    // K_{1,4} pair (0, 1): adjacent, degrees without the partner are 3 and 0.
    for (double phi : {0.3, kPi / 3, 2.2}) {
        for (double theta : {0.4, kPi / 3, 2.9}) {
            auto g = star_graph(4, phi, theta);
            for (auto a : kAllAxes) {
                for (auto b : kAllAxes) {
                    EXPECT_NEAR(correlator_uniform(phi, theta, 3, 0, a, b, PairLayout::kAdjacent),
                                correlator(g, 0, 1, a, b), 1e-12);
                }
            }
        }
    }
}

TEST(analytic, oracle_equivalence_random_graphs) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; trial++) {
        int n = 2 + trial % 6;
        auto g = fixtures::random_graph(rng, n, 0.5, 0, kPi);
        auto state = sim::run(sim::build_graph_circuit(g));
        for (int l = 0; l < n; l++) {
            for (auto a : kAllAxes) {
                PauliTerm t[] = {{l, a}};
                ASSERT_NEAR(pauli_mean(g, l, a), sim::expectation(state, t), kTol);
            }
            for (int m = 0; m < n; m++) {
                if (m == l) {
                    continue;
                }
                for (auto a : kAllAxes) {
                    for (auto b : kAllAxes) {
                        PauliTerm t[] = {{l, a}, {m, b}};
                        ASSERT_NEAR(correlator(g, l, m, a, b), sim::expectation(state, t), kTol)
                            << "trial " << trial << " pair " << l << "," << m;
                    }
                }
            }
        }
    }
}

TEST(analytic, gme_range_and_zeros) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; trial++) {
        auto g = fixtures::random_graph(rng, 1 + trial % 8, 0.6, -2 * kPi, 2 * kPi);
        for (int l = 0; l < g.n(); l++) {
            double e = gme(g, l);
            EXPECT_GE(e, 0.0);
            EXPECT_LE(e, 0.5);
        }
    }
    for (double phi : {0.0, kPi}) {
        EXPECT_NEAR(gme(star_graph(4, phi, 1.3), 0), 0, 1e-15);
    }
}

TEST(analytic, gme_invariant_under_neighbor_permutation) {
    const std::vector<double> leaf_phis = {0.3, 1.2, 2.5, 0.9};
    const std::vector<double> thetas = {0.4, 2.2, 1.7, 0.8};
    std::vector<int> order = {0, 1, 2, 3};
    const double reference = gme(WeightedGraph(5, {1.0, 0.3, 1.2, 2.5, 0.9},
                                               {{0, 1, 0.4}, {0, 2, 2.2}, {0, 3, 1.7}, {0, 4, 0.8}}),
                                 0);
    do {
        std::vector<double> phis = {1.0};
        std::vector<Edge> edges;
        for (int k = 0; k < 4; k++) {
            phis.push_back(leaf_phis[order[k]]);
            edges.push_back({0, k + 1, thetas[order[k]]});
        }
        EXPECT_NEAR(gme(WeightedGraph(5, phis, edges), 0), reference, 1e-15);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST(analytic, correlator_symmetry_and_zz_factorization) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; trial++) {
        auto g = fixtures::random_graph(rng, 2 + trial % 7, 0.5, 0, kPi);
        for (int l = 0; l < g.n(); l++) {
            for (int m = 0; m < g.n(); m++) {
                if (l == m) {
                    continue;
                }
                EXPECT_NEAR(correlator(g, l, m, PauliAxis::kZ, PauliAxis::kZ),
                            pauli_mean(g, l, PauliAxis::kZ) * pauli_mean(g, m, PauliAxis::kZ), 1e-12);
                for (auto a : kAllAxes) {
                    for (auto b : kAllAxes) {
                        EXPECT_NEAR(correlator(g, l, m, a, b), correlator(g, m, l, b, a), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(analytic, gme_uniform_monotone_in_degree) {
    for (int i = 1; i < 20; i++) {
        for (int j = 1; j < 20; j++) {
            double phi = i * (kPi / 2) / 20, theta = j * (kPi / 2) / 20;
            for (int d = 0; d < 12; d++) {
                EXPECT_LE(gme_uniform(phi, theta, d), gme_uniform(phi, theta, d + 1) + 1e-15);
            }
        }
    }
}
