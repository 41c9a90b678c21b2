#pragma once

#include <complex>
#include <span>

#include "graphlab/graph.h"
#include "graphlab/pauli.h"

namespace graphlab::analytic {

/// Closed-form expectation values for the state
///   |psi_G> = prod_{(j,k) in E} RZZ_jk(theta_jk) prod_i RX_i(phi_i) |0...0>
/// with RX(a) = exp(-i a X / 2) and RZZ(a) = exp(-i a Z Z / 2).
/// Every routine touches only the neighborhoods of the queried vertices.

struct BlochVector {
    double mx;
    double my;
    double mz;

    double norm() const;
};

/// cos(theta_lj) + i sin(theta_lj) cos(phi_j)
std::complex<double> neighbor_factor(double theta_lj, double phi_j);

/// Product of neighbor_factor over N(l) minus `exclude` (pass -1 for none).
/// Empty product is 1.
std::complex<double> neighbor_product(const WeightedGraph &g, Vertex l, Vertex exclude = -1);

double pauli_mean(const WeightedGraph &g, Vertex l, PauliAxis axis);
BlochVector bloch_vector(const WeightedGraph &g, Vertex l);

/// Geometric measure of entanglement of qubit l with the rest, in [0, 1/2].
double gme(const WeightedGraph &g, Vertex l);

/// gme for phi_i = phi, theta_jk = theta at a vertex of degree `degree`.
double gme_uniform(double phi, double theta, int degree);

/// gme of the center of K_{1,4}: phis = (phi_0, ..., phi_4), thetas = (theta_01, ..., theta_04).
double gme_star_center(std::span<const double> phis, std::span<const double> thetas);

/// <psi_G| sigma^a_l sigma^b_m |psi_G> for any l != m, adjacent or not, with
/// any number of common neighbors. Cost O(deg l + deg m).
double correlator(const WeightedGraph &g, Vertex l, Vertex m, PauliAxis a, PauliAxis b);

/// How the pair (l, m) sits in a uniform graph for correlator_uniform.
enum class PairLayout {
    /// l and m not adjacent, N(l) ∩ N(m) empty; degrees are |N(l)| and |N(m)|.
    kSeparated,
    /// l and m joined by an edge of weight theta, N(l) ∩ N(m) empty; degrees
    /// count the neighbors other than the partner, |N(l) \ {m}| and |N(m) \ {l}|.
    kAdjacent,
};

/// Uniform-parameter correlators written in terms of F = cos(theta) + i sin(theta) cos(phi):
///   XX = sin^2(phi) Im F^dl Im F^dm,  YY = sin^2(phi) Re F^dl Re F^dm,
///   XY = -sin^2(phi) Im F^dl Re F^dm, ZZ = cos^2(phi),
///   XZ (adjacent) = sin(phi) cos(phi) cos(theta) Im F^dl + sin(phi) sin(theta) Re F^dl,
///   YZ (adjacent) = -sin(phi) cos(phi) cos(theta) Re F^dl + sin(phi) sin(theta) Im F^dl.
/// With kSeparated the XZ / YZ pairs factorize into <X_l><Z_m> and <Y_l><Z_m>.
/// Transposed pairs (ZX, YX, ZY) swap roles of l and m.
/// Throws DomainError on a negative degree.
double correlator_uniform(double phi, double theta, int deg_l, int deg_m, PauliAxis a, PauliAxis b,
                          PairLayout layout = PairLayout::kSeparated);

}  // namespace graphlab::analytic
