#include "graphlab/analytic.h"

#include <algorithm>
#include <array>
#include <cmath>

namespace graphlab::analytic {

namespace {

using cplx = std::complex<double>;

bool flips_z(PauliAxis a) {
    return a != PauliAxis::kZ;
}

/// <p| Pi_z P |p> for the single-qubit product state |p> = RX(phi)|0>, where
/// Pi_z projects onto the Z eigenvalue z (index 0 for +1, 1 for -1).
cplx projected_element(double phi, PauliAxis axis, int z_index) {
    const std::array<cplx, 2> p = {cplx(std::cos(phi / 2), 0), cplx(0, -std::sin(phi / 2))};
    std::array<cplx, 2> pp;
    switch (axis) {
        case PauliAxis::kX:
            pp = {p[1], p[0]};
            break;
        case PauliAxis::kY:
            pp = {cplx(0, -1) * p[1], cplx(0, 1) * p[0]};
            break;
        case PauliAxis::kZ:
            pp = {p[0], -p[1]};
            break;
    }
    return std::conj(p[z_index]) * pp[z_index];
}

/// Expectation in RX(phi)|0> of (c1 + i s1 z1 Z)(c2 + i s2 z2 Z); a missing
/// factor is passed as angle 0.
cplx coupled_factor(double theta_1, int z1, double theta_2, int z2, double phi) {
    double c1 = std::cos(theta_1), s1 = std::sin(theta_1) * z1;
    double c2 = std::cos(theta_2), s2 = std::sin(theta_2) * z2;
    // a0 + a1 Z with <Z> = cos(phi)
    cplx a0(c1 * c2 - s1 * s2, 0);
    cplx a1(0, s1 * c2 + c1 * s2);
    return a0 + a1 * std::cos(phi);
}

cplx ipow(cplx base, int exponent) {
    cplx out(1, 0);
    for (int i = 0; i < exponent; i++) {
        out *= base;
    }
    return out;
}

void check_degree(int d) {
    if (d < 0) {
        throw DomainError("degree must be non-negative, got " + std::to_string(d));
    }
}

/// Heisenberg-picture evaluation of <psi_G| P_l Q_m |psi_G>.
///
/// All RZZ terms commute, so U^dag O U = exp(2iA) O where A collects the
/// terms anticommuting with O. Each such term contributes
/// cos(theta) + i sin(theta) Z_a Z_b. Resolving Z_l and Z_m into eigenvalues
/// (z_l, z_m) leaves a product over the remaining qubits, each of which sees
/// at most two factors (one per edge to l or m), evaluated against the
/// product state where <Z_j> = cos(phi_j).
double local_expectation(const WeightedGraph &g, Vertex l, PauliAxis a, Vertex m, PauliAxis b) {
    const bool pair = m >= 0;
    const bool flip_l = flips_z(a);
    const bool flip_m = pair && flips_z(b);

    // index = zl_index * 2 + zm_index
    std::array<cplx, 4> acc;
    for (int zl = 0; zl < 2; zl++) {
        for (int zm = 0; zm < 2; zm++) {
            cplx w = projected_element(g.phi(l), a, zl);
            if (pair) {
                w *= projected_element(g.phi(m), b, zm);
            } else if (zm == 1) {
                w = 0;
            }
            acc[zl * 2 + zm] = w;
        }
    }

    auto nl = g.neighbors(l);
    std::span<const Neighbor> nm;
    if (pair) {
        nm = g.neighbors(m);
    }

    // Walk both sorted neighbor lists together so common neighbors are seen once.
    std::size_t il = 0, im = 0;
    while (il < nl.size() || im < nm.size()) {
        Vertex j;
        double theta_l = 0, theta_m = 0;
        if (im >= nm.size() || (il < nl.size() && nl[il].vertex < nm[im].vertex)) {
            j = nl[il].vertex;
            theta_l = nl[il++].theta;
        } else if (il >= nl.size() || nm[im].vertex < nl[il].vertex) {
            j = nm[im].vertex;
            theta_m = nm[im++].theta;
        } else {
            j = nl[il].vertex;
            theta_l = nl[il++].theta;
            theta_m = nm[im++].theta;
        }

        if (pair && (j == m || j == l)) {
            // The l-m edge, seen from both sides; it anticommutes with O only
            // when exactly one of P_l, Q_m flips Z.
            if (j == m && flip_l != flip_m) {
                double c = std::cos(theta_l), s = std::sin(theta_l);
                for (int zl = 0; zl < 2; zl++) {
                    for (int zm = 0; zm < 2; zm++) {
                        int zz = (zl == zm) ? 1 : -1;
                        acc[zl * 2 + zm] *= cplx(c, s * zz);
                    }
                }
            }
            continue;
        }

        if (!flip_l) {
            theta_l = 0;
        }
        if (!flip_m) {
            theta_m = 0;
        }
        if (theta_l == 0 && theta_m == 0) {
            continue;
        }
        double phi_j = g.phi(j);
        for (int zl = 0; zl < 2; zl++) {
            for (int zm = 0; zm < 2; zm++) {
                acc[zl * 2 + zm] *= coupled_factor(theta_l, zl == 0 ? 1 : -1, theta_m, zm == 0 ? 1 : -1, phi_j);
            }
        }
    }

    cplx total = acc[0] + acc[1] + acc[2] + acc[3];
    return total.real();
}

}  // namespace

double BlochVector::norm() const {
    return std::sqrt(mx * mx + my * my + mz * mz);
}

std::complex<double> neighbor_factor(double theta_lj, double phi_j) {
    return {std::cos(theta_lj), std::sin(theta_lj) * std::cos(phi_j)};
}

std::complex<double> neighbor_product(const WeightedGraph &g, Vertex l, Vertex exclude) {
    cplx out(1, 0);
    for (const auto &nb : g.neighbors(l)) {
        if (nb.vertex != exclude) {
            out *= neighbor_factor(nb.theta, g.phi(nb.vertex));
        }
    }
    return out;
}

double pauli_mean(const WeightedGraph &g, Vertex l, PauliAxis axis) {
    double phi = g.phi(l);
    switch (axis) {
        case PauliAxis::kX:
            return std::sin(phi) * neighbor_product(g, l).imag();
        case PauliAxis::kY:
            return -std::sin(phi) * neighbor_product(g, l).real();
        case PauliAxis::kZ:
            return std::cos(phi);
    }
    return 0;
}

BlochVector bloch_vector(const WeightedGraph &g, Vertex l) {
    auto f = neighbor_product(g, l);
    double phi = g.phi(l);
    return {std::sin(phi) * f.imag(), -std::sin(phi) * f.real(), std::cos(phi)};
}

double gme(const WeightedGraph &g, Vertex l) {
    double phi = g.phi(l);
    double prod = 1;
    for (const auto &nb : g.neighbors(l)) {
        double c = std::cos(nb.theta), s = std::sin(nb.theta), cp = std::cos(g.phi(nb.vertex));
        prod *= c * c + s * s * cp * cp;
    }
    double radicand = std::cos(phi) * std::cos(phi) + std::sin(phi) * std::sin(phi) * prod;
    return std::clamp(0.5 - 0.5 * std::sqrt(radicand), 0.0, 0.5);
}

double gme_uniform(double phi, double theta, int degree) {
    check_degree(degree);
    double cp = std::cos(phi), sp = std::sin(phi);
    double c = std::cos(theta), s = std::sin(theta);
    double base = c * c + s * s * cp * cp;
    double radicand = cp * cp + sp * sp * std::pow(base, degree);
    return std::clamp(0.5 - 0.5 * std::sqrt(radicand), 0.0, 0.5);
}

double gme_star_center(std::span<const double> phis, std::span<const double> thetas) {
    if (phis.size() != 5 || thetas.size() != 4) {
        throw DomainError("K_{1,4} center needs 5 vertex angles and 4 edge angles, got " +
                          std::to_string(phis.size()) + " and " + std::to_string(thetas.size()));
    }
    double prod = 1;
    for (std::size_t j = 0; j < 4; j++) {
        double c = std::cos(thetas[j]), s = std::sin(thetas[j]), cp = std::cos(phis[j + 1]);
        prod *= c * c + s * s * cp * cp;
    }
    double c0 = std::cos(phis[0]), s0 = std::sin(phis[0]);
    return std::clamp(0.5 - 0.5 * std::sqrt(c0 * c0 + s0 * s0 * prod), 0.0, 0.5);
}

double correlator(const WeightedGraph &g, Vertex l, Vertex m, PauliAxis a, PauliAxis b) {
    g.phi(l);
    g.phi(m);
    if (l == m) {
        throw DomainError("correlator needs two distinct vertices, got " + std::to_string(l) + " twice");
    }
    return local_expectation(g, l, a, m, b);
}

double correlator_uniform(double phi, double theta, int deg_l, int deg_m, PauliAxis a, PauliAxis b,
                          PairLayout layout) {
    check_degree(deg_l);
    check_degree(deg_m);
    using enum PauliAxis;
    // Canonical order: the "flipping" axis sits on l, and X before Y.
    auto rank = [](PauliAxis p) { return p == kX ? 0 : p == kY ? 1 : 2; };
    if (rank(b) < rank(a)) {
        return correlator_uniform(phi, theta, deg_m, deg_l, b, a, layout);
    }

    const double sp = std::sin(phi), cp = std::cos(phi);
    const cplx fl = ipow(neighbor_factor(theta, phi), deg_l);
    const cplx fm = ipow(neighbor_factor(theta, phi), deg_m);
    const bool adjacent = layout == PairLayout::kAdjacent;

    if (a == kX && b == kX) {
        return sp * sp * fl.imag() * fm.imag();
    }
    if (a == kY && b == kY) {
        return sp * sp * fl.real() * fm.real();
    }
    if (a == kX && b == kY) {
        return -sp * sp * fl.imag() * fm.real();
    }
    if (a == kZ && b == kZ) {
        return cp * cp;
    }
    if (a == kX) {  // XZ
        if (!adjacent) {
            return sp * fl.imag() * cp;
        }
        return sp * cp * std::cos(theta) * fl.imag() + sp * std::sin(theta) * fl.real();
    }
    // YZ
    if (!adjacent) {
        return -sp * fl.real() * cp;
    }
    return -sp * std::cos(theta) * cp * fl.real() + sp * std::sin(theta) * fl.imag();
}

}  // namespace graphlab::analytic
