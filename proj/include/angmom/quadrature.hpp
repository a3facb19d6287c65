#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "harmonics.hpp"

namespace angmom {

struct GLNode {
    double x = 0.0;
    double weight = 0.0;
};

/// Gauss-Legendre nodes and weights on (-1, 1), ascending in x; exact for
/// polynomials of degree <= 2n-1. Roots found by Newton iteration on the
/// three-term recurrence, weights 2/((1-x^2) P_n'(x)^2).
inline std::vector<GLNode> gauss_legendre_rule(int n) {
    if (n < 1) throw std::domain_error("gauss_legendre_rule: n must be >= 1");
    std::vector<GLNode> nodes(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (i - 0.25L) / (n + 0.5L));
        long double dp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L, p1 = x;
            for (int k = 1; k < n; ++k) {
                const long double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x)
            dp = n * (x * p1 - p0) / (x * x - 1.0L);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) <= 1e-15L) break;
        }
        nodes[static_cast<std::size_t>(n - i)] = {
            static_cast<double>(x),
            static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp))};
    }
    return nodes;
}

/// Product rule on the sphere: Gauss-Legendre in x = cos(theta) crossed with
/// a uniform trapezoid in phi (which integrates e^{i k phi} exactly to zero
/// for 0 < |k| < n_phi).
struct QuadratureRule {
    int n_theta = 0;
    std::vector<GLNode> nodes;
    int n_phi = 0;
};

inline QuadratureRule sphere_rule(int n_theta, int n_phi) {
    if (n_phi < 1) throw std::domain_error("sphere_rule: n_phi must be >= 1");
    return {n_theta, gauss_legendre_rule(n_theta), n_phi};
}

/// A harmonic to be evaluated on the grid.
struct HarmonicSpec {
    int l = 0;
    int m = 0;
    Method method = Method::Middle;
};

/// Inner product <f, g> = integral of conj(Y_f) Y_g over the sphere.
/// The rule must satisfy n_theta >= lmax+1 and n_phi >= 2 lmax + 2, where
/// lmax = max(f.l, g.l); otherwise the exactness contract would break and the
/// call refuses. Summation order is fixed for reproducibility.
inline std::complex<double> sphere_inner(const HarmonicSpec& f, const HarmonicSpec& g,
                                         const QuadratureRule& rule) {
    const int lmax = std::max(f.l, g.l);
    if (rule.n_theta < lmax + 1 || rule.n_phi < 2 * lmax + 2) {
        throw std::invalid_argument("sphere_inner: quadrature rule undersized for lmax");
    }
    const double dphi = 2.0 * std::numbers::pi / rule.n_phi;
    std::complex<double> total(0.0, 0.0);
    for (const auto& node : rule.nodes) {
        const double theta = std::acos(node.x);
        std::complex<double> ring(0.0, 0.0);
        for (int j = 0; j < rule.n_phi; ++j) {
            const double phi = dphi * j;
            ring += std::conj(ylm(f.l, f.m, theta, phi, f.method)) * ylm(g.l, g.m, theta, phi, g.method);
        }
        total += node.weight * dphi * ring;
    }
    return total;
}

/// Convenience overload using the minimal exact rule for the pair.
inline std::complex<double> sphere_inner(const HarmonicSpec& f, const HarmonicSpec& g, int lmax) {
    if (lmax < std::max(f.l, g.l)) throw std::invalid_argument("sphere_inner: lmax below the pair's degree");
    return sphere_inner(f, g, sphere_rule(lmax + 1, 2 * lmax + 2));
}

} // namespace angmom
