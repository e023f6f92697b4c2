#pragma once

#include <stdexcept>

#include "qch/linalg.hpp"

namespace qch::ambient {

/// Pointwise model of the 2n-dimensional Kahler ambient tangent space.
///
/// Coordinates are adapted to a Lagrangian subspace: the tangent plane is the
/// span of the first n coordinates, the complex structure maps coordinate i
/// to n+i and n+i to -i, and the metric is the standard inner product. The
/// distinguished unit direction xi and the coefficients (a, b, c) of the
/// curvature law complete the data.
struct AmbientPoint {
    int n = 0;
    double a = 0.0, b = 0.0, c = 0.0;
    Vec xi; // length 2n, unit

    void validate() const {
        if (n < 2)
            throw std::invalid_argument("AmbientPoint: n must be >= 2");
        if (static_cast<int>(xi.size()) != 2 * n)
            throw std::invalid_argument("AmbientPoint: xi must have length 2n");
        if (std::abs(norm(xi) - 1.0) > 1e-12)
            throw std::invalid_argument("AmbientPoint: xi must be a unit vector");
    }

    /// Tangential part of the 1-form dual to xi (first n coordinates).
    Vec eta_tangent() const { return Vec(xi.begin(), xi.begin() + n); }

    /// Tangential part of the 1-form dual to J xi; equals minus the normal
    /// half of xi in these coordinates.
    Vec eta_tilde_tangent() const {
        Vec v(xi.begin() + n, xi.end());
        for (double& x : v)
            x = -x;
        return v;
    }
};

/// J(u, w) = (-w, u).
Vec apply_complex_structure(const Vec& v);

/// Embeds a tangent n-vector as (x, 0) in R^{2n}.
Vec embed_tangent(const Vec& x);

double eta(const AmbientPoint& p, const Vec& v);
double eta_tilde(const AmbientPoint& p, const Vec& v);

double pi_tensor(const AmbientPoint& p, const Vec& x, const Vec& y, const Vec& z, const Vec& u);
double phi_tensor(const AmbientPoint& p, const Vec& x, const Vec& y, const Vec& z, const Vec& u);
double psi_tensor(const AmbientPoint& p, const Vec& x, const Vec& y, const Vec& z, const Vec& u);

/// Curvature a*pi + b*Phi + c*Psi.
double qch_curvature(const AmbientPoint& p, const Vec& x, const Vec& y, const Vec& z,
                     const Vec& u);

struct HolomorphicSection {
    double curvature; // R(X, JX, JX, X)
    double cos2phi;   // eta(X)^2 + eta_tilde(X)^2
};

/// For fixed (a, b, c, xi) the curvature is a function of the angle alone:
/// a + b cos^2(phi) + c cos^4(phi).
HolomorphicSection holomorphic_sectional_angle(const AmbientPoint& p, const Vec& x);

} // namespace qch::ambient
