#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "cyclic/core/geometry.hpp"

namespace cyclic {

namespace detail {

inline double positive_half_chord(double length, Geometry g) {
    if (!(length > 0.0)) throw DomainError("side lengths must be > 0");
    return half_chord(length, g);
}

// Circumradius from rho^2 = s(2r)^2 / 4.
inline double radius_from_rho_squared(double rho2, Geometry g) {
    double rho_hat = 2.0 * std::sqrt(rho2);
    if (g == Geometry::Spherical) {
        if (rho_hat > 1.0 + 1e-12) {
            throw SphericalInfeasible("sides need a circle with sin r > 1 on the unit sphere");
        }
        rho_hat = std::min(rho_hat, 1.0);
    }
    return 0.5 * half_chord_inverse(rho_hat, g);
}

inline double length_from_half_chord_squared(double u2, Geometry g) {
    double u = std::sqrt(u2);
    if (g == Geometry::Spherical) {
        if (u > 1.0 + 1e-12) throw SphericalInfeasible("diagonal half-chord exceeds 1");
        u = std::min(u, 1.0);
    }
    return half_chord_inverse(u, g);
}

} // namespace detail

/// Circumradius of a triangle from its sides:
/// s(2r)^2 / 4 = (s(a) s(b) s(c))^2 / (A (A - 2s(a)) (A - 2s(b)) (A - 2s(c))),
/// A = s(a) + s(b) + s(c).
inline double triangle_circumradius(double a, double b, double c, Geometry g) {
    const double sa = detail::positive_half_chord(a, g);
    const double sb = detail::positive_half_chord(b, g);
    const double sc = detail::positive_half_chord(c, g);
    const double A = sa + sb + sc;
    const double fa = A - 2.0 * sa;
    const double fb = A - 2.0 * sb;
    const double fc = A - 2.0 * sc;
    if (!(fa > 0.0 && fb > 0.0 && fc > 0.0)) {
        throw InfeasibleSides("degenerate triangle: half-chord triangle inequality fails");
    }
    const double prod = sa * sb * sc;
    return detail::radius_from_rho_squared(prod * prod / (A * fa * fb * fc), g);
}

/// Diagonals of a cyclic quadrilateral with sides a, b, c, d in order.
/// `first` joins the vertex between d and a to the vertex between b and c,
/// `second` the other pair; s(first) s(second) = s(a) s(c) + s(b) s(d).
struct QuadDiagonals {
    double first;
    double second;
};

inline QuadDiagonals quad_diagonals(double a, double b, double c, double d, Geometry g) {
    const double sa = detail::positive_half_chord(a, g);
    const double sb = detail::positive_half_chord(b, g);
    const double sc = detail::positive_half_chord(c, g);
    const double sd = detail::positive_half_chord(d, g);
    const double A = sa + sb + sc + sd;
    const double largest = std::max({sa, sb, sc, sd});
    if (!(A - 2.0 * largest > 0.0)) {
        throw InfeasibleSides("half-chord polygon inequality fails");
    }
    const double opposite = sa * sc + sb * sd;
    const double ab_cd = sa * sb + sc * sd;
    const double ad_bc = sa * sd + sb * sc;
    return {detail::length_from_half_chord_squared(opposite * ad_bc / ab_cd, g),
            detail::length_from_half_chord_squared(opposite * ab_cd / ad_bc, g)};
}

/// Circumradius of a cyclic quadrilateral:
/// s(2r)^2 / 4 = (ab + cd)(ac + bd)(ad + bc) / prod (A - 2x), over s-values.
inline double quad_circumradius(double a, double b, double c, double d, Geometry g) {
    const double sa = detail::positive_half_chord(a, g);
    const double sb = detail::positive_half_chord(b, g);
    const double sc = detail::positive_half_chord(c, g);
    const double sd = detail::positive_half_chord(d, g);
    const double A = sa + sb + sc + sd;
    const double fa = A - 2.0 * sa;
    const double fb = A - 2.0 * sb;
    const double fc = A - 2.0 * sc;
    const double fd = A - 2.0 * sd;
    if (!(fa > 0.0 && fb > 0.0 && fc > 0.0 && fd > 0.0)) {
        throw InfeasibleSides("half-chord polygon inequality fails");
    }
    const double num = (sa * sb + sc * sd) * (sa * sc + sb * sd) * (sa * sd + sb * sc);
    return detail::radius_from_rho_squared(num / (fa * fb * fc * fd), g);
}

} // namespace cyclic
