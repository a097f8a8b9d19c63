#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cyclic/polygon/cyclic_polygon.hpp"

namespace cyclic {

inline constexpr double default_solver_tolerance = 1e-13;
inline constexpr int max_bisection_iterations = 200;

/// Root of the central-angle equation in half-chord space. Nothing here
/// depends on the geometry.
struct HalfChordRoot {
    double rho_hat = 0.0;       // s(2r)
    bool center_inside = true;  // branch that produced the root
    int iterations = 0;         // bisection steps
    double residual = 0.0;      // |angle equation| at rho_hat, radians
};

struct SolveReport {
    double radius = 0.0;
    double rho = 0.0;  // s(2r)
    bool center_inside = true;
    int iterations = 0;
    double residual = 0.0;
    bool feasible = false;
};

/// Residual bound for a converged bisection. The angle equation is steep
/// near rho_hat = max u (the derivative of asin is unbounded at 1), so a
/// bracket of relative width `tol` can leave an angle residual well above
/// `tol` itself; sqrt(tol) bounds it for every bracket the solver accepts.
inline double residual_tolerance(double tol) {
    return std::sqrt(tol);
}

namespace detail {

// Sum of central angles 2 asin(u_i / rho), minus a full turn. Strictly
// decreasing in rho on [max u, inf).
inline double inside_objective(std::span<const double> u, double rho) {
    double sum = 0.0;
    for (double v : u) sum += 2.0 * std::asin(std::min(1.0, v / rho));
    return sum - two_pi;
}

// Sum of the minor arcs of every side except the largest, minus the arc of
// the largest side. Zero when the largest side subtends the major arc.
inline double outside_objective(std::span<const double> u, std::size_t largest, double rho) {
    double sum = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (k != largest) sum += 2.0 * std::asin(std::min(1.0, u[k] / rho));
    }
    return sum - 2.0 * std::asin(std::min(1.0, u[largest] / rho));
}

template <class Objective>
HalfChordRoot bisect(Objective&& f, double lo, double hi, double f_lo, double f_hi, double tol,
                     bool decreasing) {
    // Slack for the sampled monotonicity check; values closer than this are
    // indistinguishable from rounding noise.
    constexpr double slack = 64.0 * std::numeric_limits<double>::epsilon() * two_pi;
    int iterations = 0;
    while (hi - lo > tol * (0.5 * (lo + hi))) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (iterations == max_bisection_iterations) {
            throw NotConverged("circumradius bisection did not converge in " +
                               std::to_string(max_bisection_iterations) + " iterations");
        }
        ++iterations;
        const double f_mid = f(mid);
        if (decreasing && (f_mid > f_lo + slack || f_mid < f_hi - slack)) {
            throw NotConverged("angle objective is not monotone on the bracket");
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    // One secant step inside the final bracket; kept only if it improves on
    // the midpoint.
    double root = 0.5 * (lo + hi);
    double residual = std::abs(f(root));
    if (f_lo != f_hi) {
        const double t = std::clamp(f_lo / (f_lo - f_hi), 0.0, 1.0);
        const double secant = lo + t * (hi - lo);
        const double r = std::abs(f(secant));
        if (r < residual) {
            root = secant;
            residual = r;
        }
    }
    return {root, true, iterations, residual};
}

} // namespace detail

/// Solve for rho_hat = s(2r) given the half-chords u_i = s(l_i) of the sides
/// of a convex cyclic polygon, in the given cyclic order.
///
/// Branch A (center inside): sum 2 asin(u_i / rho) = 2 pi.
/// Branch B (center outside): the largest side subtends the major arc, so
/// its minor arc equals the sum of all the others.
inline HalfChordRoot solve_half_chords(std::span<const double> u,
                                       double tol = default_solver_tolerance) {
    if (u.size() < 3) throw ArityError("need at least 3 sides");
    if (!(tol > 0.0)) throw DomainError("solver tolerance must be > 0");
    for (double v : u) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError("side half-chords must be finite and > 0");
        }
    }
    const auto largest =
        static_cast<std::size_t>(std::max_element(u.begin(), u.end()) - u.begin());
    const double u_max = u[largest];
    const double total = std::accumulate(u.begin(), u.end(), 0.0);
    if (u_max >= total - u_max) {
        throw InfeasibleSides("half-chord polygon inequality fails: largest side is too long");
    }

    // A side that is exactly a diameter (right triangle and friends) sits on
    // the boundary between the branches; report it as center inside.
    constexpr double tie = 1e-13;
    const double at_max = detail::inside_objective(u, u_max);
    if (at_max >= -tie && at_max <= 0.0) {
        return {u_max, true, 0, std::abs(at_max)};
    }

    double hi = 10.0 * total;
    if (at_max > 0.0) {
        auto f = [&](double rho) { return detail::inside_objective(u, rho); };
        double f_hi = f(hi);
        for (int k = 0; f_hi > 0.0; ++k) {
            if (k == 64) throw NotConverged("no upper bracket for the center-inside branch");
            hi *= 2.0;
            f_hi = f(hi);
        }
        auto root = detail::bisect(f, u_max, hi, at_max, f_hi, tol, true);
        root.center_inside = true;
        return root;
    }

    auto g = [&](double rho) { return detail::outside_objective(u, largest, rho); };
    const double g_lo = g(u_max);
    double g_hi = g(hi);
    for (int k = 0; g_hi <= 0.0; ++k) {
        if (k == 900) throw NotConverged("no upper bracket for the center-outside branch");
        hi *= 2.0;
        g_hi = g(hi);
    }
    auto root = detail::bisect(g, u_max, hi, g_lo, g_hi, tol, false);
    root.center_inside = false;
    return root;
}

inline std::vector<double> half_chords(std::span<const double> sides, Geometry g) {
    std::vector<double> u;
    u.reserve(sides.size());
    for (double l : sides) u.push_back(half_chord(l, g));
    return u;
}

namespace detail {

inline void check_sides(std::span<const double> sides, Geometry g) {
    if (sides.size() < 3) throw ArityError("need at least 3 sides");
    double perimeter = 0.0;
    for (double l : sides) {
        if (!(l > 0.0) || !std::isfinite(l)) {
            throw DomainError("side lengths must be finite and > 0");
        }
        if (g == Geometry::Spherical && l > pi) {
            throw DomainError("spherical side length exceeds pi");
        }
        perimeter += l;
    }
    // A polygon inscribed in a circle of radius <= pi/2 lies in a closed
    // hemisphere; the great-circle case reaches 2 pi exactly.
    if (g == Geometry::Spherical && perimeter > two_pi * (1.0 + 1e-12)) {
        throw DomainError("spherical perimeter exceeds 2 pi");
    }
}

} // namespace detail

/// Circumradius of the convex cyclic polygon with the given sides.
inline SolveReport circumradius_from_sides(Geometry g, std::span<const double> sides,
                                           double tol = default_solver_tolerance) {
    detail::check_sides(sides, g);
    const auto u = half_chords(sides, g);
    const auto root = solve_half_chords(u, tol);
    double rho = root.rho_hat;
    if (g == Geometry::Spherical) {
        if (rho > 1.0 + 1e-12) {
            throw SphericalInfeasible("sides need a circle with sin r > 1 on the unit sphere");
        }
        rho = std::min(rho, 1.0);
    }
    SolveReport report;
    report.rho = rho;
    report.radius = 0.5 * half_chord_inverse(rho, g);
    report.center_inside = root.center_inside;
    report.iterations = root.iterations;
    report.residual = root.residual;
    report.feasible = report.radius > 0.0 && root.residual <= residual_tolerance(tol);
    return report;
}

/// Reconstruct the polygon with the given sides: vertex 0 at angle 0, vertex
/// k+1 one side-arc further counterclockwise.
inline CyclicPolygon polygon_from_sides(Geometry g, std::span<const double> sides,
                                        double tol = default_solver_tolerance) {
    const auto report = circumradius_from_sides(g, sides, tol);
    const auto u = half_chords(sides, g);
    const auto largest =
        static_cast<std::size_t>(std::max_element(u.begin(), u.end()) - u.begin());
    std::vector<double> angles(sides.size());
    double theta = 0.0;
    for (std::size_t k = 0; k < sides.size(); ++k) {
        angles[k] = theta;
        double arc = 2.0 * std::asin(std::min(1.0, u[k] / report.rho));
        if (!report.center_inside && k == largest) arc = two_pi - arc;
        theta += arc;
    }
    return CyclicPolygon::from_angles(g, report.radius, angles);
}

/// Length of the diagonal between vertices i and j of the polygon with the
/// given sides; i and j must not be adjacent.
inline double diagonal_from_sides(Geometry g, std::span<const double> sides, std::size_t i,
                                  std::size_t j, double tol = default_solver_tolerance) {
    const std::size_t n = sides.size();
    if (i >= n || j >= n) throw IndexError("diagonal endpoint out of range");
    const std::size_t gap = i > j ? i - j : j - i;
    if (std::min(gap, n - gap) < 2) {
        throw IndexError("diagonal endpoints must be at least two vertices apart");
    }
    return chord_length(polygon_from_sides(g, sides, tol), i, j);
}

} // namespace cyclic
