#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "cyclic/error.hpp"

namespace cyclic {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// The three classical geometries of constant curvature 0, -1 and +1.
enum class Geometry { Euclidean, Hyperbolic, Spherical };

inline constexpr std::array<Geometry, 3> all_geometries{
    Geometry::Euclidean, Geometry::Hyperbolic, Geometry::Spherical};

inline constexpr std::string_view name(Geometry g) {
    switch (g) {
    case Geometry::Euclidean: return "euclidean";
    case Geometry::Hyperbolic: return "hyperbolic";
    case Geometry::Spherical: return "spherical";
    }
    return "unknown";
}

inline std::optional<Geometry> parse_geometry(std::string_view text) {
    for (auto g : all_geometries) {
        if (name(g) == text) return g;
    }
    return std::nullopt;
}

/// Half-chord function: x/2, sinh(x/2) or sin(x/2).
///
/// A chord of length l on a circle of radius r subtending central angle t
/// satisfies half_chord(l) = half_chord(2r) * sin(t/2) in every geometry.
inline double half_chord(double length, Geometry g) {
    if (!(length >= 0.0) || !std::isfinite(length)) {
        throw DomainError("half_chord: length must be a finite value >= 0");
    }
    switch (g) {
    case Geometry::Euclidean: return 0.5 * length;
    case Geometry::Hyperbolic: return std::sinh(0.5 * length);
    case Geometry::Spherical:
        if (length > pi) throw DomainError("half_chord: spherical length exceeds pi");
        return std::sin(0.5 * length);
    }
    return 0.0;
}

/// Inverse of half_chord. The spherical branch returns the principal value
/// in [0, pi].
inline double half_chord_inverse(double u, Geometry g) {
    if (!(u >= 0.0) || !std::isfinite(u)) {
        throw DomainError("half_chord_inverse: value must be a finite value >= 0");
    }
    switch (g) {
    case Geometry::Euclidean: return 2.0 * u;
    case Geometry::Hyperbolic: return 2.0 * std::asinh(u);
    case Geometry::Spherical:
        if (u > 1.0) throw DomainError("half_chord_inverse: spherical value exceeds 1");
        return 2.0 * std::asin(u);
    }
    return 0.0;
}

/// Largest admissible intrinsic circumradius (infinite except on the sphere,
/// where circles are canonicalized to radius <= pi/2).
inline double max_radius(Geometry g) {
    return g == Geometry::Spherical ? 0.5 * pi : HUGE_VAL;
}

inline void check_radius(double r, Geometry g) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("radius must be finite and > 0");
    }
    if (r > max_radius(g)) {
        throw DomainError("spherical radius exceeds pi/2");
    }
}

/// Map an angle to [0, 2pi).
inline double normalize_angle(double theta) {
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;
    return t;
}

} // namespace cyclic
