#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cyclic/core.hpp"

namespace cyclic {

/// A convex polygon inscribed in a circle about the canonical center,
/// described by its intrinsic circumradius and the sorted central angles of
/// its vertices.
class CyclicPolygon {
public:
    /// Normalizes angles to [0, 2pi) and sorts them. Throws ArityError for
    /// fewer than three vertices and DuplicateAngle when two angles coincide.
    static CyclicPolygon from_angles(Geometry g, double radius, std::span<const double> angles) {
        if (angles.size() < 3) {
            throw ArityError("a cyclic polygon needs at least 3 vertices");
        }
        check_radius(radius, g);
        std::vector<double> sorted;
        sorted.reserve(angles.size());
        for (double a : angles) {
            if (!std::isfinite(a)) throw DomainError("angles must be finite");
            sorted.push_back(normalize_angle(a));
        }
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw DuplicateAngle("two vertices share the same central angle");
        }
        return CyclicPolygon(g, radius, std::move(sorted));
    }

    Geometry geometry() const { return geometry_; }
    double radius() const { return radius_; }
    std::size_t size() const { return angles_.size(); }
    const std::vector<double>& angles() const { return angles_; }

    /// half_chord(2r, g): the chord-law factor shared by every chord.
    double rho_hat() const { return half_chord(2.0 * radius_, geometry_); }

    /// Central angle between vertices i and j on the minor arc, in [0, pi].
    double central_angle(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        const double d = std::abs(angles_[i] - angles_[j]);
        return std::min(d, two_pi - d);
    }

    ModelPoint vertex(std::size_t i) const {
        check_index(i);
        return circle_point(radius_, angles_[i], geometry_);
    }

    std::vector<ModelPoint> vertices() const {
        std::vector<ModelPoint> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.push_back(vertex(i));
        return out;
    }

    /// Whether the circle's center lies inside the polygon (or on a side):
    /// no arc between consecutive vertices exceeds a half turn.
    bool center_inside() const {
        const std::size_t n = size();
        for (std::size_t k = 0; k < n; ++k) {
            const double next = k + 1 < n ? angles_[k + 1] : angles_[0] + two_pi;
            if (next - angles_[k] > pi) return false;
        }
        return true;
    }

    friend bool operator==(const CyclicPolygon&, const CyclicPolygon&) = default;

private:
    CyclicPolygon(Geometry g, double r, std::vector<double> angles)
        : geometry_(g), radius_(r), angles_(std::move(angles)) {}

    void check_index(std::size_t i) const {
        if (i >= angles_.size()) {
            throw IndexError("vertex index " + std::to_string(i) + " out of range");
        }
    }

    Geometry geometry_;
    double radius_;
    std::vector<double> angles_;
};

/// Half-chord of the segment between vertices i and j, from the chord law
/// s(l) = s(2r) sin(t/2).
inline double chord_half_chord(const CyclicPolygon& p, std::size_t i, std::size_t j) {
    const double u = p.rho_hat() * std::sin(0.5 * p.central_angle(i, j));
    return p.geometry() == Geometry::Spherical ? std::min(u, 1.0) : u;
}

/// Length of the geodesic segment between vertices i and j.
inline double chord_length(const CyclicPolygon& p, std::size_t i, std::size_t j) {
    if (i == j) throw IndexError("chord_length: endpoints must differ");
    return half_chord_inverse(chord_half_chord(p, i, j), p.geometry());
}

/// Consecutive chords, side k joining vertex k to vertex k+1 (mod n).
inline std::vector<double> side_lengths(const CyclicPolygon& p) {
    const std::size_t n = p.size();
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = chord_length(p, k, (k + 1) % n);
    return out;
}

/// The polygon obtained by radially scaling every vertex about the center
/// with half-chord factor `factor` (see radial_scale). Angles are kept.
inline CyclicPolygon scaled(const CyclicPolygon& p, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw DomainError("scaled: factor must be finite and > 0");
    }
    const double target = factor * p.rho_hat();
    if (p.geometry() == Geometry::Spherical && target > 1.0) {
        throw DomainError("scaled: spherical radius would exceed pi/2");
    }
    const double r = 0.5 * half_chord_inverse(target, p.geometry());
    return CyclicPolygon::from_angles(p.geometry(), r, p.angles());
}

} // namespace cyclic
