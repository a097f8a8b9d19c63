#pragma once

#include <algorithm>
#include <cmath>

#include "cyclic/core/geometry.hpp"

namespace cyclic {

/// A point in the model of a geometry: the plane, the open Poincare disk, or
/// the unit sphere in R^3. Planar models leave z at 0.
///
/// Construct through the named factories, which enforce the model invariants.
///
/// Disk points also carry 1 - |p|^2. Near the boundary that quantity cannot
/// be recovered from the rounded coordinates, so constructions that know the
/// intrinsic radius supply it directly.
class ModelPoint {
public:
    static ModelPoint euclidean(double x, double y) {
        check_finite(x, y, 0.0);
        return ModelPoint(Geometry::Euclidean, x, y, 0.0);
    }

    static ModelPoint hyperbolic(double x, double y) {
        check_finite(x, y, 0.0);
        if (!(x * x + y * y < 1.0)) {
            throw DomainError("hyperbolic point must lie in the open unit disk");
        }
        return ModelPoint(Geometry::Hyperbolic, x, y, 0.0, std::fma(-x, x, std::fma(-y, y, 1.0)));
    }

    /// Disk point with a known value of 1 - x^2 - y^2.
    static ModelPoint hyperbolic(double x, double y, double disk_gap) {
        auto p = hyperbolic(x, y);
        if (!(disk_gap > 0.0) || std::abs(disk_gap - p.gap_) > 1e-12) {
            throw DomainError("hyperbolic point: disk gap disagrees with the coordinates");
        }
        p.gap_ = disk_gap;
        return p;
    }

    static ModelPoint spherical(double x, double y, double z) {
        check_finite(x, y, z);
        if (std::abs(x * x + y * y + z * z - 1.0) > 1e-12) {
            throw DomainError("spherical point must lie on the unit sphere");
        }
        return ModelPoint(Geometry::Spherical, x, y, z);
    }

    Geometry geometry() const { return geometry_; }
    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }
    /// 1 - x^2 - y^2 for disk points, 0 otherwise.
    double disk_gap() const { return gap_; }

    friend bool operator==(const ModelPoint& a, const ModelPoint& b) {
        return a.geometry_ == b.geometry_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
    }

private:
    ModelPoint(Geometry g, double x, double y, double z, double gap = 0.0)
        : geometry_(g), x_(x), y_(y), z_(z), gap_(gap) {}

    static void check_finite(double x, double y, double z) {
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
            throw DomainError("model point coordinates must be finite");
        }
    }

    Geometry geometry_;
    double x_;
    double y_;
    double z_;
    double gap_;
};

/// Intrinsic distance between two points of the same model.
///
/// The disk metric has curvature -1; it is evaluated as
/// 2 asinh(|p - q| / sqrt((1 - |p|^2)(1 - |q|^2))), which equals
/// 2 artanh(|p - q| / |1 - conj(p) q|) but keeps full precision close to the
/// boundary circle. Great-circle distances use atan2(|p x q|, p . q).
inline double distance(const ModelPoint& p, const ModelPoint& q) {
    if (p.geometry() != q.geometry()) {
        throw GeometryMismatch("distance: points belong to different geometries");
    }
    switch (p.geometry()) {
    case Geometry::Euclidean:
        return std::hypot(p.x() - q.x(), p.y() - q.y());
    case Geometry::Hyperbolic: {
        const double chord = std::hypot(p.x() - q.x(), p.y() - q.y());
        const double denom = std::sqrt(p.disk_gap() * q.disk_gap());
        return 2.0 * std::asinh(chord / denom);
    }
    case Geometry::Spherical: {
        const double cx = p.y() * q.z() - p.z() * q.y();
        const double cy = p.z() * q.x() - p.x() * q.z();
        const double cz = p.x() * q.y() - p.y() * q.x();
        const double dot = p.x() * q.x() + p.y() * q.y() + p.z() * q.z();
        return std::atan2(std::hypot(cx, cy, cz), dot);
    }
    }
    return 0.0;
}

/// Canonical circle center: the origin, or the south pole on the sphere.
inline ModelPoint canonical_center(Geometry g) {
    switch (g) {
    case Geometry::Euclidean: return ModelPoint::euclidean(0.0, 0.0);
    case Geometry::Hyperbolic: return ModelPoint::hyperbolic(0.0, 0.0);
    case Geometry::Spherical: return ModelPoint::spherical(0.0, 0.0, -1.0);
    }
    return ModelPoint::euclidean(0.0, 0.0);
}

/// Point at central angle `theta` on the circle of intrinsic radius `r`
/// about the canonical center.
inline ModelPoint circle_point(double r, double theta, Geometry g) {
    check_radius(r, g);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    switch (g) {
    case Geometry::Euclidean: return ModelPoint::euclidean(r * c, r * s);
    case Geometry::Hyperbolic: {
        const double rho = std::tanh(0.5 * r);
        const double sech = 1.0 / std::cosh(0.5 * r);
        return ModelPoint::hyperbolic(rho * c, rho * s, sech * sech);
    }
    case Geometry::Spherical: {
        const double sr = std::sin(r);
        return ModelPoint::spherical(sr * c, sr * s, -std::cos(r));
    }
    }
    return canonical_center(g);
}

/// Move `p` along the ray from the canonical center so that the half-chord
/// of twice its radius is multiplied by `factor`:
/// r' = x r, sinh r' = x sinh r, or sin r' = x sin r respectively.
/// The central angle is unchanged.
inline ModelPoint radial_scale(const ModelPoint& p, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw DomainError("radial_scale: factor must be finite and > 0");
    }
    switch (p.geometry()) {
    case Geometry::Euclidean:
        return ModelPoint::euclidean(factor * p.x(), factor * p.y());
    case Geometry::Hyperbolic: {
        const double t = std::hypot(p.x(), p.y());
        if (t == 0.0) return p;
        const double sinh_r = 2.0 * t / p.disk_gap();
        const double sinh_scaled = factor * sinh_r;
        // tanh(r'/2) = sinh r' / (1 + cosh r') and 1 - tanh^2(r'/2) = 2 / (1 + cosh r').
        const double cosh_scaled = std::sqrt(1.0 + sinh_scaled * sinh_scaled);
        const double k = sinh_scaled / (1.0 + cosh_scaled) / t;
        return ModelPoint::hyperbolic(k * p.x(), k * p.y(), 2.0 / (1.0 + cosh_scaled));
    }
    case Geometry::Spherical: {
        if (p.z() > 1e-12) {
            throw DomainError("radial_scale: spherical point lies beyond radius pi/2 of the south pole");
        }
        const double sin_r = std::hypot(p.x(), p.y());
        double sin_scaled = factor * sin_r;
        if (sin_scaled > 1.0 + 1e-14) {
            throw DomainError("radial_scale: scaled spherical radius would exceed pi/2");
        }
        sin_scaled = std::min(sin_scaled, 1.0);
        const double cos_scaled = std::sqrt((1.0 - sin_scaled) * (1.0 + sin_scaled));
        return ModelPoint::spherical(factor * p.x(), factor * p.y(), -cos_scaled);
    }
    }
    return p;
}

} // namespace cyclic
