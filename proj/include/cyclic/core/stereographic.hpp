#pragma once

#include <cmath>

#include "cyclic/core/model_point.hpp"

namespace cyclic {

/// Stereographic projection from the north pole (0, 0, 1) onto the plane z = 0.
///
/// Circles about the south pole of spherical radius r map to circles about
/// the origin of radius tan(r/2); central angles are preserved.
inline ModelPoint stereographic(const ModelPoint& p) {
    if (p.geometry() != Geometry::Spherical) {
        throw GeometryMismatch("stereographic: expected a point on the sphere");
    }
    const double rho2 = p.x() * p.x() + p.y() * p.y();
    if (p.z() <= 0.0) {
        const double k = 1.0 / (1.0 - p.z());
        return ModelPoint::euclidean(k * p.x(), k * p.y());
    }
    // Northern hemisphere: 1 - z = (x^2 + y^2) / (1 + z) avoids cancellation.
    if (rho2 == 0.0) {
        throw DomainError("stereographic: the north pole has no image");
    }
    const double k = (1.0 + p.z()) / rho2;
    return ModelPoint::euclidean(k * p.x(), k * p.y());
}

inline ModelPoint stereographic_inverse(const ModelPoint& q) {
    if (q.geometry() != Geometry::Euclidean) {
        throw GeometryMismatch("stereographic_inverse: expected a planar point");
    }
    const double rho2 = q.x() * q.x() + q.y() * q.y();
    const double d = 1.0 + rho2;
    return ModelPoint::spherical(2.0 * q.x() / d, 2.0 * q.y() / d, (rho2 - 1.0) / d);
}

} // namespace cyclic
