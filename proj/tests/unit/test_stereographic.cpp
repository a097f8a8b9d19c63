#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cyclic/core.hpp"

using namespace cyclic;

TEST(Stereographic, Examples) {
    const auto o = stereographic(ModelPoint::spherical(0, 0, -1));
    EXPECT_EQ(o.x(), 0.0);
    EXPECT_EQ(o.y(), 0.0);

    const auto e = stereographic(ModelPoint::spherical(1, 0, 0));
    EXPECT_DOUBLE_EQ(e.x(), 1.0);
    EXPECT_DOUBLE_EQ(e.y(), 0.0);

    // x / (1 - z) = sin(pi/3) / (1 + cos(pi/3)) = tan(pi/6) = 1/sqrt(3).
    const auto c = stereographic(ModelPoint::spherical(std::sin(pi / 3), 0, -std::cos(pi / 3)));
    EXPECT_NEAR(c.x(), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(c.x(), 0.5773502692, 1e-10);
}

TEST(Stereographic, InverseExamples) {
    const auto s = stereographic_inverse(ModelPoint::euclidean(0, 0));
    EXPECT_EQ(s.z(), -1.0);
    const auto e = stereographic_inverse(ModelPoint::euclidean(1, 0));
    EXPECT_DOUBLE_EQ(e.x(), 1.0);
    EXPECT_DOUBLE_EQ(e.z(), 0.0);
    // The line through (0, 0, 1) and (2, 0, 0) meets the sphere again at
    // (4/5, 0, 3/5).
    const auto p = stereographic_inverse(ModelPoint::euclidean(2, 0));
    EXPECT_NEAR(p.x(), 0.8, 1e-15);
    EXPECT_NEAR(p.y(), 0.0, 1e-15);
    EXPECT_NEAR(p.z(), 0.6, 1e-15);
    const auto back = stereographic(p);
    EXPECT_NEAR(back.x(), 2.0, 1e-15);
}

TEST(Stereographic, Errors) {
    EXPECT_THROW(stereographic(ModelPoint::spherical(0, 0, 1)), DomainError);
    EXPECT_THROW(stereographic(ModelPoint::euclidean(0, 0)), GeometryMismatch);
    EXPECT_THROW(stereographic_inverse(ModelPoint::spherical(0, 0, 1)), GeometryMismatch);
}

TEST(Stereographic, RoundTrips) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const double rho = 20 * unit(rng);
        const double t = two_pi * unit(rng);
        const auto q = ModelPoint::euclidean(rho * std::cos(t), rho * std::sin(t));
        const auto back = stereographic(stereographic_inverse(q));
        EXPECT_NEAR(back.x(), q.x(), 1e-12 * std::max(1.0, rho));
        EXPECT_NEAR(back.y(), q.y(), 1e-12 * std::max(1.0, rho));
    }
    std::normal_distribution<double> n;
    for (int k = 0; k < 1000; ++k) {
        double x = n(rng), y = n(rng), z = n(rng);
        const double len = std::sqrt(x * x + y * y + z * z);
        const auto p = ModelPoint::spherical(x / len, y / len, z / len);
        if (p.z() > 0.999) continue;
        const auto back = stereographic_inverse(stereographic(p));
        EXPECT_NEAR(back.x(), p.x(), 1e-12);
        EXPECT_NEAR(back.y(), p.y(), 1e-12);
        EXPECT_NEAR(back.z(), p.z(), 1e-12);
    }
}

TEST(Stereographic, CanonicalCircleAndCentralAngles) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        const double rs = (1 - unit(rng)) * pi / 2;
        const double t1 = two_pi * unit(rng), t2 = two_pi * unit(rng);
        const auto p1 = circle_point(rs, t1, Geometry::Spherical);
        const auto p2 = circle_point(rs, t2, Geometry::Spherical);
        const auto q1 = stereographic(p1);
        const auto q2 = stereographic(p2);
        EXPECT_NEAR(std::hypot(q1.x(), q1.y()), std::tan(rs / 2), 1e-12);
        // Angle at the south pole between the great circles to p1 and p2:
        // the tangent directions there are (x, y, 0).
        const double at_pole = std::atan2(std::abs(p1.x() * p2.y() - p1.y() * p2.x()),
                                          p1.x() * p2.x() + p1.y() * p2.y());
        const double at_origin = std::atan2(std::abs(q1.x() * q2.y() - q1.y() * q2.x()),
                                            q1.x() * q2.x() + q1.y() * q2.y());
        EXPECT_NEAR(at_pole, at_origin, 1e-12);
    }
}
