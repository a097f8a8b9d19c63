#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cyclic/polygon.hpp"
#include "cyclic/random.hpp"

using namespace cyclic;

TEST(CyclicPolygon, FromAngles) {
    const std::vector<double> angles{4 * pi / 3, 0.0, 2 * pi / 3};
    const auto p = CyclicPolygon::from_angles(Geometry::Euclidean, 1.0, angles);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p.angles()[0], 0.0);
    EXPECT_LT(p.angles()[1], p.angles()[2]);
    EXPECT_TRUE(p.center_inside());
}

TEST(CyclicPolygon, NormalizesAngles) {
    const std::vector<double> angles{-pi / 2, 5 * pi, 0.25};
    const auto p = CyclicPolygon::from_angles(Geometry::Hyperbolic, 1.0, angles);
    EXPECT_NEAR(p.angles()[0], 0.25, 1e-15);
    EXPECT_NEAR(p.angles()[1], pi, 1e-14);
    EXPECT_NEAR(p.angles()[2], 1.5 * pi, 1e-15);
}

TEST(CyclicPolygon, Rejections) {
    const std::vector<double> two{0.0, pi};
    EXPECT_THROW(CyclicPolygon::from_angles(Geometry::Spherical, pi / 2, two), ArityError);
    const std::vector<double> dup{1.0, 1.0 + 1e-18, 2.0};
    EXPECT_THROW(CyclicPolygon::from_angles(Geometry::Hyperbolic, 1.0, dup), DuplicateAngle);
    const std::vector<double> wrap{0.0, two_pi, 1.0};
    EXPECT_THROW(CyclicPolygon::from_angles(Geometry::Euclidean, 1.0, wrap), DuplicateAngle);
    const std::vector<double> ok{0.0, 1.0, 2.0};
    EXPECT_THROW(CyclicPolygon::from_angles(Geometry::Spherical, 1.6, ok), DomainError);
    EXPECT_THROW(CyclicPolygon::from_angles(Geometry::Euclidean, 0.0, ok), DomainError);
}

TEST(ChordLength, Examples) {
    const std::vector<double> tri{0.0, 2 * pi / 3, 4 * pi / 3};
    const auto eq = CyclicPolygon::from_angles(Geometry::Euclidean, 1.0, tri);
    // 2 sin(pi/3) = sqrt(3), and the planar distance of the embedded vertices.
    EXPECT_NEAR(chord_length(eq, 0, 1), std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(distance(eq.vertex(0), eq.vertex(1)), std::sqrt(3.0), 1e-15);

    const std::vector<double> antipodal{0.0, 1.0, pi};
    const auto s = CyclicPolygon::from_angles(Geometry::Spherical, pi / 2, antipodal);
    EXPECT_DOUBLE_EQ(chord_length(s, 0, 2), pi);

    for (double r : {0.3, 1.0, 4.0}) {
        const auto h = CyclicPolygon::from_angles(Geometry::Hyperbolic, r, antipodal);
        EXPECT_NEAR(chord_length(h, 0, 2), 2 * r, 1e-14 * r);
    }
}

TEST(ChordLength, IndexErrors) {
    const std::vector<double> a{0.0, 1.0, 2.0};
    const auto p = CyclicPolygon::from_angles(Geometry::Euclidean, 1.0, a);
    EXPECT_THROW(chord_length(p, 0, 0), IndexError);
    EXPECT_THROW(chord_length(p, 0, 3), IndexError);
}

TEST(ChordLength, AgreesWithModelDistance) {
    SplitMix64 rng(31);
    for (auto g : all_geometries) {
        for (int k = 0; k < 300; ++k) {
            const auto p = random_polygon(g, 5, rng);
            const auto v = p.vertices();
            for (std::size_t i = 0; i < 5; ++i) {
                for (std::size_t j = i + 1; j < 5; ++j) {
                    const double d = distance(v[i], v[j]);
                    EXPECT_NEAR(chord_length(p, i, j), d, 1e-11 * std::max(1.0, d)) << name(g);
                }
            }
        }
    }
}

TEST(SideLengths, Examples) {
    const std::vector<double> tri{0.0, 2 * pi / 3, 4 * pi / 3};
    for (double l : side_lengths(CyclicPolygon::from_angles(Geometry::Euclidean, 1.0, tri))) {
        EXPECT_NEAR(l, std::sqrt(3.0), 1e-15);
    }
    const std::vector<double> square{0.0, pi / 2, pi, 3 * pi / 2};
    for (double l : side_lengths(CyclicPolygon::from_angles(Geometry::Euclidean, 1.0, square))) {
        EXPECT_NEAR(l, std::sqrt(2.0), 1e-15);
    }
    for (double l : side_lengths(CyclicPolygon::from_angles(Geometry::Spherical, pi / 2, square))) {
        EXPECT_NEAR(l, pi / 2, 1e-15);
    }
}

TEST(SideLengths, WrapsAround) {
    const std::vector<double> a{0.0, 0.5, 2.0, 4.0};
    const auto p = CyclicPolygon::from_angles(Geometry::Hyperbolic, 1.5, a);
    const auto sides = side_lengths(p);
    ASSERT_EQ(sides.size(), 4u);
    EXPECT_DOUBLE_EQ(sides[3], chord_length(p, 3, 0));
}

TEST(CyclicPolygon, CenterInside) {
    const std::vector<double> inside{0.0, 2.0, 4.0};
    EXPECT_TRUE(CyclicPolygon::from_angles(Geometry::Euclidean, 1.0, inside).center_inside());
    const std::vector<double> outside{0.0, 1.0, 2.0};
    EXPECT_FALSE(CyclicPolygon::from_angles(Geometry::Euclidean, 1.0, outside).center_inside());
}

TEST(Scaled, MatchesRadialScaleOfVertices) {
    SplitMix64 rng(37);
    for (auto g : all_geometries) {
        for (double x : {0.5, 2.0}) {
            auto p = random_polygon(g, 4, rng);
            if (g == Geometry::Spherical && x * p.rho_hat() > 1.0) continue;
            const auto q = scaled(p, x);
            EXPECT_NEAR(q.rho_hat(), x * p.rho_hat(), 1e-13 * q.rho_hat());
            for (std::size_t i = 0; i < p.size(); ++i) {
                const auto a = q.vertex(i);
                const auto b = radial_scale(p.vertex(i), x);
                EXPECT_NEAR(a.x(), b.x(), 1e-12);
                EXPECT_NEAR(a.y(), b.y(), 1e-12);
                EXPECT_NEAR(a.z(), b.z(), 1e-12);
            }
        }
    }
    const std::vector<double> a{0.0, 1.0, 2.0};
    EXPECT_THROW(scaled(CyclicPolygon::from_angles(Geometry::Spherical, 1.0, a), 2.0), DomainError);
}
