#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyclic/identities/chord_identity.hpp"

namespace cyclic {

// All identities are written in u_ij = s(l_ij) and rho = s(2r)/2, with
// vertices labeled 0..n-1 in cyclic order.

/// u_02 u_13 = u_01 u_23 + u_12 u_03.
inline ChordIdentity ptolemy_identity() {
    const auto u = [](std::size_t i, std::size_t j) { return ChordIdentity::chord(4, i, j); };
    return u(0, 2) * u(1, 3) - u(0, 1) * u(2, 3) - u(1, 2) * u(0, 3);
}

/// Cyclic hexagon with main diagonals e = u_25, f = u_14, g = u_03 and side
/// pairs (a, a') = (u_01, u_34), (b, b') = (u_23, u_50), (c, c') = (u_45, u_12):
/// efg = a a' e + b b' f + c c' g + a b c + a' b' c'.
///
/// Each side pair is opposite and its diagonal joins the two remaining
/// vertices. The pairing is the only one, up to the hexagon's symmetries,
/// that vanishes on convex cyclic hexagons.
inline ChordIdentity fuhrmann_identity() {
    const auto u = [](std::size_t i, std::size_t j) { return ChordIdentity::chord(6, i, j); };
    const auto a = u(0, 1), a2 = u(3, 4), e = u(2, 5);
    const auto b = u(2, 3), b2 = u(5, 0), f = u(1, 4);
    const auto c = u(4, 5), c2 = u(1, 2), g = u(0, 3);
    return e * f * g - (a * a2 * e + b * b2 * f + c * c2 * g + a * b * c + a2 * b2 * c2);
}

/// rho^2 A (A - 2a)(A - 2b)(A - 2c) - (abc)^2 with a = u_01, b = u_12,
/// c = u_02 and A = a + b + c.
inline ChordIdentity triangle_radius_identity() {
    const auto a = ChordIdentity::chord(3, 0, 1);
    const auto b = ChordIdentity::chord(3, 1, 2);
    const auto c = ChordIdentity::chord(3, 0, 2);
    const auto rho = ChordIdentity::rho(3);
    const auto A = a + b + c;
    const auto two = ChordIdentity::constant(3, 2);
    return rho.pow(2) * A * (A - two * a) * (A - two * b) * (A - two * c) - (a * b * c).pow(2);
}

/// rho^2 prod(A - 2x) - (ab + cd)(ac + bd)(ad + bc) over the sides
/// a = u_01, b = u_12, c = u_23, d = u_03.
inline ChordIdentity quad_radius_identity() {
    const auto u = [](std::size_t i, std::size_t j) { return ChordIdentity::chord(4, i, j); };
    const auto a = u(0, 1), b = u(1, 2), c = u(2, 3), d = u(0, 3);
    const auto rho = ChordIdentity::rho(4);
    const auto A = a + b + c + d;
    const auto two = ChordIdentity::constant(4, 2);
    return rho.pow(2) * (A - two * a) * (A - two * b) * (A - two * c) * (A - two * d) -
           (a * b + c * d) * (a * c + b * d) * (a * d + b * c);
}

/// Cleared diagonal formulas of a cyclic quadrilateral:
///   u_02^2 (ab + cd) - (ac + bd)(ad + bc)
///   u_13^2 (ad + bc) - (ac + bd)(ab + cd)
inline std::array<ChordIdentity, 2> quad_diagonal_identities() {
    const auto u = [](std::size_t i, std::size_t j) { return ChordIdentity::chord(4, i, j); };
    const auto a = u(0, 1), b = u(1, 2), c = u(2, 3), d = u(0, 3);
    const auto e = u(0, 2), f = u(1, 3);
    return {e.pow(2) * (a * b + c * d) - (a * c + b * d) * (a * d + b * c),
            f.pow(2) * (a * d + b * c) - (a * c + b * d) * (a * b + c * d)};
}

struct NamedIdentity {
    std::string name;
    ChordIdentity identity;
};

/// Every built-in polynomial identity, in a fixed order.
inline std::vector<NamedIdentity> builtin_identities() {
    const auto diagonals = quad_diagonal_identities();
    return {
        {"ptolemy", ptolemy_identity()},
        {"fuhrmann", fuhrmann_identity()},
        {"triangle-radius", triangle_radius_identity()},
        {"quad-radius", quad_radius_identity()},
        {"quad-diagonal-02", diagonals[0]},
        {"quad-diagonal-13", diagonals[1]},
    };
}

} // namespace cyclic
