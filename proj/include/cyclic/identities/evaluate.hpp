#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "cyclic/identities/chord_identity.hpp"
#include "cyclic/polygon/cyclic_polygon.hpp"

namespace cyclic {

/// How chord half-chords are obtained from a polygon.
enum class Measure {
    ChordLaw,       // s(l_ij) = s(2r) sin(t_ij / 2)
    ModelDistance,  // s of the metric distance between the embedded vertices
};

/// The variable assignment u_ij = s(l_ij), rho = s(2r)/2 for polygon `p`,
/// laid out in ChordIdentity variable order.
inline std::vector<double> chord_assignment(const CyclicPolygon& p, Measure measure = Measure::ChordLaw) {
    const std::size_t n = p.size();
    std::vector<double> values(ChordIdentity::variable_count(n));
    std::vector<ModelPoint> vertices;
    if (measure == Measure::ModelDistance) vertices = p.vertices();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double u = 0.0;
            if (measure == Measure::ChordLaw) {
                u = half_chord(chord_length(p, i, j), p.geometry());
            } else {
                u = half_chord(distance(vertices[i], vertices[j]), p.geometry());
            }
            values[ChordIdentity::pair_index(n, i, j)] = u;
        }
    }
    values[ChordIdentity::rho_index(n)] = 0.5 * p.rho_hat();
    return values;
}

struct Residual {
    double residual = 0.0;
    double scale = 0.0;

    /// residual / scale, defined as 0 when the scale vanishes.
    double relative() const { return scale == 0.0 ? 0.0 : residual / scale; }
};

inline Residual evaluate(const ChordIdentity& f, const CyclicPolygon& p,
                         Measure measure = Measure::ChordLaw) {
    if (f.vertex_count() != p.size()) {
        throw ArityError("identity has " + std::to_string(f.vertex_count()) +
                         " vertices but the polygon has " + std::to_string(p.size()));
    }
    const auto e = f.evaluate(chord_assignment(p, measure));
    return {std::abs(e.value), e.scale};
}

} // namespace cyclic
