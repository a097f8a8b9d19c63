#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "cyclic/identities/evaluate.hpp"

namespace cyclic {

/// Row-major square matrix.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    DenseMatrix transposed() const {
        DenseMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Product of the Euclidean row norms; bounds |det| from above.
    double hadamard_bound() const {
        double bound = 1.0;
        for (std::size_t i = 0; i < n_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
            bound *= std::sqrt(s);
        }
        return bound;
    }

private:
    std::size_t n_;
    std::vector<double> a_;
};

/// Determinant by LU factorization with partial pivoting.
inline double determinant(DenseMatrix m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m(i, k)) > std::abs(m(pivot, k))) pivot = i;
        }
        if (m(pivot, k) == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

/// Matrix of a cyclic 2n-gon V_0..V_{2n-1} (n >= 4) whose determinant
/// vanishes: for 1 <= i, j <= n, the entry in row j and column i is
/// (-1)^[i == j] / (s(l_{2i-2, 2j-1}) s(l_{2j-1, 2i})), indices mod 2n.
inline DenseMatrix gregorac_matrix(const CyclicPolygon& p, Measure measure = Measure::ChordLaw) {
    const std::size_t vertices = p.size();
    if (vertices % 2 != 0 || vertices < 8) {
        throw ArityError("determinant identity needs an even vertex count of at least 8");
    }
    const std::size_t n = vertices / 2;
    const auto values = chord_assignment(p, measure);
    const auto u = [&](std::size_t a, std::size_t b) {
        return values[ChordIdentity::pair_index(vertices, a % vertices, b % vertices)];
    };
    DenseMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const double sign = i == j ? -1.0 : 1.0;
            m(j - 1, i - 1) = sign / (u(2 * i - 2, 2 * j - 1) * u(2 * j - 1, 2 * i));
        }
    }
    return m;
}

struct DeterminantResult {
    double det = 0.0;
    double scale = 0.0;  // Hadamard bound

    double relative() const { return scale == 0.0 ? 0.0 : std::abs(det) / scale; }
};

inline DeterminantResult gregorac_determinant(const CyclicPolygon& p,
                                              Measure measure = Measure::ChordLaw) {
    const auto m = gregorac_matrix(p, measure);
    return {determinant(m), m.hadamard_bound()};
}

} // namespace cyclic
