#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "cyclic/identities/evaluate.hpp"
#include "cyclic/identities/gregorac.hpp"
#include "cyclic/random.hpp"

namespace cyclic {

struct GeometryVerification {
    Geometry geometry = Geometry::Euclidean;
    std::size_t trials = 0;
    double max_rel_residual = 0.0;
    bool holds = true;
    std::optional<CyclicPolygon> first_counterexample;
    double counterexample_residual = 0.0;
};

struct VerificationReport {
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    std::vector<GeometryVerification> geometries;

    bool holds() const {
        return std::all_of(geometries.begin(), geometries.end(),
                           [](const auto& g) { return g.holds; });
    }

    /// True when the verdict is "fails" in every geometry.
    bool fails_everywhere() const {
        return std::none_of(geometries.begin(), geometries.end(),
                            [](const auto& g) { return g.holds; });
    }
};

struct VerifyOptions {
    Measure measure = Measure::ModelDistance;
    unsigned threads = 1;
};

/// Relative residual of one configuration; must be safe to call concurrently.
using ResidualFunction = std::function<double(const CyclicPolygon&)>;

/// Run `trials` random configurations with `vertices` vertices in each
/// geometry. Trial t of geometry g draws from SplitMix64::stream(seed, 3t + g),
/// so the report does not depend on the thread count.
inline VerificationReport verify_residuals(std::size_t vertices, std::size_t trials,
                                           std::uint64_t seed, double tol,
                                           const ResidualFunction& residual,
                                           unsigned threads = 1) {
    if (trials == 0) throw DomainError("verification needs at least one trial");
    VerificationReport report;
    report.tolerance = tol;
    report.seed = seed;
    for (std::size_t gi = 0; gi < all_geometries.size(); ++gi) {
        const Geometry g = all_geometries[gi];
        const auto draw = [&](std::size_t t) {
            auto rng = SplitMix64::stream(seed, 3 * t + gi);
            return random_polygon(g, vertices, rng);
        };

        std::vector<double> rel(trials);
        const auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t t = begin; t < end; ++t) rel[t] = residual(draw(t));
        };
        const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
        if (workers == 1) {
            work(0, trials);
        } else {
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> pool;
            const std::size_t chunk = (trials + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::size_t begin = std::min(trials, w * chunk);
                const std::size_t end = std::min(trials, begin + chunk);
                pool.emplace_back([&, w, begin, end] {
                    try {
                        work(begin, end);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (const auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
        }

        GeometryVerification result;
        result.geometry = g;
        result.trials = trials;
        for (std::size_t t = 0; t < trials; ++t) {
            // NaN residuals count as failures.
            if (!(rel[t] <= result.max_rel_residual)) result.max_rel_residual = rel[t];
            if (!(rel[t] <= tol) && result.holds) {
                result.holds = false;
                result.first_counterexample = draw(t);
                result.counterexample_residual = rel[t];
            }
        }
        report.geometries.push_back(std::move(result));
    }
    return report;
}

/// Numerical check that `f` vanishes on random cyclic polygons in all three
/// geometries. A polynomial identity holding in one geometry holds in all of
/// them, so a correct identity passes everywhere and a false one is expected
/// to fail everywhere.
inline VerificationReport cross_geometry_verify(const ChordIdentity& f, std::size_t trials,
                                                std::uint64_t seed, double tol,
                                                VerifyOptions options = {}) {
    const auto measure = options.measure;
    return verify_residuals(
        f.vertex_count(), trials, seed, tol,
        [&f, measure](const CyclicPolygon& p) { return evaluate(f, p, measure).relative(); },
        options.threads);
}

/// Same harness for the determinant identity on cyclic 2n-gons.
inline VerificationReport verify_gregorac(std::size_t half_count, std::size_t trials,
                                          std::uint64_t seed, double tol, VerifyOptions options = {}) {
    if (half_count < 4) throw ArityError("determinant identity needs n >= 4 (a 2n-gon with 2n >= 8)");
    const auto measure = options.measure;
    return verify_residuals(
        2 * half_count, trials, seed, tol,
        [measure](const CyclicPolygon& p) { return gregorac_determinant(p, measure).relative(); },
        options.threads);
}

} // namespace cyclic
