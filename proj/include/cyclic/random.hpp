#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "cyclic/polygon/cyclic_polygon.hpp"

namespace cyclic {

/// SplitMix64 (Steele, Lea & Flood 2014; reference code: Vigna,
/// https://prng.di.unimi.it/splitmix64.c). The state is a Weyl counter, so
/// every output is a pure function of (seed, position) and the stream is
/// identical on every platform.
///
/// Floating-point draws use the top 53 bits: (x >> 11) * 2^-53.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for (seed, id); used to give every trial of a
    /// harness its own generator.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t id) {
        return SplitMix64(mix(seed) ^ mix(id + 0x632be59bd9b4e019ULL));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Circumradius draw used by the harnesses: log-uniform in [0.1, 10] in the
/// plane and the disk, uniform in (0, pi/2] on the sphere.
inline double random_radius(Geometry g, SplitMix64& rng) {
    if (g == Geometry::Spherical) return (1.0 - rng.uniform()) * (0.5 * pi);
    return std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
}

/// Sorted uniform central angles; draws that collide are redrawn.
inline CyclicPolygon random_polygon(Geometry g, std::size_t n, double radius, SplitMix64& rng) {
    std::vector<double> angles(n);
    for (;;) {
        for (auto& a : angles) a = rng.uniform(0.0, two_pi);
        try {
            return CyclicPolygon::from_angles(g, radius, angles);
        } catch (const DuplicateAngle&) {
        }
    }
}

inline CyclicPolygon random_polygon(Geometry g, std::size_t n, SplitMix64& rng) {
    const double r = random_radius(g, rng);
    return random_polygon(g, n, r, rng);
}

} // namespace cyclic
