#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "projective.hpp"
#include "rational.hpp"

namespace braidcov {

/// Deterministic sampling of small exact values. All randomized checks in the
/// workbench draw through this so a seed reproduces a run bit for bit; the
/// distribution mapping is spelled out by hand because the standard library's
/// distributions are not pinned across implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    long integer(long lo, long hi) {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long lo = -9, long hi = 9) { return Rational(integer(lo, hi)); }

    Rational nonzero_rational(long lo = -9, long hi = 9) {
        for (;;) {
            Rational r = rational(lo, hi);
            if (!r.is_zero()) return r;
        }
    }

    /// Point of P^1 with small integer coordinates, not both zero.
    ProjectivePoint p1() {
        for (;;) {
            long x = integer(-9, 9), y = integer(-9, 9);
            if (x != 0 || y != 0) return p1_point(x, y);
        }
    }

    std::vector<ProjectivePoint> p1_tuple(std::size_t n) {
        std::vector<ProjectivePoint> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(p1());
        return v;
    }

    /// Pairwise projectively distinct P^1 points.
    std::vector<ProjectivePoint> distinct_p1_tuple(std::size_t n) {
        std::vector<ProjectivePoint> v;
        v.reserve(n);
        while (v.size() < n) {
            ProjectivePoint p = p1();
            bool fresh = true;
            for (const auto& q : v)
                if (q == p) {
                    fresh = false;
                    break;
                }
            if (fresh) v.push_back(p);
        }
        return v;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace braidcov
