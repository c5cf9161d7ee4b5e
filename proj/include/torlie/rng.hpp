#pragma once

#include "torlie/lattice.hpp"
#include "torlie/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace torlie {

/// SplitMix64 (Steele/Lea/Vigna): a tiny 64-bit generator with a
/// one-word state. Streams are derived by hashing a suite name into the
/// seed, so suites draw independently and parallel runs reproduce serial
/// results.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    /// Uniform integer in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Independent stream for a named suite.
    static SplitMix64 stream(std::uint64_t seed, std::string_view suite) {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (char ch : suite) {
            h ^= static_cast<unsigned char>(ch);
            h *= 0x100000001b3ULL;
        }
        return SplitMix64(seed ^ h);
    }

  private:
    std::uint64_t state_;
};

/// Samplers for property suites: exponents are drawn from the box
/// [-box, box]^d, coefficients are small integers or modest fractions.
struct Sampler {
    SplitMix64 rng;
    std::size_t d;
    std::int64_t box;

    Sampler(SplitMix64 r, std::size_t dim, std::int64_t box_radius)
        : rng(r), d(dim), box(box_radius) {}

    LatticeVector lattice() {
        LatticeVector m(d);
        for (std::size_t i = 0; i < d; ++i) m[i] = rng.range(-box, box);
        return m;
    }

    LatticeVector lattice_nonzero() {
        for (;;) {
            LatticeVector m = lattice();
            if (!m.is_zero()) return m;
        }
    }

    Rational coeff() {
        // small integers with the occasional denominator
        std::int64_t n = rng.range(-4, 4);
        std::int64_t den = rng.below(4) == 0 ? rng.range(2, 5) : 1;
        return Rational(BigInt(n), BigInt(den));
    }

    Rational coeff_nonzero() {
        for (;;) {
            Rational c = coeff();
            if (!c.is_zero()) return c;
        }
    }

    RationalVector rational_vector() {
        RationalVector u(d);
        for (std::size_t i = 0; i < d; ++i) u[i] = coeff();
        return u;
    }

    RationalVector rational_vector_nonzero() {
        for (;;) {
            RationalVector u = rational_vector();
            if (!u.is_zero()) return u;
        }
    }
};

}  // namespace torlie
