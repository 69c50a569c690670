#pragma once

#include <random>

#include "bilab/scalar.hpp"

// Small seeded generators for property-style checks. Deterministic by
// construction so failures reproduce.
namespace testgen {

/// mpq_class(n, d) does not reduce; arithmetic assumes reduced operands.
inline bilab::Rational frac(long n, long d) {
    bilab::Rational q(n, d);
    q.canonicalize();
    return q;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}

    long int_between(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng);
    }

    bilab::Rational rational(long max_abs = 20, long max_den = 12) {
        long num = int_between(-max_abs, max_abs);
        long den = int_between(1, max_den);
        bilab::Rational q(num, den);
        q.canonicalize();
        return q;
    }

    bilab::Rational nonzero_rational(long max_abs = 20, long max_den = 12) {
        for (;;) {
            auto q = rational(max_abs, max_den);
            if (q != 0) return q;
        }
    }

    bilab::GaussianRational gaussian(long max_abs = 20, long max_den = 12) {
        return {rational(max_abs, max_den), rational(max_abs, max_den)};
    }

    bilab::GaussianRational nonzero_gaussian(long max_abs = 20, long max_den = 12) {
        for (;;) {
            auto g = gaussian(max_abs, max_den);
            if (!g.is_zero()) return g;
        }
    }
};

} // namespace testgen
