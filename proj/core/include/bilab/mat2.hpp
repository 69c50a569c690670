#pragma once

#include <utility>

#include "bilab/scalar.hpp"

namespace bilab {

/// 2x2 matrix over any field-like K (+, -, *, inverse(), is_zero()).
template <typename K>
struct Mat2T {
    K a, b;
    K c, d;

    static Mat2T identity(const K& one, const K& zero) { return {one, zero, zero, one}; }

    K det() const { return a * d - b * c; }

    friend Mat2T operator*(const Mat2T& m, const Mat2T& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }

    Mat2T inverse() const {
        K inv = det().inverse(); // throws when singular
        return {d * inv, (-b) * inv, (-c) * inv, a * inv};
    }

    Mat2T transpose() const { return {a, c, b, d}; }

    Mat2T scaled(const K& s) const { return {a * s, b * s, c * s, d * s}; }

    std::pair<K, K> apply(const K& x, const K& y) const { return {a * x + b * y, c * x + d * y}; }
};

using Mat2Q = Mat2T<GaussianRational>;
using Mat2C = Mat2T<NumericComplex>;

inline Mat2Q mat2q_identity() {
    return Mat2Q::identity(GaussianRational(1), GaussianRational(0));
}

inline bool operator==(const Mat2Q& m, const Mat2Q& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}
inline bool operator!=(const Mat2Q& m, const Mat2Q& n) { return !(m == n); }

inline Mat2C to_numeric(const Mat2Q& m, mpfr_prec_t prec) {
    return {m.a.to_numeric(prec), m.b.to_numeric(prec), m.c.to_numeric(prec), m.d.to_numeric(prec)};
}

} // namespace bilab
