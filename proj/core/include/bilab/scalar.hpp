#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>

#include "bilab/bigfloat.hpp"
#include "bilab/errors.hpp"

namespace bilab {

using Rational = mpq_class;

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
    Rational norm2() const { return re * re + im * im; }

    GaussianRational inverse() const;
    GaussianRational pow(long e) const;

    NumericComplex to_numeric(mpfr_prec_t prec) const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Lexicographic (re, im) order; a total order used for canonical maps,
    /// not compatible with the field structure.
    friend bool lex_less(const GaussianRational& a, const GaussianRational& b) {
        int c = mpq_cmp(a.re.get_mpq_t(), b.re.get_mpq_t());
        if (c != 0) return c < 0;
        return mpq_cmp(a.im.get_mpq_t(), b.im.get_mpq_t()) < 0;
    }

    std::string str() const;
};

struct GaussianLess {
    bool operator()(const GaussianRational& a, const GaussianRational& b) const {
        return lex_less(a, b);
    }
};

/// Parse the exact scalar grammar: "a/b", "a/b+c/d*i", "-i", "3+2i", "1/2-3/4i".
GaussianRational parse_gaussian(const std::string& text);

enum class Mode { Exact, Numeric };

/// A scalar is either an exact Gaussian rational or a complex big-float.
/// Arithmetic never silently crosses modes; mixing throws ModeMismatch.
class Scalar {
public:
    Scalar() : v_(GaussianRational{}) {}
    Scalar(GaussianRational g) : v_(std::move(g)) {}
    Scalar(NumericComplex n) : v_(std::move(n)) {}
    Scalar(long n) : v_(GaussianRational(n)) {}

    Mode mode() const { return std::holds_alternative<GaussianRational>(v_) ? Mode::Exact : Mode::Numeric; }
    bool is_exact() const { return mode() == Mode::Exact; }

    const GaussianRational& exact() const;
    const NumericComplex& numeric() const;

    /// Exact scalars convert on demand; numeric scalars keep their precision.
    NumericComplex to_numeric(mpfr_prec_t prec) const;

    bool is_zero() const;
    Scalar conj() const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    /// Equality respecting mode: exact pairs compare exactly (tol ignored),
    /// numeric pairs require a tolerance, mixed modes throw.
    static bool eq(const Scalar& a, const Scalar& b, const std::optional<BigFloat>& tol = std::nullopt);

    std::string str() const;

private:
    std::variant<GaussianRational, NumericComplex> v_;
};

/// Round a numeric complex to nearby Gaussian rational of bounded height,
/// or nullopt when no convincing candidate exists. Callers must verify any
/// reconstructed value exactly before trusting it.
std::optional<GaussianRational> reconstruct_gaussian(const NumericComplex& z,
                                                     const mpz_class& height = mpz_class(1000000));

/// Dedup tolerance used throughout: 2^(-prec/2).
BigFloat default_tolerance(mpfr_prec_t prec);

} // namespace bilab
