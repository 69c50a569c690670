#pragma once

#include <cstdio> // before mpfr.h so the mpfr_*printf prototypes are declared

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bilab/errors.hpp"

namespace bilab {

/// Thin RAII wrapper over one mpfr_t. Results of binary operations carry
/// the larger precision of the two operands; rounding is always to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_long(long x, mpfr_prec_t prec);
    static BigFloat from_double(double x, mpfr_prec_t prec);
    static BigFloat from_rational(const mpq_class& q, mpfr_prec_t prec);
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);
    /// 2^e at the given precision (exact).
    static BigFloat pow2(long e, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }

    BigFloat abs() const;
    BigFloat sqrt() const;
    /// n-th root of a nonnegative value.
    BigFloat rootn(unsigned long n) const;
    static BigFloat hypot(const BigFloat& x, const BigFloat& y);
    static BigFloat atan2(const BigFloat& y, const BigFloat& x);
    /// Returns {sin t, cos t}.
    static std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& t);
    BigFloat mul_2si(long e) const;

    /// floor as an exact integer.
    mpz_class floor_z() const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 0) const;

private:
    mpfr_t v_;
};

/// Complex number with both legs at a common precision of at least 64 bits.
struct NumericComplex {
    BigFloat re, im;

    explicit NumericComplex(mpfr_prec_t prec = 64) : re(check(prec)), im(prec) {}
    NumericComplex(BigFloat r, BigFloat i);

    static NumericComplex from_longs(long r, long i, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return re.precision(); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    NumericComplex conj() const { return {re, -im}; }
    BigFloat abs() const { return BigFloat::hypot(re, im); }

    friend NumericComplex operator+(const NumericComplex& a, const NumericComplex& b);
    friend NumericComplex operator-(const NumericComplex& a, const NumericComplex& b);
    friend NumericComplex operator*(const NumericComplex& a, const NumericComplex& b);
    friend NumericComplex operator/(const NumericComplex& a, const NumericComplex& b);
    NumericComplex operator-() const { return {-re, -im}; }

    NumericComplex inverse() const;
    NumericComplex pow_i(long e) const;
    /// All n-th roots, by modulus/argument, in a deterministic order.
    std::vector<NumericComplex> nth_roots(unsigned long n) const;

    /// |a - b| <= tol.
    static bool close(const NumericComplex& a, const NumericComplex& b, const BigFloat& tol);
    /// Lexicographic (re, im) order; used to keep numeric output deterministic.
    static bool lex_less(const NumericComplex& a, const NumericComplex& b);

    std::string to_string(int digits = 0) const;

private:
    static mpfr_prec_t check(mpfr_prec_t p) {
        if (p < 64) throw Error("numeric precision must be at least 64 bits");
        return p;
    }
};

/// Nearest rational p/q with max(|p|, q) <= height, found by continued
/// fractions; empty if no convergent of that height sits inside the
/// precision-dependent acceptance window. Callers must verify any
/// reconstructed value exactly downstream.
std::optional<mpq_class> reconstruct_rational(const BigFloat& x, const mpz_class& height);

} // namespace bilab
