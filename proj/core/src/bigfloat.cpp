#include "bilab/bigfloat.hpp"

#include <algorithm>
#include <cstdio>

namespace bilab {

static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

BigFloat BigFloat::from_long(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("not a decimal number: '" + s + "'");
    return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DivisionByZero();
    BigFloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::rootn(unsigned long n) const {
    BigFloat r(precision());
    mpfr_rootn_ui(r.v_, v_, n, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(join(x, y));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(join(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

std::pair<BigFloat, BigFloat> BigFloat::sin_cos(const BigFloat& t) {
    BigFloat s(t.precision()), c(t.precision());
    mpfr_sin_cos(s.v_, c.v_, t.v_, MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

BigFloat BigFloat::mul_2si(long e) const {
    BigFloat r(precision());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

mpz_class BigFloat::floor_z() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
}

std::string BigFloat::to_string(int digits) const {
    if (digits <= 0) {
        // enough decimal digits to round-trip the binary precision
        digits = static_cast<int>(precision() * 0.30103) + 3;
    }
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Rg", digits, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

NumericComplex::NumericComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {
    mpfr_prec_t p = std::max<mpfr_prec_t>(64, std::max(re.precision(), im.precision()));
    if (re.precision() != p) re = re + BigFloat(p);
    if (im.precision() != p) im = im + BigFloat(p);
}

NumericComplex NumericComplex::from_longs(long r, long i, mpfr_prec_t prec) {
    return {BigFloat::from_long(r, prec), BigFloat::from_long(i, prec)};
}

NumericComplex operator+(const NumericComplex& a, const NumericComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

NumericComplex operator-(const NumericComplex& a, const NumericComplex& b) {
    return {a.re - b.re, a.im - b.im};
}

NumericComplex operator*(const NumericComplex& a, const NumericComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

NumericComplex NumericComplex::inverse() const {
    if (is_zero()) throw DivisionByZero();
    BigFloat n = re * re + im * im;
    return {re / n, -im / n};
}

NumericComplex operator/(const NumericComplex& a, const NumericComplex& b) {
    return a * b.inverse();
}

NumericComplex NumericComplex::pow_i(long e) const {
    if (e == 0) return from_longs(1, 0, precision());
    NumericComplex base = e > 0 ? *this : inverse();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    NumericComplex acc = from_longs(1, 0, precision());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::vector<NumericComplex> NumericComplex::nth_roots(unsigned long n) const {
    std::vector<NumericComplex> out;
    if (n == 0) return out;
    mpfr_prec_t p = precision();
    BigFloat r = abs().rootn(n);
    BigFloat theta = BigFloat::atan2(im, re);
    BigFloat two_pi = BigFloat::pi(p).mul_2si(1);
    for (unsigned long k = 0; k < n; ++k) {
        BigFloat ang = (theta + two_pi * BigFloat::from_long(static_cast<long>(k), p)) /
                       BigFloat::from_long(static_cast<long>(n), p);
        auto [s, c] = BigFloat::sin_cos(ang);
        out.push_back({r * c, r * s});
    }
    return out;
}

bool NumericComplex::close(const NumericComplex& a, const NumericComplex& b, const BigFloat& tol) {
    return (a - b).abs() <= tol;
}

bool NumericComplex::lex_less(const NumericComplex& a, const NumericComplex& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
}

std::string NumericComplex::to_string(int digits) const {
    std::string r = re.to_string(digits);
    std::string i = im.to_string(digits);
    if (im.is_zero()) return r;
    std::string sep = (!i.empty() && i[0] == '-') ? "" : "+";
    return r + sep + i + "i";
}

std::optional<mpq_class> reconstruct_rational(const BigFloat& x, const mpz_class& height) {
    if (!x.is_finite()) return std::nullopt;
    mpfr_prec_t p = x.precision();
    // trailing slack the convergent must beat to be believable
    BigFloat eps = BigFloat::pow2(-static_cast<long>(std::min<mpfr_prec_t>(p / 2, 128)), p);

    BigFloat t = x;
    mpz_class p0 = 1, p1 = x.floor_z();
    mpz_class q0 = 0, q1 = 1;
    t = t - BigFloat::from_rational(mpq_class(p1), p);

    for (int it = 0; it < 128; ++it) {
        mpq_class cand(p1, q1);
        cand.canonicalize();
        BigFloat err = (x - BigFloat::from_rational(cand, p)).abs();
        if (err <= eps) {
            if (::abs(cand.get_num()) <= height && cand.get_den() <= height) return cand;
            return std::nullopt;
        }
        if (t.is_zero()) break;
        t = BigFloat::from_long(1, p) / t;
        mpz_class a = t.floor_z();
        t = t - BigFloat::from_rational(mpq_class(a), p);
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; p1 = p2;
        q0 = q1; q1 = q2;
        if (q1 > height * height) break;
    }
    return std::nullopt;
}

} // namespace bilab
