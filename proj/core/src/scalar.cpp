#include "bilab/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace bilab {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm2();
    return {re / n, -im / n};
}

GaussianRational GaussianRational::pow(long e) const {
    if (e == 0) return GaussianRational(1);
    GaussianRational base = e > 0 ? *this : inverse();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    GaussianRational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

NumericComplex GaussianRational::to_numeric(mpfr_prec_t prec) const {
    return {BigFloat::from_rational(re, prec), BigFloat::from_rational(im, prec)};
}

static std::string rational_str(const Rational& q) {
    return q.get_str();
}

std::string GaussianRational::str() const {
    if (im == 0) return rational_str(re);
    std::string ip;
    if (im == 1) ip = "i";
    else if (im == -1) ip = "-i";
    else ip = rational_str(im) + "i";
    if (re == 0) return ip;
    std::string sep = (ip[0] == '-') ? "" : "+";
    return rational_str(re) + sep + ip;
}

/*
 * Grammar: [ws] term ( ('+'|'-') term )* with at most one real and one
 * imaginary term. A term is INT[/INT] optionally followed by ['*']'i',
 * or a bare 'i'. Whitespace is stripped up front.
 */
GaussianRational parse_gaussian(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");

    GaussianRational out;
    bool saw_re = false, saw_im = false;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in scalar: '" + text + "'");
        }
        if (pos >= s.size()) throw ParseError("dangling sign in scalar: '" + text + "'");

        bool imag = false;
        Rational mag;
        if (s[pos] == 'i' || s[pos] == 'I') {
            imag = true;
            mag = 1;
            ++pos;
        } else {
            size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                ++pos;
            if (pos == start) throw ParseError("expected number in scalar: '" + text + "'");
            std::string num = s.substr(start, pos - start);
            try {
                mag = Rational(num);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad rational '" + num + "' in scalar: '" + text + "'");
            }
            if (mag.get_den() == 0)
                throw ParseError("zero denominator in scalar: '" + text + "'");
            mag.canonicalize();
            if (pos < s.size() && s[pos] == '*') {
                if (pos + 1 >= s.size() || (s[pos + 1] != 'i' && s[pos + 1] != 'I'))
                    throw ParseError("expected 'i' after '*' in scalar: '" + text + "'");
                imag = true;
                pos += 2;
            } else if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
                imag = true;
                ++pos;
            }
        }
        if (imag) {
            if (saw_im) throw ParseError("repeated imaginary part in scalar: '" + text + "'");
            saw_im = true;
            out.im = sign * mag;
        } else {
            if (saw_re) throw ParseError("repeated real part in scalar: '" + text + "'");
            saw_re = true;
            out.re = sign * mag;
        }
    }
    return out;
}

const GaussianRational& Scalar::exact() const {
    if (auto* g = std::get_if<GaussianRational>(&v_)) return *g;
    throw ModeMismatch("scalar is numeric, exact value requested");
}

const NumericComplex& Scalar::numeric() const {
    if (auto* n = std::get_if<NumericComplex>(&v_)) return *n;
    throw ModeMismatch("scalar is exact, numeric value requested");
}

NumericComplex Scalar::to_numeric(mpfr_prec_t prec) const {
    if (auto* g = std::get_if<GaussianRational>(&v_)) return g->to_numeric(prec);
    return std::get<NumericComplex>(v_);
}

bool Scalar::is_zero() const {
    if (auto* g = std::get_if<GaussianRational>(&v_)) return g->is_zero();
    return std::get<NumericComplex>(v_).is_zero();
}

Scalar Scalar::conj() const {
    if (auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(g->conj());
    return Scalar(std::get<NumericComplex>(v_).conj());
}

Scalar Scalar::inverse() const {
    if (auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(g->inverse());
    return Scalar(std::get<NumericComplex>(v_).inverse());
}

Scalar Scalar::pow(long e) const {
    if (auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(g->pow(e));
    return Scalar(std::get<NumericComplex>(v_).pow_i(e));
}

template <typename Op>
static Scalar binop(const Scalar& a, const Scalar& b, Op op) {
    if (a.mode() != b.mode()) throw ModeMismatch();
    if (a.is_exact()) return Scalar(op(a.exact(), b.exact()));
    return Scalar(op(a.numeric(), b.numeric()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const auto& x, const auto& y) { return x / y; });
}

Scalar Scalar::operator-() const {
    if (auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(-*g);
    return Scalar(-std::get<NumericComplex>(v_));
}

bool Scalar::eq(const Scalar& a, const Scalar& b, const std::optional<BigFloat>& tol) {
    if (a.mode() != b.mode()) throw ModeMismatch("cannot compare exact with numeric scalar");
    if (a.is_exact()) return a.exact() == b.exact();
    if (!tol) throw Error("numeric scalar comparison requires a tolerance");
    return NumericComplex::close(a.numeric(), b.numeric(), *tol);
}

std::string Scalar::str() const {
    if (auto* g = std::get_if<GaussianRational>(&v_)) return g->str();
    return std::get<NumericComplex>(v_).to_string();
}

std::optional<GaussianRational> reconstruct_gaussian(const NumericComplex& z, const mpz_class& height) {
    auto re = reconstruct_rational(z.re, height);
    if (!re) return std::nullopt;
    auto im = reconstruct_rational(z.im, height);
    if (!im) return std::nullopt;
    return GaussianRational{*re, *im};
}

BigFloat default_tolerance(mpfr_prec_t prec) {
    return BigFloat::pow2(-static_cast<long>(prec / 2), prec);
}

} // namespace bilab
