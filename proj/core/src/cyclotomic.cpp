#include "bilab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace bilab {

/*
 * Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, built bottom-up over the
 * divisors. Exact division over Q keeps integer coefficients throughout.
 */
static UniPoly cyclotomic_polynomial(unsigned n, std::map<unsigned, UniPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    UniPoly num = UniPoly::monomial(n, GaussianRational(1)) - UniPoly::constant(GaussianRational(1));
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = UniPoly::divide_exact(num, cyclotomic_polynomial(d, cache));
    }
    cache.emplace(n, num);
    return num;
}

CycloField::CycloField(unsigned n) : n_(n) {
    std::map<unsigned, UniPoly> cache;
    modulus_ = cyclotomic_polynomial(n, cache);
}

const CycloField& CycloField::get(unsigned n) {
    if (n % 4 != 0 || n == 0 || n > 48)
        throw Error("cyclotomic order must be a multiple of 4 up to 48, got " + std::to_string(n));
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycloField>> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto it = fields.find(n);
    if (it == fields.end())
        it = fields.emplace(n, std::unique_ptr<CycloField>(new CycloField(n))).first;
    return *it->second;
}

static void require_real(const UniPoly& rep) {
    for (const auto& c : rep.c)
        if (c.im != 0) throw Error("cyclotomic coordinates must be rational");
}

CycloNum::CycloNum(const CycloField& field, UniPoly rep) : field_(&field), rep_(std::move(rep)) {
    require_real(rep_);
    if (rep_.degree() >= static_cast<int>(field.degree()))
        rep_ = UniPoly::divrem(rep_, field.modulus()).second;
}

CycloNum CycloNum::zero(const CycloField& field) { return {field, UniPoly()}; }

CycloNum CycloNum::one(const CycloField& field) {
    return {field, UniPoly::constant(GaussianRational(1))};
}

CycloNum CycloNum::from_rational(const CycloField& field, const Rational& q) {
    return {field, UniPoly::constant(GaussianRational(q))};
}

CycloNum CycloNum::embed(const CycloField& field, const GaussianRational& z) {
    UniPoly rep = UniPoly::constant(GaussianRational(z.re)) +
                  UniPoly::monomial(field.order() / 4, GaussianRational(z.im));
    return {field, std::move(rep)};
}

CycloNum CycloNum::zeta(const CycloField& field, long power) {
    long n = static_cast<long>(field.order());
    long k = ((power % n) + n) % n;
    return {field, UniPoly::monomial(static_cast<unsigned>(k), GaussianRational(1))};
}

static void require_same(const CycloNum& a, const CycloNum& b) {
    if (&a.field() != &b.field()) throw Error("cyclotomic field mismatch");
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    require_same(a, b);
    return {a.field(), a.rep() + b.rep()};
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
    require_same(a, b);
    return {a.field(), a.rep() - b.rep()};
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    require_same(a, b);
    return {a.field(), a.rep() * b.rep()};
}

CycloNum CycloNum::operator-() const { return {*field_, -rep_}; }

/*
 * Extended Euclid against the modulus. Phi_n is irreducible over Q and the
 * coordinates are rational, so the gcd with any nonzero reduced element is a
 * nonzero constant.
 */
CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
    UniPoly r0 = field_->modulus(), r1 = rep_;
    UniPoly u0, u1 = UniPoly::constant(GaussianRational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = UniPoly::divrem(r0, r1);
        UniPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.degree() != 0)
        throw InternalInvariant("cyclotomic modulus shares a factor with a field element");
    return {*field_, u0.scaled(r0.c[0].inverse())};
}

CycloNum CycloNum::pow(long e) const {
    CycloNum base = e >= 0 ? *this : inverse();
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    CycloNum acc = one(*field_);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    require_same(a, b);
    return a.rep() == b.rep();
}

CycloNum CycloNum::promote(const CycloField& bigger) const {
    if (&bigger == field_) return *this;
    if (bigger.order() % field_->order() != 0)
        throw Error("cyclotomic promotion needs the source order to divide the target order");
    unsigned stretch = bigger.order() / field_->order();
    UniPoly rep;
    for (size_t k = 0; k < rep_.c.size(); ++k)
        rep = rep + UniPoly::monomial(static_cast<unsigned>(k) * stretch, rep_.c[k]);
    return {bigger, std::move(rep)};
}

NumericComplex CycloNum::to_complex(mpfr_prec_t prec) const {
    BigFloat two_pi = BigFloat::pi(prec).mul_2si(1);
    BigFloat ang = two_pi / BigFloat::from_long(static_cast<long>(field_->order()), prec);
    auto [s, c] = BigFloat::sin_cos(ang);
    return rep_.eval(NumericComplex{c, s});
}

std::optional<GaussianRational> CycloNum::to_gaussian_rational() const {
    unsigned iq = field_->order() / 4;
    GaussianRational out;
    for (size_t k = 0; k < rep_.c.size(); ++k) {
        if (rep_.c[k].is_zero()) continue;
        if (k == 0)
            out.re = rep_.c[k].re;
        else if (k == iq)
            out.im = rep_.c[k].re;
        else
            return std::nullopt;
    }
    return out;
}

std::string CycloNum::str() const {
    if (is_zero()) return "0";
    return rep_.str("zeta" + std::to_string(field_->order()));
}

std::optional<CycloNum> cyclo_proportionality(const BiPoly& f, const Mat2Cyclo& T) {
    if (f.is_zero()) throw ZeroPolynomial("proportionality against zero polynomial");
    const CycloField& field = T.a.field();
    auto embed = [&field](const GaussianRational& g) { return CycloNum::embed(field, g); };
    auto sub = substitute_matrix<CycloNum>(f, T.a, T.b, T.c, T.d, embed);

    if (sub.size() != f.terms.size()) return std::nullopt;
    std::optional<CycloNum> lambda;
    for (const auto& [m, v] : f.terms) {
        auto it = sub.find(m);
        if (it == sub.end()) return std::nullopt;
        CycloNum ratio = it->second * embed(v).inverse();
        if (!lambda)
            lambda = ratio;
        else if (!(*lambda == ratio))
            return std::nullopt;
    }
    return lambda;
}

} // namespace bilab
