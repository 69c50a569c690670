#pragma once

#include <optional>

#include "bilab/bipoly.hpp"
#include "bilab/mat2.hpp"
#include "bilab/unipoly.hpp"

namespace bilab {

/*
 * Q(zeta_n) for 4 | n <= 48, as Q[t] mod the n-th cyclotomic polynomial.
 * The divisibility by 4 keeps i = zeta^(n/4) inside the field, so every
 * Gaussian rational embeds, while the modulus stays irreducible over Q and
 * every element keeps rational coordinates.
 */
class CycloField {
public:
    /// Cached singleton per order; throws unless 4 divides n and n <= 48.
    static const CycloField& get(unsigned n);

    unsigned order() const { return n_; }
    unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
    const UniPoly& modulus() const { return modulus_; }

private:
    explicit CycloField(unsigned n);
    unsigned n_;
    UniPoly modulus_; // Phi_n, integer coefficients
    friend class CycloNum;
};

/// Element of Q(zeta_n): polynomial in zeta of degree < phi(n) with rational
/// coefficients. Operations on elements of different fields throw.
class CycloNum {
public:
    CycloNum(const CycloField& field, UniPoly rep);

    static CycloNum zero(const CycloField& field);
    static CycloNum one(const CycloField& field);
    static CycloNum from_rational(const CycloField& field, const Rational& q);
    /// a + b*zeta^(n/4).
    static CycloNum embed(const CycloField& field, const GaussianRational& z);
    static CycloNum zeta(const CycloField& field, long power);

    const CycloField& field() const { return *field_; }
    bool is_zero() const { return rep_.is_zero(); }
    const UniPoly& rep() const { return rep_; }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    CycloNum operator-() const;
    CycloNum inverse() const;
    CycloNum pow(long e) const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Same value seen in Q(zeta_m) where order() divides m.
    CycloNum promote(const CycloField& bigger) const;

    NumericComplex to_complex(mpfr_prec_t prec) const;
    /// The exact Gaussian rational this element equals, when it lies in Q(i).
    std::optional<GaussianRational> to_gaussian_rational() const;

    std::string str() const;

private:
    const CycloField* field_;
    UniPoly rep_; // reduced mod Phi_n, real rational coefficients
};

using Mat2Cyclo = Mat2T<CycloNum>;

/// Exact check whether f(T(x,y)) = lambda * f for some scalar lambda in the
/// field; returns lambda on success. The decisive verification lane for
/// automorphism certificates whose entries leave Q(i).
std::optional<CycloNum> cyclo_proportionality(const BiPoly& f, const Mat2Cyclo& T);

} // namespace bilab
