#pragma once

#include <utility>
#include <vector>

#include "bilab/scalar.hpp"

namespace bilab {

/// Dense univariate polynomial over Q(i), coefficients ascending by degree.
/// Invariant: no trailing zero coefficients; the zero polynomial is empty.
struct UniPoly {
    std::vector<GaussianRational> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<GaussianRational> coeffs) : c(std::move(coeffs)) { normalize(); }
    static UniPoly constant(GaussianRational v);
    static UniPoly monomial(unsigned deg, GaussianRational coeff);

    void normalize();
    bool is_zero() const { return c.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    GaussianRational coeff(size_t k) const { return k < c.size() ? c[k] : GaussianRational(0); }
    const GaussianRational& lc() const;

    GaussianRational eval(const GaussianRational& x) const;
    NumericComplex eval(const NumericComplex& x) const;

    UniPoly derivative() const;
    UniPoly monic() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    UniPoly scaled(const GaussianRational& s) const;

    /// Quotient and remainder with deg r < deg b; throws on zero divisor.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
    /// Division known to be exact; throws Error when a remainder survives.
    static UniPoly divide_exact(const UniPoly& a, const UniPoly& b);
    /// Monic gcd by the Euclidean remainder sequence (Q(i) is a field).
    static UniPoly gcd_monic(const UniPoly& a, const UniPoly& b);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;
};

struct SquarefreeFactor {
    UniPoly factor; // monic, squarefree, nonconstant
    unsigned multiplicity;
};

/// Yun decomposition: f = lc * prod factor_i^multiplicity_i with the factors
/// pairwise coprime. Constant input yields an empty list; zero input throws.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f);

/// Monic product of the distinct irreducible factors of f.
UniPoly squarefree_part(const UniPoly& f);

/// All complex roots of a squarefree polynomial by the Aberth iteration,
/// sorted lexicographically by (re, im). Roots carry >= prec working bits and
/// pass a residual gate; persistent non-convergence throws.
std::vector<NumericComplex> numeric_roots(const UniPoly& f, mpfr_prec_t prec);

struct RootSplit {
    std::vector<std::pair<GaussianRational, unsigned>> exact;  // verified in Q(i)
    std::vector<std::pair<NumericComplex, unsigned>> numeric;  // everything else
};

/// Roots with multiplicities: squarefree-decompose, find each factor's roots
/// numerically, and promote to exact any root that reconstructs to a Gaussian
/// rational and verifies by exact evaluation.
RootSplit split_roots(const UniPoly& f, mpfr_prec_t prec);

} // namespace bilab
