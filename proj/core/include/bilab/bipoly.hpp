#pragma once

#include <map>
#include <string>
#include <vector>

#include "bilab/unipoly.hpp"

namespace bilab {

struct Monomial {
    unsigned dx = 0;
    unsigned dy = 0;
    unsigned total() const { return dx + dy; }
    friend bool operator==(Monomial a, Monomial b) { return a.dx == b.dx && a.dy == b.dy; }
    friend bool operator!=(Monomial a, Monomial b) { return !(a == b); }
};

/// Graded order: by total degree, then by x-degree.
struct MonomialLess {
    bool operator()(Monomial a, Monomial b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.dx < b.dx;
    }
};

/// Sparse bivariate polynomial over Q(i). Invariant: no zero coefficients.
struct BiPoly {
    std::map<Monomial, GaussianRational, MonomialLess> terms;

    BiPoly() = default;
    static BiPoly constant(GaussianRational v);
    static BiPoly monomial(unsigned dx, unsigned dy, GaussianRational coeff);
    static BiPoly var_x() { return monomial(1, 0, GaussianRational(1)); }
    static BiPoly var_y() { return monomial(0, 1, GaussianRational(1)); }

    bool is_zero() const { return terms.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const;
    int low_degree() const;
    bool is_homogeneous() const;
    GaussianRational coeff(unsigned dx, unsigned dy) const;
    void add_term(Monomial m, const GaussianRational& v);

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    BiPoly scaled(const GaussianRational& s) const;
    BiPoly pow(unsigned e) const;

    GaussianRational eval(const GaussianRational& x, const GaussianRational& y) const;
    NumericComplex eval(const NumericComplex& x, const NumericComplex& y) const;

    BiPoly derivative_x() const;
    BiPoly derivative_y() const;
    BiPoly swap_xy() const;

    /// f(a x + b y, c x + d y) with exact entries.
    BiPoly substitute_linear(const GaussianRational& a, const GaussianRational& b,
                             const GaussianRational& c, const GaussianRational& d) const;

    /// Scaled so the coefficient of the graded-smallest monomial is 1.
    BiPoly normalized() const;

    /// Quotient when b divides a exactly; throws Error otherwise.
    static BiPoly divide_exact(const BiPoly& a, const BiPoly& b);

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str() const;
};

struct HomogeneousPart {
    unsigned degree;
    BiPoly part;
};

/// Nonzero homogeneous components in ascending degree; their sum is f.
std::vector<HomogeneousPart> homogeneous_components(const BiPoly& f);

/// Gcd in Q(i)[x,y] by the primitive pseudo-remainder sequence in y over
/// Q(i)[x], contents handled through univariate gcds. Result is normalized.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

/// Product of the distinct irreducible factors: f / gcd(f, f_x, f_y).
BiPoly radical(const BiPoly& f);

/// Parse text like "x^2 - y^3", "x^3+y^3-3*x*y", "1/2x + (implicit) i y^2".
/// Flat sums of monomial terms; factors may be juxtaposed or '*'-separated.
BiPoly parse_bipoly(const std::string& text);

/// A line direction through the origin: (0 : 1) when vertical, else (1 : slope).
struct Direction {
    bool vertical = false;
    GaussianRational slope;

    friend bool operator==(const Direction& a, const Direction& b) {
        if (a.vertical != b.vertical) return false;
        return a.vertical || a.slope == b.slope;
    }
    std::string str() const;
};

/// Directions cut out by a homogeneous polynomial, with multiplicities.
/// Axis directions and Q(i) slopes are exact; other slopes stay numeric.
struct DirectionSet {
    std::vector<std::pair<Direction, unsigned>> exact;
    std::vector<std::pair<NumericComplex, unsigned>> numeric; // slopes
    size_t distinct_count() const { return exact.size() + numeric.size(); }
    unsigned total_multiplicity() const;
};

DirectionSet directions(const BiPoly& h, mpfr_prec_t prec);

/// For homogeneous h: the same polynomial with every direction's multiplicity
/// reduced to one. Exact (uses only univariate gcds).
BiPoly radical_of_homogeneous(const BiPoly& h);

/*
 * f(a x + b y, c x + d y) with coefficients pushed into an arbitrary
 * commutative ring K. K supplies +, *, is_zero(); embed maps an exact
 * Gaussian rational into K. Binomial weights are folded into the exact
 * coefficient before embedding.
 */
template <typename K, typename Embed>
std::map<Monomial, K, MonomialLess> substitute_matrix(const BiPoly& f, const K& a, const K& b,
                                                      const K& c, const K& d, Embed embed) {
    unsigned max_dx = 0, max_dy = 0;
    for (const auto& [m, v] : f.terms) {
        max_dx = std::max(max_dx, m.dx);
        max_dy = std::max(max_dy, m.dy);
    }
    K one = embed(GaussianRational(1));
    auto powers = [&one](const K& base, unsigned top) {
        std::vector<K> p{one};
        for (unsigned k = 1; k <= top; ++k) p.push_back(p.back() * base);
        return p;
    };
    std::vector<K> pa = powers(a, max_dx), pb = powers(b, max_dx);
    std::vector<K> pc = powers(c, max_dy), pd = powers(d, max_dy);

    unsigned top = std::max(max_dx, max_dy);
    std::vector<std::vector<Rational>> binom(top + 1);
    for (unsigned n = 0; n <= top; ++n) {
        binom[n].assign(n + 1, Rational(1));
        for (unsigned k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }

    std::map<Monomial, K, MonomialLess> out;
    for (const auto& [m, coeff] : f.terms) {
        for (unsigned r = 0; r <= m.dx; ++r) {
            for (unsigned s = 0; s <= m.dy; ++s) {
                GaussianRational w = coeff * GaussianRational(binom[m.dx][r] * binom[m.dy][s]);
                K v = embed(w) * pa[r] * pb[m.dx - r] * pc[s] * pd[m.dy - s];
                Monomial target{r + s, (m.dx - r) + (m.dy - s)};
                auto it = out.find(target);
                if (it == out.end())
                    out.emplace(target, std::move(v));
                else
                    it->second = it->second + v;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

} // namespace bilab
