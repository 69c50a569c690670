#include "bilab/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace bilab {

UniPoly UniPoly::constant(GaussianRational v) {
    UniPoly p;
    if (!v.is_zero()) p.c.push_back(std::move(v));
    return p;
}

UniPoly UniPoly::monomial(unsigned deg, GaussianRational coeff) {
    UniPoly p;
    if (coeff.is_zero()) return p;
    p.c.assign(deg + 1, GaussianRational(0));
    p.c[deg] = std::move(coeff);
    return p;
}

void UniPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

const GaussianRational& UniPoly::lc() const {
    if (c.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c.back();
}

GaussianRational UniPoly::eval(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

NumericComplex UniPoly::eval(const NumericComplex& x) const {
    NumericComplex acc(x.precision());
    for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k].to_numeric(x.precision());
    return acc;
}

UniPoly UniPoly::derivative() const {
    UniPoly d;
    for (size_t k = 1; k < c.size(); ++k)
        d.c.push_back(GaussianRational(static_cast<long>(k)) * c[k]);
    d.normalize();
    return d;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw ZeroPolynomial("monic of zero polynomial");
    return scaled(lc().inverse());
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), GaussianRational(0));
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(k) + b.coeff(k);
    r.normalize();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), GaussianRational(0));
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(k) - b.coeff(k);
    r.normalize();
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, GaussianRational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

UniPoly UniPoly::scaled(const GaussianRational& s) const {
    if (s.is_zero()) return {};
    UniPoly r = *this;
    for (auto& v : r.c) v *= s;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    UniPoly q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(a.c.size() - b.c.size() + 1, GaussianRational(0));
    GaussianRational inv_lc = b.lc().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - b.degree());
        GaussianRational f = r.lc() * inv_lc;
        q.c[shift] = f;
        for (size_t k = 0; k < b.c.size(); ++k) r.c[shift + k] -= f * b.c[k];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

UniPoly UniPoly::divide_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

UniPoly UniPoly::gcd_monic(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = divrem(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return {};
    return f.monic();
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c[k].str() << ")";
        if (k >= 1) out << "*" << var;
        if (k >= 2) out << "^" << k;
    }
    return out.str();
}

/*
 * Yun's algorithm, characteristic zero. With b = f/gcd(f,f') and
 * d = f'/gcd(f,f') - b', the gcd of b and d peels the multiplicity-i part
 * at step i.
 */
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (f.degree() == 0) return out;

    UniPoly fm = f.monic();
    UniPoly fp = fm.derivative();
    UniPoly a = UniPoly::gcd_monic(fm, fp);
    UniPoly b = UniPoly::divide_exact(fm, a);
    UniPoly d = UniPoly::divide_exact(fp, a) - b.derivative();

    for (unsigned i = 1; b.degree() > 0; ++i) {
        UniPoly ai = UniPoly::gcd_monic(b, d);
        if (ai.degree() > 0) out.push_back({ai, i});
        b = UniPoly::divide_exact(b, ai);
        UniPoly cq = UniPoly::divide_exact(d, ai);
        d = cq - b.derivative();
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree part of zero polynomial");
    if (f.degree() == 0) return UniPoly::constant(GaussianRational(1));
    UniPoly g = UniPoly::gcd_monic(f, f.derivative());
    return UniPoly::divide_exact(f, g).monic();
}

/*
 * Aberth-Ehrlich: simultaneous Newton corrected by the pairwise repulsion
 * sum, sequential (Gauss-Seidel) updates. Cubic convergence on squarefree
 * input; initial guesses sit on a circle of the Cauchy root bound with an
 * angular offset so no guess starts on a symmetry axis.
 */
std::vector<NumericComplex> numeric_roots(const UniPoly& f, mpfr_prec_t prec) {
    if (f.is_zero()) throw ZeroPolynomial("roots of zero polynomial");
    std::vector<NumericComplex> out;
    if (f.degree() == 0) return out;

    UniPoly p = f;
    // peel an exact root at the origin so the repulsion sum never divides by it
    bool root_at_zero = p.c[0].is_zero();
    if (root_at_zero) {
        p.c.erase(p.c.begin());
        p.normalize();
    }

    for (int attempt = 0; attempt < 3; ++attempt) {
        mpfr_prec_t wp = std::max<mpfr_prec_t>(prec, 64) + 64 + 64 * attempt * attempt;
        int n = p.degree();
        std::vector<NumericComplex> z;
        if (n > 0) {
            BigFloat lead = p.lc().to_numeric(wp).abs();
            BigFloat radius = BigFloat::from_long(0, wp);
            for (int k = 0; k < n; ++k) {
                BigFloat m = p.c[static_cast<size_t>(k)].to_numeric(wp).abs() / lead;
                if (m > radius) radius = m;
            }
            radius = radius + BigFloat::from_long(1, wp);

            BigFloat two_pi = BigFloat::pi(wp).mul_2si(1);
            BigFloat offset = BigFloat::from_double(0.376941, wp);
            for (int k = 0; k < n; ++k) {
                BigFloat ang = two_pi * BigFloat::from_long(k, wp) / BigFloat::from_long(n, wp) + offset;
                auto [s, c] = BigFloat::sin_cos(ang);
                z.push_back({radius * c, radius * s});
            }

            UniPoly dp = p.derivative();
            BigFloat step_tol = BigFloat::pow2(-static_cast<long>(wp - 16), wp);
            bool settled = false;
            for (int sweep = 0; sweep < 200 && !settled; ++sweep) {
                settled = true;
                for (int k = 0; k < n; ++k) {
                    NumericComplex pv = p.eval(z[static_cast<size_t>(k)]);
                    if (pv.is_zero()) continue;
                    NumericComplex dv = dp.eval(z[static_cast<size_t>(k)]);
                    if (dv.is_zero()) {
                        // nudge off a critical point
                        z[static_cast<size_t>(k)] =
                            z[static_cast<size_t>(k)] + NumericComplex(BigFloat::pow2(-8, wp), BigFloat::pow2(-9, wp));
                        settled = false;
                        continue;
                    }
                    NumericComplex newton = pv / dv;
                    NumericComplex rep(wp);
                    for (int j = 0; j < n; ++j) {
                        if (j == k) continue;
                        NumericComplex diff = z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
                        if (diff.is_zero()) diff = NumericComplex(BigFloat::pow2(-static_cast<long>(wp), wp), BigFloat(wp));
                        rep = rep + diff.inverse();
                    }
                    NumericComplex denom = NumericComplex::from_longs(1, 0, wp) - newton * rep;
                    NumericComplex w = denom.is_zero() ? newton : newton / denom;
                    z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] - w;
                    BigFloat scale = z[static_cast<size_t>(k)].abs() + BigFloat::from_long(1, wp);
                    if (w.abs() > step_tol * scale) settled = false;
                }
            }
        }

        // residual gate: |p(z)| must vanish relative to the coefficient mass
        BigFloat gate = BigFloat::pow2(-static_cast<long>(std::max<mpfr_prec_t>(prec, 64) / 2), wp);
        bool ok = true;
        for (const auto& r : z) {
            BigFloat mass(wp);
            BigFloat zp = BigFloat::from_long(1, wp);
            BigFloat za = r.abs();
            if (za < BigFloat::from_long(1, wp)) za = BigFloat::from_long(1, wp);
            for (const auto& cf : p.c) {
                mass = mass + cf.to_numeric(wp).abs() * zp;
                zp = zp * za;
            }
            if (p.eval(r).abs() > gate * mass) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        out = std::move(z);
        if (root_at_zero) out.push_back(NumericComplex(wp));
        std::sort(out.begin(), out.end(), NumericComplex::lex_less);
        return out;
    }
    throw Error("root iteration failed to converge at degree " + std::to_string(f.degree()));
}

RootSplit split_roots(const UniPoly& f, mpfr_prec_t prec) {
    RootSplit out;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        for (const auto& r : numeric_roots(factor, prec)) {
            auto cand = reconstruct_gaussian(r);
            if (cand && factor.eval(*cand).is_zero()) {
                out.exact.push_back({*cand, mult});
            } else {
                out.numeric.push_back({r, mult});
            }
        }
    }
    std::sort(out.exact.begin(), out.exact.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    return out;
}

} // namespace bilab
