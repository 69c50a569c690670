#include "bilab/autos.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "bilab/errors.hpp"

namespace bilab {

namespace {

using NumTerms = std::map<Monomial, NumericComplex, MonomialLess>;

long ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long x1, y1;
    long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

/// e^(2 pi i num / den) at the given precision.
NumericComplex unit_circle(long num, long den, mpfr_prec_t prec) {
    BigFloat theta = BigFloat::pi(prec) * BigFloat::from_long(2 * num, prec) / BigFloat::from_long(den, prec);
    auto sc = BigFloat::sin_cos(theta);
    return {sc.second, sc.first};
}

NumTerms substitute_numeric(const BiPoly& f, const Mat2C& t, mpfr_prec_t prec) {
    auto embed = [prec](const GaussianRational& g) { return g.to_numeric(prec); };
    return substitute_matrix<NumericComplex>(f, t.a, t.b, t.c, t.d, embed);
}

/// The nonzero lambda with image = lambda * f coefficientwise within the
/// tolerance, read off the graded-smallest monomial, or nullopt.
std::optional<NumericComplex> proportional_terms(const BiPoly& f, const NumTerms& image,
                                                 mpfr_prec_t prec, const BigFloat& tol) {
    BigFloat scale = BigFloat::from_long(1, prec);
    for (const auto& [m, v] : f.terms) {
        BigFloat a = v.to_numeric(prec).abs();
        if (a > scale) scale = a;
    }
    const auto& front = *f.terms.begin();
    auto it0 = image.find(front.first);
    if (it0 == image.end()) return std::nullopt;
    NumericComplex lambda = it0->second / front.second.to_numeric(prec);

    BigFloat budget = tol * scale * (BigFloat::from_long(1, prec) + lambda.abs());
    if (lambda.abs() <= budget) return std::nullopt;
    for (const auto& [m, v] : f.terms) {
        NumericComplex want = lambda * v.to_numeric(prec);
        auto it = image.find(m);
        NumericComplex got = it == image.end() ? NumericComplex(prec) : it->second;
        if (!NumericComplex::close(got, want, budget)) return std::nullopt;
    }
    for (const auto& [m, v] : image)
        if (f.terms.find(m) == f.terms.end() && v.abs() > budget) return std::nullopt;
    return lambda;
}

/// One distinct direction across all homogeneous components, with the
/// (component degree, multiplicity) pairs recording where it appears.
struct DirEntry {
    bool exact = false;
    bool vertical = false;
    GaussianRational slope;
    NumericComplex slope_num;
    std::vector<std::pair<unsigned, unsigned>> profile;

    std::pair<NumericComplex, NumericComplex> vec(mpfr_prec_t prec) const {
        if (!exact) return {NumericComplex::from_longs(1, 0, prec), slope_num};
        if (vertical) return {NumericComplex::from_longs(0, 0, prec), NumericComplex::from_longs(1, 0, prec)};
        return {NumericComplex::from_longs(1, 0, prec), slope.to_numeric(prec)};
    }
    std::pair<GaussianRational, GaussianRational> vec_exact() const {
        if (vertical) return {GaussianRational(0), GaussianRational(1)};
        return {GaussianRational(1), slope};
    }
};

/*
 * Every symmetry f(T x) = lambda f(x) acts degreewise, so it permutes the
 * directions cut out by each homogeneous component and preserves each
 * direction's multiplicity pattern across components. The registry collects
 * the distinct directions of all components together with those patterns;
 * candidate matrices below are constrained to respect them.
 */
std::vector<DirEntry> direction_registry(const std::vector<HomogeneousPart>& comps, mpfr_prec_t prec) {
    std::vector<DirEntry> reg;
    BigFloat tol = default_tolerance(prec);
    for (const auto& hp : comps) {
        if (hp.degree == 0) continue;
        DirectionSet ds = directions(hp.part, prec);
        for (const auto& [dir, mult] : ds.exact) {
            auto it = std::find_if(reg.begin(), reg.end(), [&dir](const DirEntry& e) {
                return e.exact && e.vertical == dir.vertical && (dir.vertical || e.slope == dir.slope);
            });
            if (it == reg.end()) {
                DirEntry e;
                e.exact = true;
                e.vertical = dir.vertical;
                e.slope = dir.slope;
                reg.push_back(std::move(e));
                it = reg.end() - 1;
            }
            it->profile.emplace_back(hp.degree, mult);
        }
        for (const auto& [slope, mult] : ds.numeric) {
            auto it = std::find_if(reg.begin(), reg.end(), [&](const DirEntry& e) {
                return !e.exact && NumericComplex::close(e.slope_num, slope, tol);
            });
            if (it == reg.end()) {
                DirEntry e;
                e.slope_num = slope;
                reg.push_back(std::move(e));
                it = reg.end() - 1;
            }
            it->profile.emplace_back(hp.degree, mult);
        }
    }
    auto rank = [](const DirEntry& e) { return e.exact ? (e.vertical ? 0 : 1) : 2; };
    std::sort(reg.begin(), reg.end(), [&rank](const DirEntry& a, const DirEntry& b) {
        if (rank(a) != rank(b)) return rank(a) < rank(b);
        if (rank(a) == 1) return lex_less(a.slope, b.slope);
        if (rank(a) == 2) return NumericComplex::lex_less(a.slope_num, b.slope_num);
        return false;
    });
    return reg;
}

/*
 * The matrix sending the projective triple (reg[0], reg[1], reg[2]) to
 * (reg[i1], reg[i2], reg[i3]), unique up to scale: write v3 = a v1 + b v2
 * and w3 = p w1 + q w2; then T maps v1 -> (p/a) w1 and v2 -> (q/b) w2.
 * Normalized so its first nonzero entry is one.
 */
std::optional<Mat2C> projective_map(const std::vector<DirEntry>& reg, size_t i1, size_t i2, size_t i3,
                                    mpfr_prec_t prec, const BigFloat& tol) {
    auto [v1x, v1y] = reg[0].vec(prec);
    auto [v2x, v2y] = reg[1].vec(prec);
    auto [v3x, v3y] = reg[2].vec(prec);
    auto [w1x, w1y] = reg[i1].vec(prec);
    auto [w2x, w2y] = reg[i2].vec(prec);
    auto [w3x, w3y] = reg[i3].vec(prec);

    NumericComplex dv = v1x * v2y - v1y * v2x;
    NumericComplex dw = w1x * w2y - w1y * w2x;
    if (dv.abs() <= tol || dw.abs() <= tol) return std::nullopt;
    NumericComplex a = (v3x * v2y - v3y * v2x) / dv;
    NumericComplex b = (v1x * v3y - v1y * v3x) / dv;
    NumericComplex p = (w3x * w2y - w3y * w2x) / dw;
    NumericComplex q = (w1x * w3y - w1y * w3x) / dw;
    if (a.abs() <= tol || b.abs() <= tol || p.abs() <= tol || q.abs() <= tol) return std::nullopt;

    NumericComplex alpha = p / a, beta = q / b;
    Mat2C cols{alpha * w1x, beta * w2x, alpha * w1y, beta * w2y};
    Mat2C vinv{v2y / dv, -(v2x / dv), -(v1y / dv), v1x / dv};
    Mat2C t = cols * vinv;

    const NumericComplex* entries[4] = {&t.a, &t.b, &t.c, &t.d};
    for (const NumericComplex* e : entries)
        if (e->abs() > tol) return t.scaled(e->inverse());
    return std::nullopt;
}

/*
 * Three or more distinct directions pin a candidate up to one scalar: pick
 * images for the first three (respecting multiplicity patterns), solve for
 * the projective map T0, and read off the per-component proportionality
 * factors rho_e of f_e(T0 x) = rho_e f_e(x). A rescaled T = c T0 multiplies
 * rho_e by c^e, so c must satisfy c^(e_t - e_0) = rho_0 / rho_t for every
 * component; the roots of the first equation are finitely many candidates
 * and the rest act as filters. Full verification happens downstream.
 */
std::vector<Mat2C> moebius_candidates(const std::vector<HomogeneousPart>& comps,
                                      const std::vector<DirEntry>& reg, mpfr_prec_t prec) {
    BigFloat tol = default_tolerance(prec);
    std::array<std::vector<size_t>, 3> targets;
    for (size_t b = 0; b < 3; ++b)
        for (size_t i = 0; i < reg.size(); ++i)
            if (reg[i].profile == reg[b].profile) targets[b].push_back(i);

    unsigned e0 = comps.front().degree;
    std::vector<long> gaps;
    for (size_t t = 1; t < comps.size(); ++t)
        gaps.push_back(static_cast<long>(comps[t].degree - e0));

    std::vector<Mat2C> out;
    for (size_t i1 : targets[0])
        for (size_t i2 : targets[1]) {
            if (i2 == i1) continue;
            for (size_t i3 : targets[2]) {
                if (i3 == i1 || i3 == i2) continue;
                auto t0 = projective_map(reg, i1, i2, i3, prec, tol);
                if (!t0) continue;
                std::vector<NumericComplex> rhos;
                bool ok = true;
                for (const auto& hp : comps) {
                    auto rho = proportional_terms(hp.part, substitute_numeric(hp.part, *t0, prec), prec, tol);
                    if (!rho) {
                        ok = false;
                        break;
                    }
                    rhos.push_back(*rho);
                }
                if (!ok) continue;
                NumericComplex first = rhos[0] / rhos[1];
                for (const auto& croot : first.nth_roots(static_cast<unsigned long>(gaps[0]))) {
                    bool consistent = true;
                    for (size_t t = 1; t < gaps.size(); ++t) {
                        NumericComplex want = rhos[0] / rhos[t + 1];
                        BigFloat budget = tol * (BigFloat::from_long(1, prec) + want.abs());
                        if (!NumericComplex::close(croot.pow_i(gaps[t]), want, budget)) {
                            consistent = false;
                            break;
                        }
                    }
                    if (consistent) out.push_back(t0->scaled(croot));
                }
            }
        }
    return out;
}

struct LatticeBasis {
    long p = 0; // [[p, q], [0, r]] generates the lattice, 0 <= q < r
    long q = 0;
    long r = 0;
};

/// Hermite-style basis of the sublattice of Z^2 spanned by gens, or nullopt
/// when the span has rank below two.
std::optional<LatticeBasis> lattice_basis(const std::vector<std::pair<long, long>>& gens) {
    long cp = 0, cq = 0;
    std::vector<long> betas;
    for (auto [al, be] : gens) {
        if (al == 0) {
            if (be != 0) betas.push_back(be < 0 ? -be : be);
            continue;
        }
        if (al < 0) {
            al = -al;
            be = -be;
        }
        if (cp == 0) {
            cp = al;
            cq = be;
            continue;
        }
        long u, v;
        long g = ext_gcd(cp, al, u, v);
        long elim = (cp / g) * be - (al / g) * cq;
        if (elim != 0) betas.push_back(elim < 0 ? -elim : elim);
        cq = u * cq + v * be;
        cp = g;
    }
    if (cp == 0) return std::nullopt;
    long r = 0;
    for (long b : betas) r = std::gcd(r, b);
    if (r == 0) return std::nullopt;
    LatticeBasis out;
    out.p = cp;
    out.r = r;
    out.q = ((cq % r) + r) % r;
    return out;
}

AutCertificate make_cyclo_certificate(const Mat2Cyclo& t, const CycloNum& lambda, mpfr_prec_t prec) {
    AutCertificate cert;
    auto a = t.a.to_gaussian_rational(), b = t.b.to_gaussian_rational(),
         c = t.c.to_gaussian_rational(), d = t.d.to_gaussian_rational();
    auto l = lambda.to_gaussian_rational();
    if (a && b && c && d && l) {
        Mat2Q te{*a, *b, *c, *d};
        cert.kind = CertKind::Exact;
        cert.matrix_exact = te;
        cert.lambda_exact = *l;
        cert.matrix_numeric = to_numeric(te, prec);
        cert.lambda_numeric = l->to_numeric(prec);
        return cert;
    }
    cert.kind = CertKind::Cyclotomic;
    cert.matrix_cyclo = t;
    cert.lambda_cyclo = lambda;
    cert.matrix_numeric = Mat2C{t.a.to_complex(prec), t.b.to_complex(prec),
                                t.c.to_complex(prec), t.d.to_complex(prec)};
    cert.lambda_numeric = lambda.to_complex(prec);
    return cert;
}

/*
 * With exactly two distinct directions, a symmetry either fixes both or
 * swaps them. Change coordinates so the directions become the axes: every
 * component, having directions only there, collapses to a single monomial,
 * so the conjugated curve g is a fewnomial with one monomial per degree.
 * A swap would need two support monomials mirrored across the diagonal,
 * which equal total degree forbids; so only diagonal maps diag(a, d)
 * survive, and they form the dual of Z^2 modulo the lattice of support
 * differences: a^dx d^dy must agree across the support. Rank two keeps the
 * group finite and makes a, d roots of unity of order dividing the basis
 * invariants, living in a small cyclotomic field.
 */
std::vector<AutCertificate> lattice_lane(const Curve& curve, const std::vector<HomogeneousPart>& comps,
                                         const std::vector<DirEntry>& reg, mpfr_prec_t prec,
                                         std::vector<Mat2C>& numeric_overflow) {
    /*
     * The Galois orbit of a direction over Q(i) stays inside the registry
     * and preserves profiles. Two directions with equal profiles make every
     * component a power of one quadratic form; two with distinct profiles
     * are individually Galois-stable, hence already in Q(i). Either failure
     * below therefore betrays a reducible curve, not a numeric limitation.
     */
    if (reg[0].profile == reg[1].profile)
        throw Error("both directions carry the same multiplicities, so the curve is a polynomial "
                    "in one quadratic form and cannot be irreducible");
    if (!reg[0].exact || !reg[1].exact)
        throw Error("a curve with exactly two asymptotic directions must have them in Q(i); "
                    "this one cannot be irreducible");

    auto [v1x, v1y] = reg[0].vec_exact();
    auto [v2x, v2y] = reg[1].vec_exact();
    Mat2Q V{v1x, v2x, v1y, v2y};
    if (V.det().is_zero()) throw InternalInvariant("direction frame is singular");

    BiPoly g = curve.poly().substitute_linear(V.a, V.b, V.c, V.d);
    if (g.terms.size() != comps.size())
        throw InternalInvariant("a two-direction curve must become a fewnomial in its direction frame");

    std::vector<std::pair<Monomial, GaussianRational>> supp(g.terms.begin(), g.terms.end());
    std::vector<std::pair<long, long>> gens;
    for (size_t t = 1; t < supp.size(); ++t)
        gens.emplace_back(static_cast<long>(supp[t].first.dx) - static_cast<long>(supp[0].first.dx),
                          static_cast<long>(supp[t].first.dy) - static_cast<long>(supp[0].first.dy));
    auto basis = lattice_basis(gens);
    if (!basis)
        throw Error("the support lattice is rank deficient, leaving a one-parameter scaling family; "
                    "the curve would be special or reducible");

    long pr = basis->p * basis->r;
    long order = std::lcm(pr, 4L);
    std::vector<AutCertificate> certs;
    if (order > 48) {
        Mat2C vn = to_numeric(V, prec);
        Mat2C vni = vn.inverse();
        for (long m = 0; m < basis->r; ++m)
            for (long n = 0; n < basis->p; ++n) {
                NumericComplex a = unit_circle(basis->r * n - basis->q * m, pr, prec);
                NumericComplex d = unit_circle(basis->p * m, pr, prec);
                Mat2C tp{a, NumericComplex(prec), NumericComplex(prec), d};
                numeric_overflow.push_back(vn * tp * vni);
            }
        return certs;
    }

    const CycloField& field = CycloField::get(static_cast<unsigned>(order));
    long step = order / pr;
    auto embed = [&field](const GaussianRational& z) { return CycloNum::embed(field, z); };
    Mat2Q vi = V.inverse();
    Mat2Cyclo vc{embed(V.a), embed(V.b), embed(V.c), embed(V.d)};
    Mat2Cyclo vic{embed(vi.a), embed(vi.b), embed(vi.c), embed(vi.d)};
    CycloNum zero = CycloNum::zero(field);

    for (long m = 0; m < basis->r; ++m)
        for (long n = 0; n < basis->p; ++n) {
            CycloNum a = CycloNum::zeta(field, step * (basis->r * n - basis->q * m));
            CycloNum d = CycloNum::zeta(field, step * basis->p * m);
            Mat2Cyclo tp{a, zero, zero, d};
            Mat2Cyclo t = vc * tp * vic;
            CycloNum lambda = a.pow(static_cast<long>(supp[0].first.dx)) *
                              d.pow(static_cast<long>(supp[0].first.dy));
            auto verified = cyclo_proportionality(curve.poly(), t);
            if (!verified || !(*verified == lambda))
                throw InternalInvariant("a lattice solution failed exact verification");
            certs.push_back(make_cyclo_certificate(t, lambda, prec));
        }
    return certs;
}

/*
 * Recognize each entry as zeta_n^j * (Gaussian rational). That covers the
 * matrices of curves in standard position, whose entries are root-of-unity
 * multiples of exact numbers; generic cyclotomic entries (as produced by
 * conjugating such a curve) stay at the numeric level instead.
 */
std::optional<Mat2Cyclo> recognize_cyclo(const Mat2C& t, unsigned n, mpfr_prec_t prec, const BigFloat& tol) {
    const CycloField& field = CycloField::get(n);
    auto recognize = [&](const NumericComplex& z) -> std::optional<CycloNum> {
        for (unsigned j = 0; j < n; ++j) {
            NumericComplex w = z * unit_circle(-static_cast<long>(j), static_cast<long>(n), prec);
            auto g = reconstruct_gaussian(w);
            if (g && NumericComplex::close(g->to_numeric(prec), w, tol))
                return CycloNum::zeta(field, static_cast<long>(j)) * CycloNum::embed(field, *g);
        }
        return std::nullopt;
    };
    auto a = recognize(t.a);
    if (!a) return std::nullopt;
    auto b = recognize(t.b);
    if (!b) return std::nullopt;
    auto c = recognize(t.c);
    if (!c) return std::nullopt;
    auto d = recognize(t.d);
    if (!d) return std::nullopt;
    return Mat2Cyclo{*a, *b, *c, *d};
}

/// Promote a numerically verified candidate to the strongest level that
/// reverifies it by exact substitution: Q(i) first, then the cyclotomic
/// tower in ascending order.
AutCertificate certify(const Curve& curve, const Mat2C& t, const NumericComplex& lambda,
                       mpfr_prec_t prec, const BigFloat& tol) {
    AutCertificate cert;
    cert.kind = CertKind::Numeric;
    cert.matrix_numeric = t;
    cert.lambda_numeric = lambda;

    auto ga = reconstruct_gaussian(t.a), gb = reconstruct_gaussian(t.b),
         gc = reconstruct_gaussian(t.c), gd = reconstruct_gaussian(t.d);
    if (ga && gb && gc && gd) {
        Mat2Q te{*ga, *gb, *gc, *gd};
        Mat2C shadow = to_numeric(te, prec);
        bool matches = NumericComplex::close(shadow.a, t.a, tol) && NumericComplex::close(shadow.b, t.b, tol) &&
                       NumericComplex::close(shadow.c, t.c, tol) && NumericComplex::close(shadow.d, t.d, tol);
        if (matches && !te.det().is_zero()) {
            if (auto le = is_automorphism(curve, te)) {
                cert.kind = CertKind::Exact;
                cert.matrix_exact = te;
                cert.lambda_exact = *le;
                cert.matrix_numeric = shadow;
                cert.lambda_numeric = le->to_numeric(prec);
                return cert;
            }
        }
    }
    for (unsigned n : {8u, 12u, 16u, 20u, 24u, 28u, 32u, 36u, 40u, 44u, 48u}) {
        auto tc = recognize_cyclo(t, n, prec, tol);
        if (!tc) continue;
        auto lc = cyclo_proportionality(curve.poly(), *tc);
        if (!lc) continue;
        cert.kind = CertKind::Cyclotomic;
        cert.matrix_cyclo = *tc;
        cert.lambda_cyclo = *lc;
        cert.matrix_numeric = Mat2C{tc->a.to_complex(prec), tc->b.to_complex(prec),
                                    tc->c.to_complex(prec), tc->d.to_complex(prec)};
        cert.lambda_numeric = lc->to_complex(prec);
        return cert;
    }
    return cert;
}

int kind_rank(CertKind k) {
    switch (k) {
        case CertKind::Exact: return 0;
        case CertKind::Cyclotomic: return 1;
        case CertKind::Numeric: return 2;
    }
    return 2;
}

bool mat_close(const Mat2C& x, const Mat2C& y, const BigFloat& tol) {
    return NumericComplex::close(x.a, y.a, tol) && NumericComplex::close(x.b, y.b, tol) &&
           NumericComplex::close(x.c, y.c, tol) && NumericComplex::close(x.d, y.d, tol);
}

std::vector<AutCertificate> dedup_certificates(std::vector<AutCertificate> in, const BigFloat& tol) {
    std::vector<AutCertificate> out;
    for (auto& cert : in) {
        bool dup = false;
        for (auto& kept : out) {
            if (mat_close(kept.matrix_numeric, cert.matrix_numeric, tol)) {
                if (kind_rank(cert.kind) < kind_rank(kept.kind)) kept = cert;
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(std::move(cert));
    }
    return out;
}

void sort_certificates(std::vector<AutCertificate>& certs) {
    std::sort(certs.begin(), certs.end(), [](const AutCertificate& x, const AutCertificate& y) {
        const NumericComplex* xs[4] = {&x.matrix_numeric.a, &x.matrix_numeric.b,
                                       &x.matrix_numeric.c, &x.matrix_numeric.d};
        const NumericComplex* ys[4] = {&y.matrix_numeric.a, &y.matrix_numeric.b,
                                       &y.matrix_numeric.c, &y.matrix_numeric.d};
        for (int t = 0; t < 4; ++t) {
            if (NumericComplex::lex_less(*xs[t], *ys[t])) return true;
            if (NumericComplex::lex_less(*ys[t], *xs[t])) return false;
        }
        return false;
    });
}

/// The enumerated set must be a group; anything else is a bug or a
/// misclassified input worth keeping.
void verify_group_axioms(const std::vector<AutCertificate>& certs, mpfr_prec_t prec) {
    BigFloat tol = default_tolerance(prec);
    auto member = [&](const Mat2C& m) {
        for (const auto& cert : certs)
            if (mat_close(cert.matrix_numeric, m, tol)) return true;
        return false;
    };
    Mat2C id{NumericComplex::from_longs(1, 0, prec), NumericComplex::from_longs(0, 0, prec),
             NumericComplex::from_longs(0, 0, prec), NumericComplex::from_longs(1, 0, prec)};
    if (!member(id)) throw InternalInvariant("the symmetry list lost the identity");
    for (const auto& x : certs) {
        if (!member(x.matrix_numeric.inverse()))
            throw InternalInvariant("the symmetry list is not closed under inversion");
        for (const auto& y : certs)
            if (!member(x.matrix_numeric * y.matrix_numeric))
                throw InternalInvariant("the symmetry list is not closed under composition");
    }
}

} // namespace

unsigned AutCertificate::cyclotomic_order() const {
    if (kind == CertKind::Exact) return 4;
    if (kind == CertKind::Cyclotomic) return matrix_cyclo->a.field().order();
    return 0;
}

std::string AutCertificate::str() const {
    std::ostringstream os;
    switch (kind) {
        case CertKind::Exact:
            os << "[[" << matrix_exact->a.str() << ", " << matrix_exact->b.str() << "], ["
               << matrix_exact->c.str() << ", " << matrix_exact->d.str() << "]] lambda "
               << lambda_exact->str();
            break;
        case CertKind::Cyclotomic:
            os << "Q(zeta_" << matrix_cyclo->a.field().order() << "): [[" << matrix_cyclo->a.str()
               << ", " << matrix_cyclo->b.str() << "], [" << matrix_cyclo->c.str() << ", "
               << matrix_cyclo->d.str() << "]] lambda " << lambda_cyclo->str();
            break;
        case CertKind::Numeric:
            os << "numeric: [[" << matrix_numeric.a.to_string(8) << ", " << matrix_numeric.b.to_string(8)
               << "], [" << matrix_numeric.c.to_string(8) << ", " << matrix_numeric.d.to_string(8)
               << "]] lambda " << lambda_numeric.to_string(8);
            break;
    }
    return os.str();
}

ScalingReport scaling_automorphisms(const Curve& c, mpfr_prec_t prec) {
    auto comps = homogeneous_components(c.poly());
    ScalingReport report;
    if (comps.size() == 1) {
        report.infinite = true;
        return report;
    }
    /*
     * f(alpha x, alpha y) scales component e by alpha^e, so alpha works
     * exactly when alpha^(e_t - e_0) = 1 for all t: the g-th roots of
     * unity, g the gcd of the degree gaps.
     */
    long g = 0;
    long e0 = static_cast<long>(comps.front().degree);
    for (size_t t = 1; t < comps.size(); ++t)
        g = std::gcd(g, static_cast<long>(comps[t].degree) - e0);
    report.order = static_cast<unsigned>(g);
    for (long k = 0; k < g; ++k) {
        if ((4 * k) % g == 0)
            report.factors.emplace_back(GaussianRational::unit_i().pow(4 * k / g));
        else
            report.factors.emplace_back(unit_circle(k, g, prec));
    }
    return report;
}

std::optional<GaussianRational> is_automorphism(const Curve& c, const Mat2Q& t) {
    if (t.det().is_zero()) throw SingularMatrix("symmetry test needs an invertible matrix");
    const BiPoly& f = c.poly();
    BiPoly image = f.substitute_linear(t.a, t.b, t.c, t.d);
    if (image.terms.size() != f.terms.size()) return std::nullopt;
    std::optional<GaussianRational> lambda;
    for (const auto& [m, v] : f.terms) {
        GaussianRational w = image.coeff(m.dx, m.dy);
        if (w.is_zero()) return std::nullopt;
        GaussianRational ratio = w / v;
        if (!lambda)
            lambda = ratio;
        else if (*lambda != ratio)
            return std::nullopt;
    }
    return lambda;
}

std::optional<CycloNum> is_automorphism(const Curve& c, const Mat2Cyclo& t) {
    if (t.det().is_zero()) throw SingularMatrix("symmetry test needs an invertible matrix");
    return cyclo_proportionality(c.poly(), t);
}

std::optional<NumericComplex> is_automorphism(const Curve& c, const Mat2C& t, const BigFloat& tol) {
    mpfr_prec_t prec = std::max({t.a.precision(), t.b.precision(), t.c.precision(), t.d.precision()});
    return proportional_terms(c.poly(), substitute_numeric(c.poly(), t, prec), prec, tol);
}

AutGroup enumerate_automorphisms(const Curve& c, mpfr_prec_t prec) {
    SpecialVerdict v = c.classify(prec);
    if (v.tag == CurveClass::NotIrreducible)
        throw Error("symmetry enumeration needs an irreducible curve: " + v.reason);
    if (v.tag == CurveClass::Unknown) throw InternalInvariant("classification returned unknown");

    AutGroup group;
    if (v.tag == CurveClass::Line || v.tag == CurveClass::Special) {
        group.infinite = true;
        InfiniteFamily fam;
        fam.k = v.k;
        fam.l = v.l;
        fam.witness = v.witness;
        fam.witness_numeric = v.witness_numeric;
        if (!fam.witness_numeric && fam.witness) fam.witness_numeric = to_numeric(*fam.witness, prec);
        fam.description = v.tag == CurveClass::Line
                              ? "every line carries an infinite stabilizer of linear maps"
                              : "alpha -> W diag(alpha^l, alpha^k) W^-1 with f(W x) = s * model(x)";
        group.family = std::move(fam);
        return group;
    }

    auto comps = homogeneous_components(c.poly());
    auto reg = direction_registry(comps, prec);
    if (reg.size() <= 1)
        throw Error("all asymptotic directions coincide; the curve is built from a single branch "
                    "direction and cannot be irreducible");

    BigFloat tol = default_tolerance(prec);
    std::vector<AutCertificate> certs;
    if (reg.size() == 2) {
        std::vector<Mat2C> overflow;
        certs = lattice_lane(c, comps, reg, prec, overflow);
        for (const auto& t : overflow)
            if (auto lambda = is_automorphism(c, t, tol)) certs.push_back(certify(c, t, *lambda, prec, tol));
    } else {
        for (const auto& t : moebius_candidates(comps, reg, prec))
            if (auto lambda = is_automorphism(c, t, tol)) certs.push_back(certify(c, t, *lambda, prec, tol));
    }

    certs = dedup_certificates(std::move(certs), tol);
    sort_certificates(certs);
    verify_group_axioms(certs, prec);
    group.certificates = std::move(certs);
    return group;
}

Mat2Q graph_transform(const Point& pi, const Point& pj, const Point& pk, const Point& pl) {
    auto row = [](const Point& p) -> std::pair<GaussianRational, GaussianRational> {
        if (p.x.mode() != Mode::Exact || p.y.mode() != Mode::Exact)
            throw ModeMismatch("graph transforms need exact points");
        return {p.x.exact(), p.y.exact()};
    };
    auto [ix, iy] = row(pi);
    auto [jx, jy] = row(pj);
    auto [kx, ky] = row(pk);
    auto [lx, ly] = row(pl);
    Mat2Q nik{ix, iy, kx, ky};
    Mat2Q njl{jx, jy, lx, ly};
    if (njl.det().is_zero()) throw SingularNjl();
    return njl.inverse() * nik;
}

BadPairReport detect_bad_pairs(const PointSet& s, const Curve& c) {
    if (s.mode != Mode::Exact) throw ModeMismatch("bad-pair detection needs exact points");
    const size_t m = s.points.size();
    BadPairReport report;
    report.pair_count = m > 1 ? m * (m - 1) : 0;
    if (m < 2) return report;

    std::vector<std::pair<GaussianRational, GaussianRational>> pts;
    pts.reserve(m);
    for (const auto& p : s.points) pts.emplace_back(p.x.exact(), p.y.exact());

    using MatKey = std::array<GaussianRational, 4>;
    struct MatKeyLess {
        bool operator()(const MatKey& x, const MatKey& y) const {
            for (int t = 0; t < 4; ++t)
                if (x[t] != y[t]) return lex_less(x[t], y[t]);
            return false;
        }
    };
    std::map<MatKey, bool, MatKeyLess> memo;

    auto symmetric = [&](const Mat2Q& t) {
        MatKey key{t.a, t.b, t.c, t.d};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool hit = is_automorphism(c, t).has_value();
        memo.emplace(std::move(key), hit);
        if (hit) ++report.automorphisms_hit;
        return hit;
    };

    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            bool bad = false;
            for (size_t k = 0; k < m && !bad; ++k) {
                if (k == i) continue;
                for (size_t l = 0; l < m && !bad; ++l) {
                    if (l == j || l == k) continue;
                    Mat2Q njl{pts[j].first, pts[j].second, pts[l].first, pts[l].second};
                    if (njl.det().is_zero()) continue;
                    Mat2Q nik{pts[i].first, pts[i].second, pts[k].first, pts[k].second};
                    if (nik.det().is_zero()) continue;
                    if (symmetric(njl.inverse() * nik)) bad = true;
                }
            }
            if (bad) report.bad.push_back({i, j});
        }
    return report;
}

} // namespace bilab
