#include "bilab/curve.hpp"

#include <algorithm>
#include <numeric>

namespace bilab {

std::string curve_class_name(CurveClass c) {
    switch (c) {
        case CurveClass::Line: return "Line";
        case CurveClass::Special: return "Special";
        case CurveClass::NotSpecial: return "NotSpecial";
        case CurveClass::NotIrreducible: return "NotIrreducible";
        case CurveClass::Unknown: return "Unknown";
    }
    return "Unknown";
}

Curve::Curve(BiPoly f) : f_(std::move(f)) {
    if (f_.is_zero()) throw ZeroPolynomial("curve polynomial is zero");
    if (f_.total_degree() < 1) throw Error("curve polynomial is constant");
    f_ = f_.normalized();
}

bool Curve::contains(const Scalar& x, const Scalar& y, const std::optional<BigFloat>& tol) const {
    if (x.mode() != y.mode()) throw ModeMismatch("point mixes exact and numeric coordinates");
    if (x.is_exact()) return f_.eval(x.exact(), y.exact()).is_zero();
    const NumericComplex& nx = x.numeric();
    const NumericComplex& ny = y.numeric();
    BigFloat bound = tol ? *tol : default_tolerance(std::max(nx.precision(), ny.precision()));
    return f_.eval(nx, ny).abs() <= bound;
}

DirectionProfile Curve::direction_profile(mpfr_prec_t prec) const {
    auto comps = homogeneous_components(f_);
    DirectionProfile out;
    const BiPoly& top = comps.back().part;
    out.asymptotes = directions(top, prec);
    BiPoly rad_top = radical_of_homogeneous(top);
    if (contains_origin()) {
        const BiPoly& low = comps.front().part;
        out.tangents = directions(low, prec);
        BiPoly rad_low = radical_of_homogeneous(low);
        BiPoly shared = bipoly_gcd(rad_top, rad_low);
        out.distinct_union = static_cast<unsigned>(rad_top.total_degree() + rad_low.total_degree() -
                                                   shared.total_degree());
    } else {
        out.distinct_union = static_cast<unsigned>(rad_top.total_degree());
    }
    return out;
}

Curve Curve::image(const Mat2Q& m) const {
    if (m.det().is_zero()) throw SingularMatrix("curve image needs an invertible matrix");
    Mat2Q inv = m.inverse();
    return Curve(f_.substitute_linear(inv.a, inv.b, inv.c, inv.d));
}

BiPoly special_model(long k, long l) {
    if (k <= 0 || l == 0) throw Error("special model needs k > 0 and l != 0");
    if (l > 0)
        return BiPoly::monomial(static_cast<unsigned>(k), 0, GaussianRational(1)) -
               BiPoly::monomial(0, static_cast<unsigned>(l), GaussianRational(1));
    return BiPoly::monomial(static_cast<unsigned>(k), static_cast<unsigned>(-l), GaussianRational(1)) -
           BiPoly::constant(GaussianRational(1));
}

namespace {

/// a*u + b*v = gcd(a, b) for a, b >= 0.
void ext_gcd(long a, long b, long& u, long& v) {
    if (b == 0) {
        u = 1;
        v = 0;
        return;
    }
    long u1 = 0, v1 = 0;
    ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
}

/// Vector along a direction: (0,1) for vertical, (1, slope) otherwise.
std::pair<GaussianRational, GaussianRational> dir_vector(const Direction& d) {
    if (d.vertical) return {GaussianRational(0), GaussianRational(1)};
    return {GaussianRational(1), d.slope};
}

/// The linear form vanishing on the direction: x for vertical, s*x - y else.
BiPoly dir_form(const Direction& d) {
    if (d.vertical) return BiPoly::var_x();
    return BiPoly::monomial(1, 0, d.slope) - BiPoly::var_y();
}

GaussianRational eval_form(const BiPoly& linear, const std::pair<GaussianRational, GaussianRational>& v) {
    return linear.eval(v.first, v.second);
}

/// H = alpha * P expected exactly; anything else is a broken invariant.
GaussianRational match_scale(const BiPoly& h, const BiPoly& p) {
    if (h.terms.size() != p.terms.size() || h.is_zero())
        throw InternalInvariant("form does not match its reconstructed factorization");
    GaussianRational alpha = h.terms.begin()->second * p.terms.begin()->second.inverse();
    if (h != p.scaled(alpha))
        throw InternalInvariant("form does not match its reconstructed factorization");
    return alpha;
}

SpecialVerdict origin_branch(const BiPoly& f, const BiPoly& lo, unsigned e_lo, const BiPoly& hi,
                             unsigned e_hi) {
    SpecialVerdict out;
    BiPoly rad_lo = radical_of_homogeneous(lo);
    BiPoly rad_hi = radical_of_homogeneous(hi);
    if (rad_lo.total_degree() != 1 || rad_hi.total_degree() != 1) {
        out.tag = CurveClass::NotSpecial;
        out.irreducibility_assumed = true;
        out.reason = "a bounding form has more than one direction";
        return out;
    }
    if (rad_lo == rad_hi) {
        out.tag = CurveClass::NotIrreducible;
        out.reason = "both components are powers of one line, which factors out";
        return out;
    }
    long k = static_cast<long>(e_lo), l = static_cast<long>(e_hi);
    if (std::gcd(k, l) != 1) {
        out.tag = CurveClass::NotIrreducible;
        out.reason = "component degrees share a factor, so the curve splits";
        return out;
    }

    /*
     * f = a1*L1^k + a2*L2^l. Send the L2 direction to the x-axis image and
     * the L1 direction to the y-axis image: columns of W lie along those
     * directions, scaled so that f(Wx) = lambda*(x^k - y^l). The scale
     * equation a1*mu1^k = -a2*mu2^l has the one-parameter family of
     * solutions mu1 = rho^u, mu2 = rho^(-v) with k*u + l*v = 1 and
     * rho = -a2/a1, all inside Q(i) because gcd(k, l) = 1.
     */
    GaussianRational a1 = match_scale(lo, rad_lo.pow(e_lo));
    GaussianRational a2 = match_scale(hi, rad_hi.pow(e_hi));
    GaussianRational p1 = rad_lo.coeff(1, 0), q1 = rad_lo.coeff(0, 1);
    GaussianRational p2 = rad_hi.coeff(1, 0), q2 = rad_hi.coeff(0, 1);
    std::pair<GaussianRational, GaussianRational> v_lo{q1, -p1}, v_hi{q2, -p2};

    long u = 0, v = 0;
    ext_gcd(k, l, u, v);
    GaussianRational rho = -(a2 * a1.inverse());
    GaussianRational mu1 = rho.pow(u), mu2 = rho.pow(-v);
    GaussianRational t1 = mu1 * eval_form(rad_lo, v_hi).inverse();
    GaussianRational t2 = mu2 * eval_form(rad_hi, v_lo).inverse();

    Mat2Q w{t1 * v_hi.first, t2 * v_lo.first, t1 * v_hi.second, t2 * v_lo.second};
    GaussianRational lambda = a1 * mu1.pow(k);
    if (f.substitute_linear(w.a, w.b, w.c, w.d) != special_model(k, l).scaled(lambda))
        throw InternalInvariant("special witness failed its substitution check");

    out.tag = CurveClass::Special;
    out.k = k;
    out.l = l;
    out.witness = w;
    out.scale = lambda;
    out.witness_exact = true;
    out.reason = "both bounding forms are powers of single lines with coprime degrees";
    return out;
}

SpecialVerdict hyperbola_exact(const BiPoly& f, const GaussianRational& c, const Direction& dk,
                               unsigned mk, const Direction& dm, unsigned mm, const BiPoly& hi) {
    BiPoly lk = dir_form(dk), lm = dir_form(dm);
    GaussianRational alpha = match_scale(hi, lk.pow(mk) * lm.pow(mm));

    long big = static_cast<long>(mk), small = static_cast<long>(mm);
    long u = 0, v = 0;
    ext_gcd(big, small, u, v);
    GaussianRational rho = -(c * alpha.inverse());
    GaussianRational mu1 = rho.pow(u), mu2 = rho.pow(v);
    auto v_k = dir_vector(dk), v_m = dir_vector(dm);
    GaussianRational t1 = mu1 * eval_form(lk, v_m).inverse();
    GaussianRational t2 = mu2 * eval_form(lm, v_k).inverse();

    Mat2Q w{t1 * v_m.first, t2 * v_k.first, t1 * v_m.second, t2 * v_k.second};
    GaussianRational lambda = -c;
    if (f.substitute_linear(w.a, w.b, w.c, w.d) != special_model(big, -small).scaled(lambda))
        throw InternalInvariant("special witness failed its substitution check");

    SpecialVerdict out;
    out.tag = CurveClass::Special;
    out.k = big;
    out.l = -small;
    out.witness = w;
    out.scale = lambda;
    out.witness_exact = true;
    out.reason = "the top form is a product of two line powers with coprime multiplicities";
    return out;
}

struct NumDir {
    NumericComplex x, y;       // direction vector
    NumericComplex px, py;     // linear form p*x + q*y vanishing on it
    unsigned mult;
};

NumDir numeric_dir_exact(const Direction& d, unsigned mult, mpfr_prec_t prec) {
    auto v = dir_vector(d);
    BiPoly form = dir_form(d);
    return {v.first.to_numeric(prec), v.second.to_numeric(prec),
            form.coeff(1, 0).to_numeric(prec), form.coeff(0, 1).to_numeric(prec), mult};
}

NumDir numeric_dir_slope(const NumericComplex& slope, unsigned mult, mpfr_prec_t prec) {
    NumericComplex one = NumericComplex::from_longs(1, 0, prec);
    NumericComplex neg1 = NumericComplex::from_longs(-1, 0, prec);
    return {one, slope, slope, neg1, mult};
}

SpecialVerdict hyperbola_numeric(const BiPoly& f, const GaussianRational& c, const NumDir& dk,
                                 const NumDir& dm, const BiPoly& hi, mpfr_prec_t prec) {
    BigFloat tol = default_tolerance(prec);
    auto embed = [prec](const GaussianRational& g) { return g.to_numeric(prec); };
    auto form_eval = [](const NumDir& form, const NumDir& at) {
        return form.px * at.x + form.py * at.y;
    };

    // L_K^K * L_m^M as the image of x^K y^M under the matrix of form rows;
    // alpha is the coefficient ratio against hi, verified across all terms.
    auto prod = substitute_matrix<NumericComplex>(
        BiPoly::monomial(static_cast<unsigned>(dk.mult), static_cast<unsigned>(dm.mult),
                         GaussianRational(1)),
        dk.px, dk.py, dm.px, dm.py, embed);
    auto lead = hi.terms.begin();
    auto pit = prod.find(lead->first);
    if (pit == prod.end() || pit->second.is_zero())
        throw InternalInvariant("numeric factorization lost the leading coefficient");
    NumericComplex alpha = embed(lead->second) / pit->second;
    for (const auto& [m, hv] : hi.terms) {
        auto q = prod.find(m);
        NumericComplex pv = q == prod.end() ? NumericComplex(prec) : q->second;
        if (!NumericComplex::close(pv * alpha, embed(hv), tol))
            throw InternalInvariant("numeric factorization mismatch on the top form");
    }

    long big = static_cast<long>(dk.mult), small = static_cast<long>(dm.mult);
    long u = 0, v = 0;
    ext_gcd(big, small, u, v);
    NumericComplex rho = -(embed(c) / alpha);
    NumericComplex mu1 = rho.pow_i(u), mu2 = rho.pow_i(v);
    NumericComplex t1 = mu1 / form_eval(dk, dm);
    NumericComplex t2 = mu2 / form_eval(dm, dk);

    Mat2C w{t1 * dm.x, t2 * dk.x, t1 * dm.y, t2 * dk.y};
    NumericComplex lambda = -embed(c);

    auto sub = substitute_matrix<NumericComplex>(f, w.a, w.b, w.c, w.d, embed);
    BiPoly model = special_model(big, -small);
    for (const auto& [m, mv] : model.terms) {
        auto it = sub.find(m);
        NumericComplex got = it == sub.end() ? NumericComplex(prec) : it->second;
        if (!NumericComplex::close(got, embed(mv) * lambda, tol))
            throw InternalInvariant("numeric special witness failed its substitution check");
    }
    for (const auto& [m, sv] : sub)
        if (model.terms.find(m) == model.terms.end() && sv.abs() > tol)
            throw InternalInvariant("numeric special witness left extra terms");

    SpecialVerdict out;
    out.tag = CurveClass::Special;
    out.k = big;
    out.l = -small;
    out.witness_numeric = w;
    out.scale_numeric = lambda;
    out.witness_exact = false;
    out.reason = "the top form splits into two line powers with directions outside Q(i)";
    return out;
}

SpecialVerdict constant_branch(const BiPoly& f, const BiPoly& lo, const BiPoly& hi,
                               mpfr_prec_t prec) {
    SpecialVerdict out;
    DirectionSet ds = directions(hi, prec);

    unsigned g0 = 0;
    for (const auto& [d, m] : ds.exact) g0 = std::gcd(g0, m);
    for (const auto& [d, m] : ds.numeric) g0 = std::gcd(g0, m);
    if (g0 >= 2) {
        out.tag = CurveClass::NotIrreducible;
        out.reason = "the top form is a perfect power, so the curve splits";
        return out;
    }
    if (ds.distinct_count() != 2) {
        out.tag = CurveClass::NotSpecial;
        out.irreducibility_assumed = true;
        out.reason = "the top form has " + std::to_string(ds.distinct_count()) +
                     " distinct directions instead of two";
        return out;
    }

    GaussianRational c = lo.coeff(0, 0);
    if (ds.exact.size() == 2) {
        auto [d1, m1] = ds.exact[0];
        auto [d2, m2] = ds.exact[1];
        if (m1 >= m2) return hyperbola_exact(f, c, d1, m1, d2, m2, hi);
        return hyperbola_exact(f, c, d2, m2, d1, m1, hi);
    }

    std::vector<NumDir> nd;
    for (const auto& [d, m] : ds.exact) nd.push_back(numeric_dir_exact(d, m, prec));
    for (const auto& [s, m] : ds.numeric) nd.push_back(numeric_dir_slope(s, m, prec));
    if (nd[0].mult < nd[1].mult) std::swap(nd[0], nd[1]);
    return hyperbola_numeric(f, c, nd[0], nd[1], hi, prec);
}

} // namespace

SpecialVerdict Curve::classify(mpfr_prec_t prec) const {
    SpecialVerdict out;
    if (degree() == 1) {
        out.tag = CurveClass::Line;
        out.k = 1;
        out.l = 1;
        out.reason = "degree one";
        return out;
    }

    unsigned min_dx = f_.terms.begin()->first.dx, min_dy = f_.terms.begin()->first.dy;
    for (const auto& [m, v] : f_.terms) {
        min_dx = std::min(min_dx, m.dx);
        min_dy = std::min(min_dy, m.dy);
    }
    if (min_dx > 0 || min_dy > 0) {
        out.tag = CurveClass::NotIrreducible;
        out.reason = "a coordinate axis factor divides the polynomial";
        return out;
    }

    auto comps = homogeneous_components(f_);
    if (comps.size() == 1) {
        out.tag = CurveClass::NotIrreducible;
        out.reason = "homogeneous of degree at least two, a union of lines through the origin";
        return out;
    }
    if (comps.size() == 2) {
        const auto& lo = comps.front();
        const auto& hi = comps.back();
        if (lo.degree == 0) return constant_branch(f_, lo.part, hi.part, prec);
        return origin_branch(f_, lo.part, lo.degree, hi.part, hi.degree);
    }

    out.tag = CurveClass::NotSpecial;
    out.irreducibility_assumed = true;
    out.reason = "more than two homogeneous components";
    return out;
}

} // namespace bilab
