#include "bilab/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bilab {

BiPoly BiPoly::constant(GaussianRational v) {
    BiPoly p;
    if (!v.is_zero()) p.terms.emplace(Monomial{0, 0}, std::move(v));
    return p;
}

BiPoly BiPoly::monomial(unsigned dx, unsigned dy, GaussianRational coeff) {
    BiPoly p;
    if (!coeff.is_zero()) p.terms.emplace(Monomial{dx, dy}, std::move(coeff));
    return p;
}

int BiPoly::total_degree() const {
    if (terms.empty()) return -1;
    return static_cast<int>(std::prev(terms.end())->first.total());
}

int BiPoly::low_degree() const {
    if (terms.empty()) return -1;
    return static_cast<int>(terms.begin()->first.total());
}

bool BiPoly::is_homogeneous() const {
    return terms.empty() || terms.begin()->first.total() == std::prev(terms.end())->first.total();
}

GaussianRational BiPoly::coeff(unsigned dx, unsigned dy) const {
    auto it = terms.find(Monomial{dx, dy});
    return it == terms.end() ? GaussianRational(0) : it->second;
}

void BiPoly::add_term(Monomial m, const GaussianRational& v) {
    if (v.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) terms.erase(it);
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [m, v] : b.terms) r.add_term(m, v);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [m, v] : b.terms) r.add_term(m, -v);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, va] : a.terms)
        for (const auto& [mb, vb] : b.terms)
            r.add_term(Monomial{ma.dx + mb.dx, ma.dy + mb.dy}, va * vb);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, v] : r.terms) v = -v;
    return r;
}

BiPoly BiPoly::scaled(const GaussianRational& s) const {
    if (s.is_zero()) return {};
    BiPoly r = *this;
    for (auto& [m, v] : r.terms) v *= s;
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly acc = constant(GaussianRational(1));
    BiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

template <typename K>
static K eval_terms(const BiPoly& f, const K& x, const K& y, const K& zero, const K& one) {
    unsigned max_dx = 0, max_dy = 0;
    for (const auto& [m, v] : f.terms) {
        max_dx = std::max(max_dx, m.dx);
        max_dy = std::max(max_dy, m.dy);
    }
    std::vector<K> px{one}, py{one};
    for (unsigned k = 1; k <= max_dx; ++k) px.push_back(px.back() * x);
    for (unsigned k = 1; k <= max_dy; ++k) py.push_back(py.back() * y);
    K acc = zero;
    for (const auto& [m, v] : f.terms) acc = acc + px[m.dx] * py[m.dy] * K(v);
    return acc;
}

GaussianRational BiPoly::eval(const GaussianRational& x, const GaussianRational& y) const {
    return eval_terms<GaussianRational>(*this, x, y, GaussianRational(0), GaussianRational(1));
}

NumericComplex BiPoly::eval(const NumericComplex& x, const NumericComplex& y) const {
    mpfr_prec_t prec = std::max(x.precision(), y.precision());
    unsigned max_dx = 0, max_dy = 0;
    for (const auto& [m, v] : terms) {
        max_dx = std::max(max_dx, m.dx);
        max_dy = std::max(max_dy, m.dy);
    }
    std::vector<NumericComplex> px{NumericComplex::from_longs(1, 0, prec)};
    std::vector<NumericComplex> py{NumericComplex::from_longs(1, 0, prec)};
    for (unsigned k = 1; k <= max_dx; ++k) px.push_back(px.back() * x);
    for (unsigned k = 1; k <= max_dy; ++k) py.push_back(py.back() * y);
    NumericComplex acc(prec);
    for (const auto& [m, v] : terms) acc = acc + px[m.dx] * py[m.dy] * v.to_numeric(prec);
    return acc;
}

BiPoly BiPoly::derivative_x() const {
    BiPoly r;
    for (const auto& [m, v] : terms)
        if (m.dx > 0) r.add_term(Monomial{m.dx - 1, m.dy}, GaussianRational(static_cast<long>(m.dx)) * v);
    return r;
}

BiPoly BiPoly::derivative_y() const {
    BiPoly r;
    for (const auto& [m, v] : terms)
        if (m.dy > 0) r.add_term(Monomial{m.dx, m.dy - 1}, GaussianRational(static_cast<long>(m.dy)) * v);
    return r;
}

BiPoly BiPoly::swap_xy() const {
    BiPoly r;
    for (const auto& [m, v] : terms) r.terms.emplace(Monomial{m.dy, m.dx}, v);
    return r;
}

BiPoly BiPoly::substitute_linear(const GaussianRational& a, const GaussianRational& b,
                                 const GaussianRational& c, const GaussianRational& d) const {
    auto out = substitute_matrix<GaussianRational>(*this, a, b, c, d,
                                                   [](const GaussianRational& g) { return g; });
    BiPoly r;
    r.terms = std::move(out);
    return r;
}

BiPoly BiPoly::normalized() const {
    if (is_zero()) return {};
    return scaled(terms.begin()->second.inverse());
}

BiPoly BiPoly::divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("bivariate division by zero");
    BiPoly q, r = a;
    const auto& [mb, cb] = *std::prev(b.terms.end());
    GaussianRational inv = cb.inverse();
    while (!r.is_zero()) {
        const auto& [mr, cr] = *std::prev(r.terms.end());
        if (mb.dx > mr.dx || mb.dy > mr.dy) throw Error("inexact bivariate division");
        Monomial m{mr.dx - mb.dx, mr.dy - mb.dy};
        GaussianRational f = cr * inv;
        q.add_term(m, f);
        r = r - BiPoly::monomial(m.dx, m.dy, f) * b;
    }
    return q;
}

std::vector<HomogeneousPart> homogeneous_components(const BiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("homogeneous components of zero polynomial");
    std::map<unsigned, BiPoly> by_degree;
    for (const auto& [m, v] : f.terms) by_degree[m.total()].add_term(m, v);
    std::vector<HomogeneousPart> out;
    for (auto& [deg, part] : by_degree) out.push_back({deg, std::move(part)});
    return out;
}

/*
 * Views into Q(i)[x][y]: index = power of y, entry = x-polynomial.
 */
namespace {

using YView = std::vector<UniPoly>;

void ytrim(YView& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

YView to_yview(const BiPoly& f) {
    YView out;
    for (const auto& [m, c] : f.terms) {
        if (out.size() <= m.dy) out.resize(m.dy + 1);
        auto& u = out[m.dy];
        if (u.c.size() <= m.dx) u.c.resize(m.dx + 1, GaussianRational(0));
        u.c[m.dx] = c;
    }
    for (auto& u : out) u.normalize();
    ytrim(out);
    return out;
}

BiPoly from_yview(const YView& v) {
    BiPoly out;
    for (size_t j = 0; j < v.size(); ++j)
        for (size_t i = 0; i < v[j].c.size(); ++i)
            out.add_term(Monomial{static_cast<unsigned>(i), static_cast<unsigned>(j)}, v[j].c[i]);
    return out;
}

UniPoly ycontent(const YView& v) {
    UniPoly g;
    for (const auto& u : v)
        if (!u.is_zero()) g = UniPoly::gcd_monic(g, u);
    return g;
}

YView ydivide(const YView& v, const UniPoly& d) {
    YView out;
    out.reserve(v.size());
    for (const auto& u : v) out.push_back(u.is_zero() ? UniPoly() : UniPoly::divide_exact(u, d));
    return out;
}

YView yprimitive(const YView& v) {
    UniPoly ct = ycontent(v);
    return ydivide(v, ct);
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f reduced modulo g.
YView yprem(YView f, const YView& g) {
    int dg = static_cast<int>(g.size()) - 1;
    const UniPoly& lg = g.back();
    int reductions = static_cast<int>(f.size()) - 1 - dg + 1;
    while (!f.empty() && static_cast<int>(f.size()) - 1 >= dg) {
        int shift = static_cast<int>(f.size()) - 1 - dg;
        UniPoly lf = f.back();
        YView next(f.size() - 1);
        // lc(g) * f - lc(f) * y^shift * g, top terms cancel
        for (size_t j = 0; j + 1 < f.size(); ++j) next[j] = lg * f[j];
        for (int j = 0; j < dg; ++j)
            next[static_cast<size_t>(shift + j)] = next[static_cast<size_t>(shift + j)] - lf * g[static_cast<size_t>(j)];
        ytrim(next);
        f = std::move(next);
        --reductions;
    }
    // keep the multiplier at exactly lc(g)^(deg f - deg g + 1)
    for (; reductions > 0; --reductions)
        for (auto& u : f) u = u * lg;
    return f;
}

} // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? BiPoly() : b.normalized();
    if (b.is_zero()) return a.normalized();

    YView F = to_yview(a), G = to_yview(b);
    if (F.size() == 1 && G.size() == 1) {
        YView out{UniPoly::gcd_monic(F[0], G[0])};
        return from_yview(out).normalized();
    }
    if (F.size() == 1 || G.size() == 1) {
        const YView& pure = F.size() == 1 ? F : G;
        const YView& tall = F.size() == 1 ? G : F;
        YView out{UniPoly::gcd_monic(pure[0], ycontent(tall))};
        return from_yview(out).normalized();
    }

    UniPoly cF = ycontent(F), cG = ycontent(G);
    UniPoly c = UniPoly::gcd_monic(cF, cG);
    F = ydivide(F, cF);
    G = ydivide(G, cG);
    if (F.size() < G.size()) std::swap(F, G);

    while (true) {
        YView r = yprem(F, G);
        if (r.empty()) break;
        F = std::move(G);
        G = yprimitive(r);
    }
    for (auto& u : G) u = u * c;
    return from_yview(G).normalized();
}

BiPoly radical(const BiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("radical of zero polynomial");
    if (f.total_degree() == 0) return BiPoly::constant(GaussianRational(1));
    BiPoly g = bipoly_gcd(bipoly_gcd(f, f.derivative_x()), f.derivative_y());
    return BiPoly::divide_exact(f, g).normalized();
}

std::string Direction::str() const {
    if (vertical) return "(0:1)";
    return "(1:" + slope.str() + ")";
}

unsigned DirectionSet::total_multiplicity() const {
    unsigned t = 0;
    for (const auto& [d, m] : exact) t += m;
    for (const auto& [d, m] : numeric) t += m;
    return t;
}

/*
 * Homogeneous h = c x^s y^t prod (y - m_j x)^{mu_j}: the axis factors strip
 * off exactly, and the slopes m_j are the roots of u(m) = r(1, m) where r is
 * the stripped part.
 */
static void strip_axes(const BiPoly& h, unsigned& s, unsigned& t, UniPoly& u) {
    if (h.is_zero()) throw ZeroPolynomial("directions of zero polynomial");
    if (!h.is_homogeneous()) throw Error("directions need a homogeneous polynomial");
    s = h.terms.begin()->first.dx;
    t = h.terms.begin()->first.dy;
    for (const auto& [m, v] : h.terms) {
        s = std::min(s, m.dx);
        t = std::min(t, m.dy);
    }
    unsigned e = static_cast<unsigned>(h.total_degree()) - s - t;
    u = UniPoly();
    u.c.assign(e + 1, GaussianRational(0));
    for (const auto& [m, v] : h.terms) u.c[m.dy - t] = v;
    u.normalize();
}

DirectionSet directions(const BiPoly& h, mpfr_prec_t prec) {
    unsigned s = 0, t = 0;
    UniPoly u;
    strip_axes(h, s, t, u);

    DirectionSet out;
    if (s > 0) out.exact.push_back({Direction{true, GaussianRational(0)}, s});
    if (t > 0) out.exact.push_back({Direction{false, GaussianRational(0)}, t});
    if (u.degree() > 0) {
        RootSplit roots = split_roots(u, prec);
        for (const auto& [slope, mult] : roots.exact)
            out.exact.push_back({Direction{false, slope}, mult});
        out.numeric = roots.numeric;
    }
    std::sort(out.exact.begin(), out.exact.end(), [](const auto& a, const auto& b) {
        if (a.first.vertical != b.first.vertical) return a.first.vertical;
        return lex_less(a.first.slope, b.first.slope);
    });
    std::sort(out.numeric.begin(), out.numeric.end(),
              [](const auto& a, const auto& b) { return NumericComplex::lex_less(a.first, b.first); });
    return out;
}

BiPoly radical_of_homogeneous(const BiPoly& h) {
    unsigned s = 0, t = 0;
    UniPoly u;
    strip_axes(h, s, t, u);

    BiPoly out = BiPoly::monomial(s > 0 ? 1 : 0, t > 0 ? 1 : 0, GaussianRational(1));
    if (u.degree() > 0) {
        UniPoly sf = squarefree_part(u);
        unsigned d = static_cast<unsigned>(sf.degree());
        BiPoly lift;
        for (size_t j = 0; j < sf.c.size(); ++j)
            lift.add_term(Monomial{d - static_cast<unsigned>(j), static_cast<unsigned>(j)}, sf.c[j]);
        out = out * lift;
    }
    return out.normalized();
}

/*
 * Term grammar: signed sum of products; a product multiplies rationals,
 * 'i', and variable powers, '*' optional between factors.
 */
static size_t parse_exponent(const std::string& s, size_t pos, unsigned& e) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("missing exponent in polynomial: '" + s + "'");
    if (pos - start > 4) throw ParseError("exponent too large in polynomial");
    unsigned long v = std::stoul(s.substr(start, pos - start));
    if (v > 4096) throw ParseError("exponent too large in polynomial");
    e = static_cast<unsigned>(v);
    return pos;
}

BiPoly parse_bipoly(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial");

    BiPoly out;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in polynomial: '" + text + "'");
        }
        if (pos >= s.size()) throw ParseError("dangling sign in polynomial: '" + text + "'");

        GaussianRational coeff(static_cast<long>(sign));
        unsigned dx = 0, dy = 0;
        bool any_factor = false, star_pending = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            char ch = s[pos];
            if (ch == '*') {
                if (!any_factor || star_pending)
                    throw ParseError("misplaced '*' in polynomial: '" + text + "'");
                star_pending = true;
                ++pos;
                continue;
            }
            star_pending = false;
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    size_t dstart = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (pos == dstart) throw ParseError("missing denominator in polynomial: '" + text + "'");
                }
                Rational q(s.substr(start, pos - start));
                if (q.get_den() == 0) throw ParseError("zero denominator in polynomial: '" + text + "'");
                q.canonicalize();
                coeff *= GaussianRational(q);
            } else if (ch == 'i' || ch == 'I') {
                ++pos;
                unsigned e = 1;
                if (pos < s.size() && s[pos] == '^') pos = parse_exponent(s, pos + 1, e);
                coeff *= GaussianRational::unit_i().pow(static_cast<long>(e));
            } else if (ch == 'x' || ch == 'X' || ch == 'y' || ch == 'Y') {
                ++pos;
                unsigned e = 1;
                if (pos < s.size() && s[pos] == '^') pos = parse_exponent(s, pos + 1, e);
                if (ch == 'x' || ch == 'X') dx += e;
                else dy += e;
            } else {
                throw ParseError(std::string("unexpected character '") + ch + "' in polynomial: '" + text + "'");
            }
            any_factor = true;
        }
        if (!any_factor || star_pending)
            throw ParseError("empty term in polynomial: '" + text + "'");
        out.add_term(Monomial{dx, dy}, coeff);
    }
    return out;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Monomial& m = it->first;
        const GaussianRational& c = it->second;

        std::string mon;
        if (m.dx > 0) mon += m.dx == 1 ? "x" : "x^" + std::to_string(m.dx);
        if (m.dy > 0) {
            if (!mon.empty()) mon += "*";
            mon += m.dy == 1 ? "y" : "y^" + std::to_string(m.dy);
        }

        bool negative = false;
        std::string body;
        if (c.im == 0 || c.re == 0) {
            // single-component coefficient: fold its sign into the joiner
            Rational mag = c.im == 0 ? c.re : c.im;
            negative = mag < 0;
            Rational a = negative ? Rational(-mag) : mag;
            std::string unit = c.im == 0 ? "" : "i";
            if (a == 1 && (!mon.empty() || !unit.empty()))
                body = unit;
            else
                body = a.get_str() + unit;
        } else {
            body = "(" + c.str() + ")";
        }
        if (!body.empty() && !mon.empty()) body += "*";
        body += mon;

        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << body;
    }
    return os.str();
}

} // namespace bilab
