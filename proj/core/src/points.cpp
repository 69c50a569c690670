#include "bilab/points.hpp"

#include <numeric>
#include <set>
#include <utility>

namespace bilab {

std::string Point::str() const { return "(" + x.str() + ", " + y.str() + ")"; }

void PointSet::push(Point p) {
    if (p.mode() != mode) throw ModeMismatch("point mode differs from the set mode");
    points.push_back(std::move(p));
}

PointSet geometric_progression_set(long k, long l, unsigned n, const Scalar& base) {
    if (n < 1) throw Error("progression needs at least one point");
    if (k <= 0 || l == 0) throw Error("progression exponents need k > 0 and l != 0");
    long al = l < 0 ? -l : l;
    if (std::gcd(k, al) != 1) throw Error("progression exponents must be coprime");
    if (!base.is_exact()) throw Error("progression base must be exact");
    const GaussianRational& b = base.exact();
    const GaussianRational degenerate[] = {GaussianRational(0), GaussianRational(1),
                                           GaussianRational(-1), GaussianRational::unit_i(),
                                           -GaussianRational::unit_i()};
    for (const auto& u : degenerate)
        if (b == u) throw DegenerateBase("progression base must avoid 0 and the roots of unity");

    BiPoly model = special_model(k, l);
    PointSet out;
    out.mode = Mode::Exact;
    for (unsigned i = 1; i <= n; ++i) {
        long e = static_cast<long>(i);
        GaussianRational x = b.pow((l > 0 ? l : al) * e);
        GaussianRational y = b.pow((l > 0 ? k : -k) * e);
        if (!model.eval(x, y).is_zero())
            throw InternalInvariant("progression point left its model curve");
        out.push(Point(Scalar(x), Scalar(y)));
    }
    return out;
}

namespace {

/// seed+1, seed+2, ..., seed+16, then 1/2, 1/3, 3/2, 2/3, 1/4, ... (positive
/// non-integer rationals by ascending numerator+denominator).
class AbscissaStream {
public:
    explicit AbscissaStream(uint64_t seed) : offset_(static_cast<unsigned long>(seed)) {}

    Rational next() {
        if (index_ < 16) {
            ++index_;
            return Rational(mpz_class(offset_ + static_cast<long>(index_)));
        }
        for (;;) {
            ++den_;
            if (den_ >= height_) {
                ++height_;
                den_ = 2;
            }
            unsigned long num = height_ - den_;
            if (std::gcd(num, den_) == 1) return Rational(static_cast<long>(num), static_cast<long>(den_));
        }
    }

private:
    mpz_class offset_;
    unsigned index_ = 0;
    unsigned long height_ = 3;
    unsigned long den_ = 1;
};

UniPoly fiber_poly(const BiPoly& f, const GaussianRational& x0) {
    unsigned max_dx = 0, max_dy = 0;
    for (const auto& [m, v] : f.terms) {
        max_dx = std::max(max_dx, m.dx);
        max_dy = std::max(max_dy, m.dy);
    }
    std::vector<GaussianRational> px{GaussianRational(1)};
    for (unsigned j = 1; j <= max_dx; ++j) px.push_back(px.back() * x0);
    UniPoly g;
    g.c.assign(max_dy + 1, GaussianRational(0));
    for (const auto& [m, v] : f.terms) g.c[m.dy] += v * px[m.dx];
    g.normalize();
    return g;
}

struct ExactPairLess {
    bool operator()(const std::pair<GaussianRational, GaussianRational>& a,
                    const std::pair<GaussianRational, GaussianRational>& b) const {
        if (a.first != b.first) return lex_less(a.first, b.first);
        return lex_less(a.second, b.second);
    }
};

} // namespace

PointSet sample_curve_points(const Curve& c, unsigned n, Mode mode, uint64_t seed,
                             mpfr_prec_t prec) {
    if (n < 1) throw Error("sampling needs at least one point");
    PointSet out;
    out.mode = mode;
    AbscissaStream xs(seed);
    std::set<std::pair<GaussianRational, GaussianRational>, ExactPairLess> seen_exact;
    std::vector<std::pair<NumericComplex, NumericComplex>> seen_numeric;
    BigFloat tol = default_tolerance(prec);
    bool blocked_exact = false;

    auto push_exact = [&](const GaussianRational& x, const GaussianRational& y) {
        if (out.size() >= n || !seen_exact.emplace(x, y).second) return;
        out.push(Point(Scalar(x), Scalar(y)));
    };
    auto push_numeric = [&](const NumericComplex& x, const NumericComplex& y) {
        if (out.size() >= n) return;
        for (const auto& [sx, sy] : seen_numeric)
            if (NumericComplex::close(sx, x, tol) && NumericComplex::close(sy, y, tol)) return;
        if (!(c.poly().eval(x, y).abs() <= tol)) return; // reject drifted roots
        seen_numeric.emplace_back(x, y);
        out.push(Point(Scalar(x), Scalar(y)));
    };

    unsigned attempts = 64 + 4 * n;
    for (unsigned a = 0; a < attempts && out.size() < n; ++a) {
        GaussianRational x0{xs.next()};
        UniPoly g = fiber_poly(c.poly(), x0);
        if (g.degree() < 0) {
            // the whole vertical line lies on the curve; walk up it
            for (long j = 0; out.size() < n; ++j) {
                if (mode == Mode::Exact)
                    push_exact(x0, GaussianRational(j));
                else
                    push_numeric(x0.to_numeric(prec), GaussianRational(j).to_numeric(prec));
            }
            break;
        }
        if (g.degree() == 0) continue; // fiber misses the curve entirely

        RootSplit roots = split_roots(g, prec);
        if (mode == Mode::Exact) {
            if (!roots.numeric.empty()) blocked_exact = true;
            for (const auto& [y, mult] : roots.exact) push_exact(x0, y);
        } else {
            NumericComplex xn = x0.to_numeric(prec);
            for (const auto& [y, mult] : roots.exact) push_numeric(xn, y.to_numeric(prec));
            for (const auto& [y, mult] : roots.numeric) push_numeric(xn, y);
        }
    }

    if (out.size() < n) {
        if (mode == Mode::Exact && blocked_exact)
            throw ExactSamplingUnavailable(
                "sampled fibers only have roots outside Q(i); numeric mode can sample this curve");
        throw InsufficientPoints("found " + std::to_string(out.size()) + " of " +
                                 std::to_string(n) + " points over the sampled vertical lines");
    }
    return out;
}

PointSet prune_star(const PointSet& s, unsigned degree_hint) {
    (void)degree_hint; // names the |S*| >= |S|/d context; nothing to enforce here
    PointSet out;
    out.mode = s.mode;
    out.star = true;

    if (s.mode == Mode::Exact) {
        for (const auto& p : s.points) {
            const GaussianRational& x = p.x.exact();
            const GaussianRational& y = p.y.exact();
            if (x.is_zero() && y.is_zero()) continue;
            bool covered = false;
            for (const auto& q : out.points)
                if ((x * q.y.exact() - y * q.x.exact()).is_zero()) {
                    covered = true;
                    break;
                }
            if (!covered) out.points.push_back(p);
        }
        return out;
    }

    for (const auto& p : s.points) {
        const NumericComplex& x = p.x.numeric();
        const NumericComplex& y = p.y.numeric();
        BigFloat tol = default_tolerance(std::max(x.precision(), y.precision()));
        if (x.abs() <= tol && y.abs() <= tol) continue;
        bool covered = false;
        for (const auto& q : out.points) {
            NumericComplex lhs = x * q.y.numeric(), rhs = y * q.x.numeric();
            BigFloat scale = lhs.abs() + rhs.abs() + BigFloat::from_long(1, tol.precision());
            if ((lhs - rhs).abs() <= tol * scale) {
                covered = true;
                break;
            }
        }
        if (!covered) out.points.push_back(p);
    }
    return out;
}

PointSet linear_image(const PointSet& s, const Mat2Q& m) {
    if (m.det().is_zero()) throw SingularMatrix("linear image needs an invertible matrix");
    PointSet out;
    out.mode = s.mode;
    out.star = s.star;
    for (const auto& p : s.points) {
        if (s.mode == Mode::Exact) {
            auto [nx, ny] = m.apply(p.x.exact(), p.y.exact());
            out.points.emplace_back(Scalar(nx), Scalar(ny));
        } else {
            Mat2C mc = to_numeric(m, p.x.numeric().precision());
            auto [nx, ny] = mc.apply(p.x.numeric(), p.y.numeric());
            out.points.emplace_back(Scalar(nx), Scalar(ny));
        }
    }
    return out;
}

} // namespace bilab
