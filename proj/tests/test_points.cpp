#include "bilab/points.hpp"

#include "doctest.h"
#include "gen.hpp"

using namespace bilab;
using testgen::frac;

namespace {

Scalar ex(long n) { return Scalar(GaussianRational(n)); }

bool same_exact(const Point& p, long x_num, long x_den, long y_num, long y_den) {
    return p.x.exact() == GaussianRational(frac(x_num, x_den)) &&
           p.y.exact() == GaussianRational(frac(y_num, y_den));
}

PointSet exact_set(std::initializer_list<std::pair<long, long>> coords) {
    PointSet s;
    for (auto [x, y] : coords) s.push(Point(ex(x), ex(y)));
    return s;
}

Mat2Q random_invertible(testgen::Rng& rng) {
    for (;;) {
        Mat2Q m{rng.gaussian(4, 3), rng.gaussian(4, 3), rng.gaussian(4, 3), rng.gaussian(4, 3)};
        if (!m.det().is_zero()) return m;
    }
}

} // namespace

TEST_CASE("point and set basics") {
    CHECK_THROWS_AS(Point(ex(1), Scalar(NumericComplex::from_longs(1, 0, 64))), ModeMismatch);

    PointSet s;
    s.push(Point(ex(1), ex(2)));
    CHECK_THROWS_AS(s.push(Point(Scalar(NumericComplex::from_longs(1, 0, 64)),
                                 Scalar(NumericComplex::from_longs(2, 0, 64)))),
                    ModeMismatch);
    CHECK(s.size() == 1);
    CHECK(Point(ex(1), ex(-2)).str() == "(1, -2)");
}

TEST_CASE("geometric progressions land on their models") {
    auto line = geometric_progression_set(1, 1, 3, Scalar(GaussianRational(2)));
    REQUIRE(line.size() == 3);
    CHECK(same_exact(line.points[0], 2, 1, 2, 1));
    CHECK(same_exact(line.points[1], 4, 1, 4, 1));
    CHECK(same_exact(line.points[2], 8, 1, 8, 1));

    auto cusp = geometric_progression_set(2, 3, 2, Scalar(GaussianRational(2)));
    REQUIRE(cusp.size() == 2);
    CHECK(same_exact(cusp.points[0], 8, 1, 4, 1));
    CHECK(same_exact(cusp.points[1], 64, 1, 16, 1));

    auto hyp = geometric_progression_set(1, -1, 3, Scalar(GaussianRational(2)));
    REQUIRE(hyp.size() == 3);
    CHECK(same_exact(hyp.points[0], 2, 1, 1, 2));
    CHECK(same_exact(hyp.points[1], 4, 1, 1, 4));
    CHECK(same_exact(hyp.points[2], 8, 1, 1, 8));

    Curve xy1 = Curve::parse("x*y - 1");
    for (const auto& p : hyp.points) CHECK(xy1.contains(p.x, p.y));
    Curve c23 = Curve::parse("x^2 - y^3");
    for (const auto& p : geometric_progression_set(2, 3, 5, Scalar(GaussianRational(frac(1, 3)))).points)
        CHECK(c23.contains(p.x, p.y));
    Curve c32 = Curve::parse("x^3*y^2 - 1");
    for (const auto& p : geometric_progression_set(3, -2, 4, Scalar(GaussianRational(2))).points)
        CHECK(c32.contains(p.x, p.y));
}

TEST_CASE("degenerate progression inputs are rejected") {
    Scalar two{GaussianRational(2)};
    CHECK_THROWS_AS(geometric_progression_set(1, 1, 0, two), Error);
    CHECK_THROWS_AS(geometric_progression_set(2, 4, 3, two), Error);
    CHECK_THROWS_AS(geometric_progression_set(0, 1, 3, two), Error);
    CHECK_THROWS_AS(geometric_progression_set(1, 0, 3, two), Error);
    CHECK_THROWS_AS(geometric_progression_set(-2, 3, 3, two), Error);
    CHECK_THROWS_AS(geometric_progression_set(1, 1, 3, Scalar(NumericComplex::from_longs(2, 0, 64))),
                    Error);
    for (long v : {0L, 1L, -1L})
        CHECK_THROWS_AS(geometric_progression_set(2, 3, 2, Scalar(GaussianRational(v))),
                        DegenerateBase);
    CHECK_THROWS_AS(geometric_progression_set(2, 3, 2, Scalar(GaussianRational::unit_i())),
                    DegenerateBase);
    CHECK_THROWS_AS(geometric_progression_set(2, 3, 2, Scalar(-GaussianRational::unit_i())),
                    DegenerateBase);
}

TEST_CASE("exact sampling walks seeded fibers deterministically") {
    Curve cubic = Curve::parse("y - x^3 - x^2");
    auto s = sample_curve_points(cubic, 3, Mode::Exact, 0);
    REQUIRE(s.size() == 3);
    CHECK(same_exact(s.points[0], 1, 1, 2, 1));
    CHECK(same_exact(s.points[1], 2, 1, 12, 1));
    CHECK(same_exact(s.points[2], 3, 1, 36, 1));

    auto shifted = sample_curve_points(cubic, 2, Mode::Exact, 5);
    REQUIRE(shifted.size() == 2);
    CHECK(same_exact(shifted.points[0], 6, 1, 252, 1));   // 6^3 + 6^2
    CHECK(same_exact(shifted.points[1], 7, 1, 392, 1));   // 7^3 + 7^2

    // beyond the integer prefix the stream continues with small fractions
    auto deep = sample_curve_points(cubic, 20, Mode::Exact, 0);
    REQUIRE(deep.size() == 20);
    CHECK(same_exact(deep.points[16], 1, 2, 3, 8));       // x=1/2: 1/8 + 1/4
    for (const auto& p : deep.points) CHECK(cubic.contains(p.x, p.y));

    // two-point fibers surface both roots, in lexicographic order; the first
    // square fiber value hit is 1 - (5/3)^2 = (4i/3)^2, a Q(i) square
    Curve circle = Curve::parse("x^2 + y^2 - 1");
    auto pyth = sample_curve_points(circle, 5, Mode::Exact, 0);
    REQUIRE(pyth.size() == 5);
    CHECK(same_exact(pyth.points[0], 1, 1, 0, 1));        // fiber at x=1 is y^2 = 0
    CHECK(pyth.points[1].x.exact() == GaussianRational(frac(5, 3)));
    CHECK(pyth.points[1].y.exact() == GaussianRational(Rational(0), frac(-4, 3)));
    CHECK(pyth.points[2].y.exact() == GaussianRational(Rational(0), frac(4, 3)));
    CHECK(same_exact(pyth.points[3], 3, 5, -4, 5));
    CHECK(same_exact(pyth.points[4], 3, 5, 4, 5));
    for (const auto& p : pyth.points) CHECK(circle.contains(p.x, p.y));
}

TEST_CASE("sampling failure modes are specific") {
    Curve fermat = Curve::parse("x^3 + y^3 - 1");
    auto one = sample_curve_points(fermat, 1, Mode::Exact, 0);
    CHECK(same_exact(one.points[0], 1, 1, 0, 1));
    CHECK_THROWS_AS(sample_curve_points(fermat, 2, Mode::Exact, 0), ExactSamplingUnavailable);

    // x^2 + 1 = 0 holds only on the lines x = +-i; rational abscissas miss it
    Curve off_axis = Curve::parse("x^2 + 1");
    CHECK_THROWS_AS(sample_curve_points(off_axis, 1, Mode::Exact, 0), InsufficientPoints);
    CHECK_THROWS_AS(sample_curve_points(off_axis, 1, Mode::Numeric, 0), InsufficientPoints);

    // a curve containing a vertical line is sampled along that line
    Curve split = Curve::parse("x^2 - 1");
    auto on_line = sample_curve_points(split, 3, Mode::Exact, 0);
    REQUIRE(on_line.size() == 3);
    CHECK(same_exact(on_line.points[0], 1, 1, 0, 1));
    CHECK(same_exact(on_line.points[1], 1, 1, 1, 1));
    CHECK(same_exact(on_line.points[2], 1, 1, 2, 1));
}

TEST_CASE("numeric sampling verifies residuals and tracks exact sampling") {
    mpfr_prec_t prec = 192;
    Curve fermat = Curve::parse("x^3 + y^3 - 1");
    auto s = sample_curve_points(fermat, 7, Mode::Numeric, 0, prec);
    REQUIRE(s.size() == 7);
    CHECK(s.mode == Mode::Numeric);
    for (const auto& p : s.points) CHECK(fermat.contains(p.x, p.y));

    // pairwise distinct within tolerance
    BigFloat tol = default_tolerance(prec);
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b) {
            bool same = NumericComplex::close(s.points[a].x.numeric(), s.points[b].x.numeric(), tol) &&
                        NumericComplex::close(s.points[a].y.numeric(), s.points[b].y.numeric(), tol);
            CHECK(!same);
        }

    // where exact sampling works, numeric sampling finds the same points
    Curve cubic = Curve::parse("y - x^3 - x^2");
    auto exact = sample_curve_points(cubic, 4, Mode::Exact, 0);
    auto numeric = sample_curve_points(cubic, 4, Mode::Numeric, 0, prec);
    for (size_t j = 0; j < 4; ++j) {
        CHECK(NumericComplex::close(numeric.points[j].x.numeric(),
                                    exact.points[j].x.exact().to_numeric(prec), tol));
        CHECK(NumericComplex::close(numeric.points[j].y.numeric(),
                                    exact.points[j].y.exact().to_numeric(prec), tol));
    }
}

TEST_CASE("star pruning keeps the first point on each line") {
    auto s = exact_set({{1, 1}, {2, 2}, {1, 2}});
    auto star = prune_star(s, 2);
    CHECK(star.star);
    REQUIRE(star.size() == 2);
    CHECK(same_exact(star.points[0], 1, 1, 1, 1));
    CHECK(same_exact(star.points[1], 1, 1, 2, 1));

    auto with_origin = exact_set({{0, 0}, {3, 1}, {-6, -2}, {0, 5}, {0, -7}});
    auto pruned = prune_star(with_origin, 1);
    REQUIRE(pruned.size() == 2);
    CHECK(same_exact(pruned.points[0], 3, 1, 1, 1));
    CHECK(same_exact(pruned.points[1], 0, 1, 5, 1));

    // idempotent, and stable on already-star input
    auto again = prune_star(pruned, 1);
    REQUIRE(again.size() == pruned.size());
    for (size_t j = 0; j < again.size(); ++j)
        CHECK(Scalar::eq(again.points[j].x, pruned.points[j].x));

    // progression sets: distinct exponent pairs are never proportional ...
    auto cusp = geometric_progression_set(2, 3, 6, Scalar(GaussianRational(2)));
    CHECK(prune_star(cusp, 5).size() == 6);
    // ... except on the line model, which collapses to a single class
    auto line = geometric_progression_set(1, 1, 6, Scalar(GaussianRational(2)));
    CHECK(prune_star(line, 1).size() == 1);
}

TEST_CASE("numeric star pruning merges proportional directions") {
    mpfr_prec_t prec = 128;
    PointSet s;
    s.mode = Mode::Numeric;
    auto np = [prec](long a, long b) {
        return Point(Scalar(NumericComplex::from_longs(a, 0, prec)),
                     Scalar(NumericComplex::from_longs(b, 0, prec)));
    };
    s.push(np(0, 0));
    s.push(np(1, 2));
    s.push(np(2, 4));
    s.push(np(1, 3));
    auto star = prune_star(s, 3);
    CHECK(star.size() == 2);
}

TEST_CASE("linear images of point sets") {
    auto s = exact_set({{1, 0}, {0, 1}});
    Mat2Q swap{GaussianRational(0), GaussianRational(1), GaussianRational(1), GaussianRational(0)};
    auto moved = linear_image(s, swap);
    CHECK(same_exact(moved.points[0], 0, 1, 1, 1));
    CHECK(same_exact(moved.points[1], 1, 1, 0, 1));
    CHECK(linear_image(s, mat2q_identity()).points[0].x.exact() == GaussianRational(1));

    Mat2Q singular{GaussianRational(1), GaussianRational(2), GaussianRational(2), GaussianRational(4)};
    CHECK_THROWS_AS(linear_image(s, singular), SingularMatrix);

    testgen::Rng rng(321);
    auto cusp = prune_star(geometric_progression_set(2, 3, 5, Scalar(GaussianRational(2))), 5);
    for (int round = 0; round < 5; ++round) {
        Mat2Q m = random_invertible(rng);
        auto img = linear_image(cusp, m);
        CHECK(img.star);
        auto repruned = prune_star(img, 5);
        CHECK(repruned.size() == img.size()); // star survived the map
    }

    // numeric image tracks the exact one
    mpfr_prec_t prec = 128;
    PointSet nset;
    nset.mode = Mode::Numeric;
    nset.push(Point(Scalar(NumericComplex::from_longs(3, 1, prec)),
                    Scalar(NumericComplex::from_longs(-2, 0, prec))));
    Mat2Q m{GaussianRational(1, 1), GaussianRational(frac(1, 2)), GaussianRational(0),
            GaussianRational(-3)};
    auto nimg = linear_image(nset, m);
    auto eimg = linear_image(exact_set({{0, 0}}), m); // shape check only
    CHECK(eimg.size() == 1);
    auto expect = to_numeric(m, prec).apply(NumericComplex::from_longs(3, 1, prec),
                                            NumericComplex::from_longs(-2, 0, prec));
    CHECK(NumericComplex::close(nimg.points[0].x.numeric(), expect.first, default_tolerance(prec)));
    CHECK(NumericComplex::close(nimg.points[0].y.numeric(), expect.second, default_tolerance(prec)));
}
