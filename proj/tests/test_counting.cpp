#include "bilab/counting.hpp"

#include <algorithm>
#include <vector>

#include "bilab/errors.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace bilab;
using testgen::frac;

namespace {

constexpr mpfr_prec_t kPrec = 256;

GaussianRational G(long n) { return GaussianRational(Rational(n)); }

Point exact_point(const GaussianRational& x, const GaussianRational& y) {
    return {Scalar(x), Scalar(y)};
}

PointSet exact_set(const std::vector<std::pair<long, long>>& coords) {
    PointSet s;
    s.mode = Mode::Exact;
    for (const auto& [x, y] : coords) s.push(exact_point(G(x), G(y)));
    return s;
}

PointSet random_exact_set(testgen::Rng& rng, size_t m) {
    PointSet s;
    s.mode = Mode::Exact;
    while (s.size() < m) {
        GaussianRational x = rng.gaussian(9, 5);
        GaussianRational y = rng.gaussian(9, 5);
        bool seen = false;
        for (const auto& p : s.points)
            if (p.x.exact() == x && p.y.exact() == y) seen = true;
        if (!seen) s.push(exact_point(x, y));
    }
    return s;
}

PointSet to_numeric_set(const PointSet& s, mpfr_prec_t prec) {
    PointSet out;
    out.mode = Mode::Numeric;
    for (const auto& p : s.points)
        out.push({Scalar(p.x.exact().to_numeric(prec)), Scalar(p.y.exact().to_numeric(prec))});
    return out;
}

/// Multiset of distinct values recomputed the slow way by linear scan.
size_t brute_distinct_exact(const BilinearForm& f, const PointSet& s1, const PointSet& s2) {
    std::vector<GaussianRational> seen;
    for (const auto& p : s1.points)
        for (const auto& q : s2.points) {
            Scalar v = f(p, q);
            bool dup = false;
            for (const auto& w : seen)
                if (w == v.exact()) dup = true;
            if (!dup) seen.push_back(v.exact());
        }
    return seen.size();
}

} // namespace

TEST_CASE("bilinear form evaluation") {
    BilinearForm dot = BilinearForm::dot();
    BilinearForm area = BilinearForm::area();
    Point p = exact_point(G(1), G(2));
    Point q = exact_point(G(3), G(4));

    CHECK(dot(p, q).exact() == G(11));
    CHECK(area(p, q).exact() == G(-2));
    CHECK(area(q, p).exact() == G(2));

    // general matrix: p^T M q with M = [[1, 2], [3, 4]]
    BilinearForm f(Mat2Q{G(1), G(2), G(3), G(4)});
    CHECK(f(p, q).exact() == G(1 * (3 + 8) + 2 * (9 + 16)));

    CHECK_THROWS_AS(BilinearForm(Mat2Q{G(1), G(2), G(2), G(4)}), SingularMatrix);

    Point n{Scalar(NumericComplex::from_longs(1, 0, kPrec)),
            Scalar(NumericComplex::from_longs(2, 0, kPrec))};
    CHECK_THROWS_AS((void)dot(p, n), ModeMismatch);
    CHECK(NumericComplex::close(dot(n, n).numeric(), G(5).to_numeric(kPrec),
                                default_tolerance(kPrec)));
}

TEST_CASE("histogram of a hand-checked square") {
    // values over {e1, e2} x {e1, e2} under the dot pairing: two zeros, two ones
    PointSet s = exact_set({{1, 0}, {0, 1}});
    ValueHistogram h = value_histogram(BilinearForm::dot(), s, s);
    CHECK(h.mode == Mode::Exact);
    CHECK(h.m1 == 2);
    CHECK(h.m2 == 2);
    CHECK(h.pairs() == 4);
    REQUIRE(h.distinct() == 2);
    CHECK(h.entries[0].first.exact() == G(0));
    CHECK(h.entries[0].second == 2);
    CHECK(h.entries[1].first.exact() == G(1));
    CHECK(h.entries[1].second == 2);

    QuadrupleReport r = quadruple_report(h);
    CHECK(r.m == 2);
    CHECK(r.distinct == 2);
    CHECK(r.coincidences == 8);
    CHECK(r.bound == Rational(8));
    CHECK(r.satisfied);
    CHECK(incidence_crosscheck(BilinearForm::dot(), s, s) == r.coincidences);
}

TEST_CASE("progression sets hit the extremal count") {
    Scalar two{G(2)};
    for (auto [k, l] : {std::pair<long, long>{1, 1}, {2, 3}, {3, 1}}) {
        for (unsigned n : {4u, 9u}) {
            PointSet s = geometric_progression_set(k, l, n, two);
            ValueHistogram h = value_histogram(BilinearForm::dot(), s, s);
            INFO("k=", k, " l=", l, " n=", n);
            CHECK(h.distinct() == 2 * n - 1);
        }
    }
    // a different base behaves the same
    PointSet s = geometric_progression_set(3, 1, 7, Scalar(G(3)));
    CHECK(value_histogram(BilinearForm::dot(), s, s).distinct() == 13);
}

TEST_CASE("reciprocal progression collapses under the swap pairing") {
    // points (2^i, 2^-i): swap pairing gives 2^(i-j) + 2^(j-i), n distinct
    PointSet s = geometric_progression_set(1, -1, 8, Scalar(G(2)));
    BilinearForm swap(Mat2Q{G(0), G(1), G(1), G(0)});
    CHECK(value_histogram(swap, s, s).distinct() == 8);
    // the dot pairing keeps the generic extremal count
    CHECK(value_histogram(BilinearForm::dot(), s, s).distinct() == 15);
}

TEST_CASE("quadruple report needs a square histogram") {
    PointSet s1 = exact_set({{1, 0}, {0, 1}});
    PointSet s2 = exact_set({{1, 1}, {2, 1}, {3, 1}});
    ValueHistogram h = value_histogram(BilinearForm::dot(), s1, s2);
    CHECK(h.m1 == 2);
    CHECK(h.m2 == 3);
    CHECK_THROWS_AS((void)quadruple_report(h), NonSquareInput);
}

TEST_CASE("crosscheck equals the histogram count on random exact sets") {
    testgen::Rng rng(411);
    for (int round = 0; round < 10; ++round) {
        size_t m = static_cast<size_t>(rng.int_between(2, 8));
        PointSet s1 = random_exact_set(rng, m);
        PointSet s2 = random_exact_set(rng, m);
        BilinearForm f = (round % 2 == 0) ? BilinearForm::dot() : BilinearForm::area();

        ValueHistogram h = value_histogram(f, s1, s2);
        QuadrupleReport r = quadruple_report(h);
        INFO("round ", round, " m=", m);
        CHECK(r.satisfied);
        CHECK(incidence_crosscheck(f, s1, s2) == r.coincidences);
        CHECK(h.distinct() == brute_distinct_exact(f, s1, s2));

        size_t mass = 0;
        for (const auto& [value, count] : h.entries) mass += count;
        CHECK(mass == h.pairs());
    }
}

TEST_CASE("histograms are independent of the thread count") {
    PointSet s1 = geometric_progression_set(2, 3, 9, Scalar(G(2)));
    PointSet s2 = geometric_progression_set(2, 3, 7, Scalar(G(2)));
    BilinearForm f = BilinearForm::dot();

    ValueHistogram one = value_histogram(f, s1, s2, 1);
    for (unsigned threads : {2u, 3u, 8u, 64u}) {
        ValueHistogram many = value_histogram(f, s1, s2, threads);
        REQUIRE(many.distinct() == one.distinct());
        for (size_t i = 0; i < one.entries.size(); ++i) {
            CHECK(one.entries[i].first.exact() == many.entries[i].first.exact());
            CHECK(one.entries[i].second == many.entries[i].second);
        }
    }

    PointSet n1 = to_numeric_set(s1, kPrec);
    PointSet n2 = to_numeric_set(s2, kPrec);
    ValueHistogram none = value_histogram(f, n1, n2, 1);
    CHECK(none.distinct() == one.distinct());
    BigFloat zero(kPrec);
    for (unsigned threads : {3u, 8u}) {
        ValueHistogram many = value_histogram(f, n1, n2, threads);
        REQUIRE(many.distinct() == none.distinct());
        for (size_t i = 0; i < none.entries.size(); ++i) {
            // identical arithmetic and canonical ordering: bitwise equality
            CHECK(Scalar::eq(none.entries[i].first, many.entries[i].first, zero));
            CHECK(none.entries[i].second == many.entries[i].second);
        }
    }
}

TEST_CASE("moving the matrix onto the second slot preserves the histogram") {
    testgen::Rng rng(77);
    PointSet s1 = geometric_progression_set(1, 1, 6, Scalar(G(2)));
    PointSet s2 = geometric_progression_set(1, 1, 5, Scalar(G(3)));
    for (int round = 0; round < 5; ++round) {
        Mat2Q m{rng.gaussian(6, 4), rng.gaussian(6, 4), rng.gaussian(6, 4), rng.gaussian(6, 4)};
        if (m.det().is_zero()) continue;
        ValueHistogram lhs = value_histogram(BilinearForm(m), s1, s2);
        ValueHistogram rhs = value_histogram(BilinearForm::dot(), s1, linear_image(s2, m));
        REQUIRE(lhs.distinct() == rhs.distinct());
        for (size_t i = 0; i < lhs.entries.size(); ++i) {
            CHECK(lhs.entries[i].first.exact() == rhs.entries[i].first.exact());
            CHECK(lhs.entries[i].second == rhs.entries[i].second);
        }
    }
}

TEST_CASE("numeric histograms merge close values") {
    PointSet s = exact_set({{1, 0}, {0, 1}});
    PointSet n = to_numeric_set(s, kPrec);
    ValueHistogram h = value_histogram(BilinearForm::dot(), n, n);
    CHECK(h.mode == Mode::Numeric);
    REQUIRE(h.distinct() == 2);
    CHECK(h.entries[0].second == 2);
    CHECK(h.entries[1].second == 2);

    QuadrupleReport r = quadruple_report(h);
    CHECK(r.coincidences == 8);
    CHECK(incidence_crosscheck(BilinearForm::dot(), n, n) == 8);
}

TEST_CASE("exponent fitting") {
    SUBCASE("perfect quadratic") {
        std::vector<std::pair<unsigned long, unsigned long>> quad;
        for (unsigned long n : {4ul, 8ul, 16ul, 32ul}) quad.emplace_back(n, n * n);
        CHECK(fit_exponent(quad) == doctest::Approx(2.0).epsilon(1e-9));
    }
    SUBCASE("extremal linear family") {
        std::vector<std::pair<unsigned long, unsigned long>> lin;
        for (unsigned long n : {16ul, 64ul, 256ul, 1024ul}) lin.emplace_back(n, 2 * n - 1);
        double slope = fit_exponent(lin);
        CHECK(slope > 0.95);
        CHECK(slope < 1.10);
    }
    SUBCASE("rejects short or unsorted input") {
        CHECK_THROWS_AS((void)fit_exponent({{4, 7}, {8, 15}}), InsufficientSamples);
        CHECK_THROWS_AS((void)fit_exponent({{4, 7}, {4, 9}, {8, 15}}), InsufficientSamples);
        CHECK_THROWS_AS((void)fit_exponent({{4, 7}, {8, 0}, {16, 31}}), InsufficientSamples);
    }
}
