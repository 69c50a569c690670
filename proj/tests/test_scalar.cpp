#include "doctest.h"

#include "bilab/scalar.hpp"
#include "gen.hpp"

using namespace bilab;

TEST_CASE("gaussian rational field operations") {
    testgen::Rng rng(101);
    for (int it = 0; it < 200; ++it) {
        GaussianRational a = rng.gaussian(), b = rng.gaussian(), c = rng.gaussian();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == GaussianRational(0));
        CHECK(a + GaussianRational(0) == a);
        CHECK(a * GaussianRational(1) == a);
    }
}

TEST_CASE("gaussian inverse and conjugate") {
    testgen::Rng rng(102);
    for (int it = 0; it < 100; ++it) {
        GaussianRational z = rng.nonzero_gaussian();
        CHECK(z * z.inverse() == GaussianRational(1));
        GaussianRational zc = z * z.conj();
        CHECK(zc.im == 0);
        CHECK(zc.re == z.norm2());
    }
    CHECK_THROWS_AS(GaussianRational(0).inverse(), DivisionByZero);
    GaussianRational i = GaussianRational::unit_i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.inverse() == -i);
}

TEST_CASE("gaussian power matches repeated multiplication") {
    testgen::Rng rng(103);
    for (int it = 0; it < 40; ++it) {
        GaussianRational z = rng.nonzero_gaussian(5, 3);
        long e = rng.int_between(0, 9);
        GaussianRational by_hand(1);
        for (long k = 0; k < e; ++k) by_hand *= z;
        CHECK(z.pow(e) == by_hand);
        if (e > 0) CHECK(z.pow(-e) == by_hand.inverse());
    }
    CHECK(GaussianRational(0).pow(0) == GaussianRational(1));
    CHECK(GaussianRational::unit_i().pow(4) == GaussianRational(1));
}

TEST_CASE("gaussian text round trip") {
    CHECK(parse_gaussian("1/2").str() == "1/2");
    CHECK(parse_gaussian("-i").str() == "-i");
    CHECK(parse_gaussian("3+2i").str() == "3+2i");
    CHECK(parse_gaussian("1/2-3/4i").str() == "1/2-3/4i");
    CHECK(parse_gaussian("1/2+1/2*i") == GaussianRational(Rational(1, 2), Rational(1, 2)));
    CHECK(parse_gaussian(" 2 / 4 ") == GaussianRational(Rational(1, 2)));
    CHECK(parse_gaussian("i") == GaussianRational::unit_i());
    CHECK(parse_gaussian("0").str() == "0");
    CHECK(parse_gaussian("-2i+3") == GaussianRational(Rational(3), Rational(-2)));

    testgen::Rng rng(104);
    for (int it = 0; it < 100; ++it) {
        GaussianRational z = rng.gaussian();
        CHECK(parse_gaussian(z.str()) == z);
    }
}

TEST_CASE("gaussian parse rejects malformed text") {
    CHECK_THROWS_AS(parse_gaussian(""), ParseError);
    CHECK_THROWS_AS(parse_gaussian("1/0"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("1//2"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("2+3"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("i+i"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("2x"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("4+"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("1*j"), ParseError);
}

TEST_CASE("gaussian lexicographic order is total") {
    testgen::Rng rng(105);
    for (int it = 0; it < 100; ++it) {
        GaussianRational a = rng.gaussian(), b = rng.gaussian();
        int forward = lex_less(a, b), backward = lex_less(b, a);
        if (a == b)
            CHECK((!forward && !backward));
        else
            CHECK(forward + backward == 1);
    }
}

TEST_CASE("scalar mode discipline") {
    Scalar e(GaussianRational(Rational(1, 2)));
    Scalar n(NumericComplex::from_longs(1, 0, 128));
    CHECK(e.mode() == Mode::Exact);
    CHECK(n.mode() == Mode::Numeric);
    CHECK_THROWS_AS(e + n, ModeMismatch);
    CHECK_THROWS_AS(n * e, ModeMismatch);
    CHECK_THROWS_AS(e.numeric(), ModeMismatch);
    CHECK_THROWS_AS(n.exact(), ModeMismatch);
    CHECK_THROWS_AS(Scalar::eq(e, n), ModeMismatch);

    // exact comparison never needs a tolerance
    CHECK(Scalar::eq(e, Scalar(GaussianRational(testgen::frac(2, 4)))));
    // numeric comparison demands one
    CHECK_THROWS_AS(Scalar::eq(n, n), Error);
    CHECK(Scalar::eq(n, n, default_tolerance(128)));
}

TEST_CASE("scalar arithmetic agrees with gaussian arithmetic") {
    testgen::Rng rng(106);
    for (int it = 0; it < 60; ++it) {
        GaussianRational a = rng.gaussian(), b = rng.nonzero_gaussian();
        Scalar sa(a), sb(b);
        CHECK((sa + sb).exact() == a + b);
        CHECK((sa - sb).exact() == a - b);
        CHECK((sa * sb).exact() == a * b);
        CHECK((sa / sb).exact() == a / b);
        CHECK((-sa).exact() == -a);
        CHECK(sa.conj().exact() == a.conj());
        CHECK(sb.pow(3).exact() == b.pow(3));
    }
}

TEST_CASE("scalar numeric arithmetic tracks exact arithmetic") {
    testgen::Rng rng(107);
    BigFloat tol = default_tolerance(192);
    for (int it = 0; it < 40; ++it) {
        GaussianRational a = rng.gaussian(), b = rng.nonzero_gaussian();
        NumericComplex na = a.to_numeric(192), nb = b.to_numeric(192);
        CHECK(NumericComplex::close(na * nb, (a * b).to_numeric(192), tol));
        CHECK(NumericComplex::close(na / nb, (a / b).to_numeric(192), tol));
        CHECK(NumericComplex::close(nb.inverse(), b.inverse().to_numeric(192), tol));
        CHECK(NumericComplex::close(nb.pow_i(-3), b.pow(-3).to_numeric(192), tol));
    }
}

TEST_CASE("bigfloat basics") {
    BigFloat two = BigFloat::from_long(2, 128);
    BigFloat root = two.sqrt();
    CHECK((root * root - two).abs() <= BigFloat::pow2(-120, 128));
    CHECK(BigFloat::pow2(-3, 64).to_double() == doctest::Approx(0.125));
    CHECK(BigFloat::from_rational(Rational(-7, 2), 64).floor_z() == mpz_class(-4));
    CHECK(BigFloat::from_long(5, 64).precision() == 64);

    BigFloat lo(64), hi(256);
    CHECK((lo + hi).precision() == 256);

    auto [s, c] = BigFloat::sin_cos(BigFloat::pi(128) / BigFloat::from_long(2, 128));
    CHECK((s - BigFloat::from_long(1, 128)).abs() <= BigFloat::pow2(-110, 128));
    CHECK(c.abs() <= BigFloat::pow2(-110, 128));

    BigFloat parsed = BigFloat::from_string("-2.5e3", 64);
    CHECK(parsed.to_double() == doctest::Approx(-2500.0));
    CHECK_THROWS_AS(BigFloat::from_string("zebra", 64), ParseError);

    BigFloat round_trip = BigFloat::from_string(root.to_string(), 128);
    CHECK((round_trip - root).abs() <= BigFloat::pow2(-110, 128));
}

TEST_CASE("numeric complex roots of unity") {
    NumericComplex one = NumericComplex::from_longs(1, 0, 256);
    BigFloat tol = default_tolerance(256);
    for (unsigned long n : {1ul, 2ul, 3ul, 5ul, 8ul}) {
        auto roots = one.nth_roots(n);
        REQUIRE(roots.size() == n);
        for (const auto& r : roots)
            CHECK(NumericComplex::close(r.pow_i(static_cast<long>(n)), one, tol));
        // pairwise distinct
        for (size_t a = 0; a < roots.size(); ++a)
            for (size_t b = a + 1; b < roots.size(); ++b)
                CHECK(!NumericComplex::close(roots[a], roots[b], tol));
    }
    // deterministic order: repeat call gives the same sequence
    auto r1 = one.nth_roots(6), r2 = one.nth_roots(6);
    for (size_t k = 0; k < 6; ++k)
        CHECK(NumericComplex::close(r1[k], r2[k], BigFloat::pow2(-250, 256)));
    CHECK_THROWS_AS(NumericComplex(32), Error);
}

TEST_CASE("rational reconstruction from floats") {
    Rational q(355, 113);
    auto back = reconstruct_rational(BigFloat::from_rational(q, 256), mpz_class(1000));
    REQUIRE(back.has_value());
    CHECK(*back == q);

    // too tall for the height bound
    Rational tall(1000003, 7);
    CHECK(!reconstruct_rational(BigFloat::from_rational(tall, 256), mpz_class(1000000)).has_value());

    // genuinely irrational input has no convincing convergent
    CHECK(!reconstruct_rational(BigFloat::from_long(2, 256).sqrt(), mpz_class(1000000)).has_value());

    testgen::Rng rng(108);
    for (int it = 0; it < 60; ++it) {
        Rational r = rng.rational(999, 999);
        auto rec = reconstruct_rational(BigFloat::from_rational(r, 256), mpz_class(100000));
        REQUIRE(rec.has_value());
        CHECK(*rec == r);
    }
}

TEST_CASE("gaussian reconstruction from numeric complex") {
    testgen::Rng rng(109);
    for (int it = 0; it < 40; ++it) {
        GaussianRational z = rng.gaussian(99, 40);
        auto rec = reconstruct_gaussian(z.to_numeric(256));
        REQUIRE(rec.has_value());
        CHECK(*rec == z);
    }
    NumericComplex irr(BigFloat::from_long(2, 256).sqrt(), BigFloat(256));
    CHECK(!reconstruct_gaussian(irr).has_value());
}
