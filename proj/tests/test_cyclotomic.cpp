#include "doctest.h"

#include "bilab/cyclotomic.hpp"
#include "gen.hpp"

using namespace bilab;

namespace {

CycloNum random_cyclo(testgen::Rng& rng, const CycloField& field) {
    std::vector<GaussianRational> c;
    for (unsigned k = 0; k < field.degree(); ++k)
        c.push_back(GaussianRational(rng.rational(6, 4)));
    return CycloNum(field, UniPoly(std::move(c)));
}

} // namespace

TEST_CASE("cyclotomic moduli come out right") {
    CHECK(CycloField::get(4).modulus() ==
          UniPoly({GaussianRational(1), GaussianRational(0), GaussianRational(1)}));
    CHECK(CycloField::get(8).modulus() ==
          UniPoly({GaussianRational(1), GaussianRational(0), GaussianRational(0),
                   GaussianRational(0), GaussianRational(1)}));
    CHECK(CycloField::get(12).modulus() ==
          UniPoly({GaussianRational(1), GaussianRational(0), GaussianRational(-1),
                   GaussianRational(0), GaussianRational(1)}));
    CHECK(CycloField::get(4).degree() == 2);
    CHECK(CycloField::get(12).degree() == 4);
    CHECK(CycloField::get(48).degree() == 16);
    // the cache hands back the same object
    CHECK(&CycloField::get(12) == &CycloField::get(12));

    CHECK_THROWS_AS(CycloField::get(6), Error);
    CHECK_THROWS_AS(CycloField::get(0), Error);
    CHECK_THROWS_AS(CycloField::get(52), Error);
}

TEST_CASE("zeta powers behave like a root of unity") {
    const CycloField& f12 = CycloField::get(12);
    CycloNum z = CycloNum::zeta(f12, 1);
    CHECK(z.pow(12) == CycloNum::one(f12));
    CHECK(z.pow(6) == -CycloNum::one(f12));
    CHECK(CycloNum::zeta(f12, -1) == z.pow(11));
    CHECK(CycloNum::zeta(f12, 25) == z);
    CHECK(z.pow(3) == CycloNum::embed(f12, GaussianRational::unit_i()));
    // i^2 = -1 through the embedding
    CycloNum i = CycloNum::embed(f12, GaussianRational::unit_i());
    CHECK(i * i == CycloNum::from_rational(f12, Rational(-1)));
}

TEST_CASE("cyclotomic field axioms on random elements") {
    const CycloField& f12 = CycloField::get(12);
    testgen::Rng rng(401);
    for (int it = 0; it < 40; ++it) {
        CycloNum a = random_cyclo(rng, f12), b = random_cyclo(rng, f12), c = random_cyclo(rng, f12);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycloNum::one(f12));
            CHECK(a.pow(-2) == (a * a).inverse());
        }
    }
    CHECK_THROWS_AS(CycloNum::zero(f12).inverse(), DivisionByZero);
    // elements of different fields never mix silently
    CHECK_THROWS_AS(CycloNum::zeta(CycloField::get(4), 1) + CycloNum::zeta(CycloField::get(8), 1),
                    Error);
}

TEST_CASE("promotion preserves values") {
    const CycloField& f4 = CycloField::get(4);
    const CycloField& f12 = CycloField::get(12);
    CHECK(CycloNum::zeta(f4, 1).promote(f12) == CycloNum::zeta(f12, 3));
    testgen::Rng rng(402);
    for (int it = 0; it < 20; ++it) {
        GaussianRational z = rng.gaussian(5, 3);
        CHECK(CycloNum::embed(f4, z).promote(f12) == CycloNum::embed(f12, z));
    }
    // arithmetic commutes with promotion
    for (int it = 0; it < 20; ++it) {
        CycloNum a = random_cyclo(rng, f4), b = random_cyclo(rng, f4);
        CHECK((a * b).promote(f12) == a.promote(f12) * b.promote(f12));
        CHECK((a + b).promote(f12) == a.promote(f12) + b.promote(f12));
    }
    CHECK_THROWS_AS(CycloNum::zeta(CycloField::get(8), 1).promote(f12), Error);
}

TEST_CASE("numeric image of cyclotomic elements") {
    const CycloField& f12 = CycloField::get(12);
    NumericComplex z = CycloNum::zeta(f12, 1).to_complex(256);
    BigFloat tol = default_tolerance(256);
    // zeta_12 = cos 30 + i sin 30
    CHECK((z.im - BigFloat::from_rational(Rational(1, 2), 256)).abs() <= tol);
    CHECK((z.re * z.re - BigFloat::from_rational(Rational(3, 4), 256)).abs() <= tol);
    CHECK(NumericComplex::close(CycloNum::zeta(f12, 3).to_complex(256),
                                NumericComplex::from_longs(0, 1, 256), tol));

    testgen::Rng rng(403);
    for (int it = 0; it < 10; ++it) {
        CycloNum a = random_cyclo(rng, f12), b = random_cyclo(rng, f12);
        CHECK(NumericComplex::close((a * b).to_complex(256), a.to_complex(256) * b.to_complex(256),
                                    default_tolerance(128)));
    }
}

TEST_CASE("recognizing the gaussian rational subfield") {
    const CycloField& f12 = CycloField::get(12);
    testgen::Rng rng(404);
    for (int it = 0; it < 20; ++it) {
        GaussianRational z = rng.gaussian(9, 5);
        auto back = CycloNum::embed(f12, z).to_gaussian_rational();
        REQUIRE(back.has_value());
        CHECK(*back == z);
    }
    CHECK(CycloNum::zeta(f12, 3).to_gaussian_rational() == GaussianRational(0, 1));
    CHECK(CycloNum::zeta(f12, 6).to_gaussian_rational() == GaussianRational(-1));
    CHECK(!CycloNum::zeta(f12, 2).to_gaussian_rational().has_value());
    CHECK(!CycloNum::zeta(f12, 1).to_gaussian_rational().has_value());
}

TEST_CASE("matrix algebra over exact fields") {
    testgen::Rng rng(405);
    for (int it = 0; it < 30; ++it) {
        Mat2Q m{rng.gaussian(4, 3), rng.gaussian(4, 3), rng.gaussian(4, 3), rng.gaussian(4, 3)};
        Mat2Q n{rng.gaussian(4, 3), rng.gaussian(4, 3), rng.gaussian(4, 3), rng.gaussian(4, 3)};
        CHECK((m * n).det() == m.det() * n.det());
        if (!m.det().is_zero()) {
            CHECK(m * m.inverse() == mat2q_identity());
            CHECK(m.inverse() * m == mat2q_identity());
        }
    }
    Mat2Q singular{GaussianRational(1), GaussianRational(2), GaussianRational(2), GaussianRational(4)};
    CHECK_THROWS_AS(singular.inverse(), DivisionByZero);

    const CycloField& f12 = CycloField::get(12);
    CycloNum w = CycloNum::zeta(f12, 4), zero = CycloNum::zero(f12), one = CycloNum::one(f12);
    Mat2Cyclo d{w, zero, zero, w * w};
    Mat2Cyclo prod = d * d.inverse();
    CHECK(prod.a == one);
    CHECK(prod.b == zero);
    CHECK(prod.c == zero);
    CHECK(prod.d == one);
}

TEST_CASE("exact proportionality certifies maps of the cubic") {
    const CycloField& f12 = CycloField::get(12);
    BiPoly fermat = parse_bipoly("x^3+y^3-1");
    CycloNum w = CycloNum::zeta(f12, 4); // primitive cube root of unity
    CycloNum zero = CycloNum::zero(f12), one = CycloNum::one(f12);

    auto lam = cyclo_proportionality(fermat, Mat2Cyclo{w, zero, zero, w * w});
    REQUIRE(lam.has_value());
    CHECK(*lam == one);

    // coordinate swap times cube roots
    auto lam2 = cyclo_proportionality(fermat, Mat2Cyclo{zero, w, w * w, zero});
    REQUIRE(lam2.has_value());
    CHECK(*lam2 == one);

    // scaling one axis only is not a symmetry
    CHECK(!cyclo_proportionality(fermat, Mat2Cyclo{CycloNum::zeta(f12, 1), zero, zero, one})
               .has_value());

    // homogeneous cubic picks up a nontrivial multiplier
    BiPoly cone = parse_bipoly("x^3+y^3");
    CycloNum z1 = CycloNum::zeta(f12, 1);
    auto lam3 = cyclo_proportionality(cone, Mat2Cyclo{z1, zero, zero, z1});
    REQUIRE(lam3.has_value());
    CHECK(*lam3 == CycloNum::zeta(f12, 3));

    // support-changing maps are rejected
    BiPoly hyper = parse_bipoly("x*y");
    CHECK(!cyclo_proportionality(hyper, Mat2Cyclo{one, one, zero, one}).has_value());
    // the swap is a symmetry of x*y
    auto lam4 = cyclo_proportionality(hyper, Mat2Cyclo{zero, one, one, zero});
    REQUIRE(lam4.has_value());
    CHECK(*lam4 == one);
}
