#include "generators.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/numfield.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace wittkit;

namespace {

NumberField cube_root_two() { return NumberField::from_min_poly(Polynomial({-2, 0, 0, 1}), "Q(cbrt2)"); }
NumberField sqrt_two() { return NumberField::from_min_poly(Polynomial({-2, 0, 1}), "Q(sqrt2)"); }

FieldElement el(const NumberField& K, std::vector<Rational> c) {
    c.resize(static_cast<std::size_t>(K.degree()), Rational(0));
    return FieldElement(K, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic fields") {
    CHECK(NumberField::cyclotomic(1).degree() == 1);
    CHECK(NumberField::cyclotomic(4).min_poly() == Polynomial({1, 0, 1}));
    CHECK(NumberField::cyclotomic(8).degree() == 4);
    for (int n = 1; n <= 40; ++n) {
        NumberField K = NumberField::cyclotomic(n);
        CHECK(K.degree() == euler_phi(n));
        CHECK(K.cyclotomic_order() == n);
    }
    CHECK_THROWS_AS(NumberField::cyclotomic(0), InvariantViolation);
}

TEST_CASE("irreducibility is enforced") {
    CHECK_NOTHROW(cube_root_two());
    CHECK_THROWS_AS(NumberField::from_min_poly(Polynomial({-1, 0, 1})), IrreducibilityUnproven);
    CHECK_THROWS_AS(NumberField::from_min_poly(Polynomial({2, 0, 1}) * Polynomial({3, 0, 1})), IrreducibilityUnproven);
    // x^4 + 1 is reducible modulo every prime, so no single-prime certificate exists.
    CHECK_THROWS_AS(NumberField::from_min_poly(Polynomial({1, 0, 0, 0, 1})), IrreducibilityUnproven);
    CHECK_THROWS_AS(NumberField::from_min_poly(Polynomial({1, 2})), InvariantViolation);
}

TEST_CASE("automorphisms") {
    auto qi = automorphisms(NumberField::cyclotomic(4));
    REQUIRE(qi.size() == 2);
    CHECK(qi[0].is_identity());
    CHECK(qi[1].image_of_generator() == -FieldElement::generator(NumberField::cyclotomic(4)));

    NumberField K8 = NumberField::cyclotomic(8);
    auto z8 = automorphisms(K8);
    REQUIRE(z8.size() == 4);
    const FieldElement z = FieldElement::generator(K8);
    for (std::size_t i = 0; i < 4; ++i) CHECK(z8[i].image_of_generator() == z.pow(static_cast<long>(2 * i + 1)));

    auto c = automorphisms(cube_root_two());
    REQUIRE(c.size() == 1);
    CHECK(c[0].is_identity());

    CHECK(automorphisms(sqrt_two()).size() == 2);
    CHECK_THROWS_AS(FieldAutomorphism(K8, z * z), InvariantViolation);
}

TEST_CASE("inverse") {
    NumberField Qi = NumberField::cyclotomic(4);
    CHECK(invert(el(Qi, {1, 1})) == el(Qi, {Rational(1, 2), Rational(-1, 2)}));
    CHECK(invert(FieldElement::one(Qi)).is_one());
    NumberField C = cube_root_two();
    CHECK(invert(FieldElement::generator(C)) == el(C, {0, 0, Rational(1, 2)}));
    CHECK_THROWS_AS(invert(FieldElement::zero(C)), DivisionByZero);
}

TEST_CASE("roots of unity") {
    NumberField K = NumberField::cyclotomic(12);
    CHECK(FieldElement::root_of_unity(K, 12, 1).pow(12).is_one());
    CHECK(!FieldElement::root_of_unity(K, 12, 1).pow(6).is_one());
    CHECK(FieldElement::root_of_unity(K, 3, 1).pow(3).is_one());
    // Q(zeta_3) also holds the sixth roots of unity.
    CHECK(FieldElement::root_of_unity(NumberField::cyclotomic(3), 6, 1).pow(6).is_one());
    CHECK_THROWS_AS(FieldElement::root_of_unity(NumberField::cyclotomic(4), 3, 1), InsufficientRoots);
}

TEST_CASE("square roots") {
    NumberField Q = NumberField::rationals();
    SqrtResult r = sqrt_in_field(FieldElement(Q, Rational(4)));
    REQUIRE(r.status == SqrtStatus::Found);
    CHECK(*r.root * *r.root == FieldElement(Q, Rational(4)));

    NumberField Qi = NumberField::cyclotomic(4);
    r = sqrt_in_field(FieldElement(Qi, Rational(-1)));
    REQUIRE(r.status == SqrtStatus::Found);
    CHECK(*r.root * *r.root == FieldElement(Qi, Rational(-1)));

    NumberField C = cube_root_two();
    const FieldElement t = FieldElement::generator(C);
    r = sqrt_in_field(t * t * Rational(-3));
    CHECK(r.status == SqrtStatus::NoRoot);
    CHECK(!r.certificate.empty());

    CHECK(sqrt_in_field(FieldElement(Q, Rational(2))).status == SqrtStatus::NoRoot);
}

TEST_CASE("numeric embeddings") {
    auto e = numeric_embeddings(NumberField::cyclotomic(4), 64);
    REQUIRE(e.size() == 2);
    CHECK(!e[0].is_real);
    CHECK(std::abs(std::abs(e[0].im_d()) - 1.0) < 1e-12);
    CHECK(std::abs(e[0].re_d()) < 1e-12);

    e = numeric_embeddings(sqrt_two(), 64);
    REQUIRE(e.size() == 2);
    CHECK(e[0].is_real);
    CHECK(e[1].is_real);
    CHECK(e[0].re_d() == doctest::Approx(-1.41421356237));
    CHECK(e[1].re_d() == doctest::Approx(1.41421356237));

    e = numeric_embeddings(cube_root_two(), 64);
    REQUIRE(e.size() == 3);
    CHECK(e[0].is_real);
    CHECK(e[0].re_d() == doctest::Approx(1.25992104989));
    CHECK(!e[1].is_real);
    CHECK(!e[2].is_real);
}

TEST_CASE("property: field axioms on random triples") {
    testgen::Rng rng(11);
    for (const NumberField& K : {NumberField::cyclotomic(5), cube_root_two(), NumberField::cyclotomic(12)}) {
        for (int i = 0; i < 100; ++i) {
            FieldElement a = testgen::element(rng, K), b = testgen::element(rng, K), c = testgen::element(rng, K);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(static_cast<int>((a * b).coeffs().size()) == K.degree());
        }
    }
}

TEST_CASE("property: automorphisms are ring homomorphisms on 1000 random elements") {
    testgen::Rng rng(12);
    std::vector<NumberField> fields{NumberField::cyclotomic(4), NumberField::cyclotomic(8), NumberField::cyclotomic(5),
                                    NumberField::cyclotomic(12), sqrt_two(), cube_root_two()};
    for (const auto& K : fields) {
        for (const auto& s : automorphisms(K)) {
            CHECK(s(FieldElement::one(K)).is_one());
            CHECK(s(FieldElement(K, Rational(7, 3))) == FieldElement(K, Rational(7, 3)));
            for (int i = 0; i < 1000; ++i) {
                FieldElement a = testgen::element(rng, K), b = testgen::element(rng, K);
                REQUIRE(s(a + b) == s(a) + s(b));
                REQUIRE(s(a * b) == s(a) * s(b));
            }
        }
    }
}

TEST_CASE("property: cyclotomic automorphisms compose like (Z/n)^x") {
    for (int n : {5, 7, 8, 9, 12, 15}) {
        NumberField K = NumberField::cyclotomic(n);
        const FieldElement z = FieldElement::generator(K);
        std::vector<long> units;
        for (long k = 1; k < n; ++k)
            if (std::gcd(k, static_cast<long>(n)) == 1) units.push_back(k);
        for (long a : units)
            for (long b : units) {
                FieldAutomorphism sa(K, z.pow(a)), sb(K, z.pow(b));
                CHECK(sa.compose(sb).image_of_generator() == z.pow(a * b % n));
            }
    }
}

TEST_CASE("property: invert is a two-sided inverse on 1000 random elements") {
    testgen::Rng rng(13);
    for (const NumberField& K : {NumberField::cyclotomic(8), cube_root_two()}) {
        for (int i = 0; i < 1000; ++i) {
            FieldElement x = testgen::nonzero_element(rng, K);
            FieldElement y = invert(x);
            REQUIRE((x * y).is_one());
            REQUIRE((y * x).is_one());
        }
    }
}

TEST_CASE("property: sqrt_in_field only returns verified roots") {
    testgen::Rng rng(14);
    for (const NumberField& K : {NumberField::cyclotomic(4), sqrt_two(), cube_root_two()}) {
        for (int i = 0; i < 60; ++i) {
            FieldElement a = testgen::element(rng, K, 9, 3);
            SqrtResult r = sqrt_in_field(a * a);
            REQUIRE(r.status == SqrtStatus::Found);
            CHECK(*r.root * *r.root == a * a);
            FieldElement d = testgen::element(rng, K, 9, 3);
            SqrtResult s = sqrt_in_field(d);
            if (s.status == SqrtStatus::Found) CHECK(*s.root * *s.root == d);
        }
    }
}
