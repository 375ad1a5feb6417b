#include "wittkit/errors.hpp"
#include "wittkit/galoiswitt.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wittkit;
using testgen::Rng;

namespace {

GModule mu(int n) { return GModule::cyclic_action(FiniteGroup::cyclic(2), n, -1, "mu" + std::to_string(n)); }

FiniteGroup s3() {
    return FiniteGroup::from_table({{0, 1, 2, 3, 4, 5},
                                    {1, 0, 3, 2, 5, 4},
                                    {2, 4, 0, 5, 1, 3},
                                    {3, 5, 1, 4, 0, 2},
                                    {4, 2, 5, 0, 3, 1},
                                    {5, 3, 4, 1, 2, 0}});
}

// Appendix action with γ ≡ 1: still monoidal, but γ_EM no longer matches uT(u).
GaloisAction gamma_plus() {
    const GaloisAction a = GaloisAction::appendix_a();
    const NumberField& k = a.field();
    return GaloisAction(a.base(), a.sigma(), {0, 2, 1, 3}, [a](int x, int y) { return a.J(x, y); },
                        [k](int) { return FieldElement::one(k); }, {"I", "E", "M", "EM"});
}

}  // namespace

TEST_CASE("tensor decomposition of Galois extensions") {
    const NumberField q = NumberField::rationals();
    const NumberField qi = NumberField::cyclotomic(4);
    TensorDecomposition d = tensor_decompose(q, qi);
    CHECK(d.components.size() == 2);
    for (const auto& c : d.components) {
        CHECK(c.degree_over_K == 1);
        CHECK(c.field == qi);
        REQUIRE(c.root);
        CHECK(c.root->is_zero() == false);
    }
    CHECK(d.unit_component == 0);
    CHECK(*d.components[0].root == FieldElement::generator(qi));
    CHECK(*d.components[1].root == -FieldElement::generator(qi));
    REQUIRE(d.galois_group);
    CHECK(d.galois_group->order() == 2);
    CHECK(factors_multiply_back(d));
    CHECK(verify_action_formula(d).ok);

    TensorDecomposition t = tensor_decompose(qi, qi);
    CHECK(t.components.size() == 1);
    CHECK(factors_multiply_back(t));
    CHECK(verify_action_formula(t).ok);

    const NumberField k8 = NumberField::cyclotomic(8);
    TensorDecomposition e = tensor_decompose(q, k8);
    CHECK(e.components.size() == 4);
    REQUIRE(e.galois_group);
    CHECK(e.galois_group->order() == 4);
    CHECK(e.galois_group->is_abelian());
    CHECK(!e.galois_group->cyclic_generator());
    CHECK(factors_multiply_back(e));
    CHECK(verify_action_formula(e).ok);
}

TEST_CASE("tensor decomposition of a non-Galois cubic") {
    const NumberField q = NumberField::rationals();
    const NumberField k = NumberField::from_min_poly(Polynomial({-2, 0, 0, 1}), "Q(cbrt2)");
    TensorDecomposition d = tensor_decompose(q, k);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].degree_over_K == 1);
    CHECK(d.components[1].degree_over_K == 2);
    CHECK(!d.galois_group);
    CHECK(!d.components[1].root);
    CHECK(d.components[1].field.degree() == 6);
    const FieldElement th = FieldElement::generator(k);
    // x² + θx + θ²
    CHECK(d.components[1].factor == FieldPolynomial{th * th, th, FieldElement::one(k)});
    CHECK(d.components[1].certificate.find("not a square") != std::string::npos);
    CHECK(factors_multiply_back(d));
    CHECK(!verify_action_formula(d).ok);

    int total = 0;
    for (const auto& c : d.components) total += c.degree_over_K;
    CHECK(total == k.degree());
}

TEST_CASE("property: component degrees add up and every component of a Galois field is K") {
    const NumberField q = NumberField::rationals();
    std::vector<NumberField> fields{NumberField::cyclotomic(3), NumberField::cyclotomic(4), NumberField::cyclotomic(5),
                                    NumberField::cyclotomic(8), NumberField::cyclotomic(12),
                                    NumberField::from_min_poly(Polynomial({-2, 0, 1}), "Q(sqrt2)"),
                                    NumberField::from_min_poly(Polynomial({-3, 0, 0, 1}), "Q(cbrt3)")};
    for (const auto& K : fields) {
        INFO(K.label());
        TensorDecomposition d = tensor_decompose(q, K);
        int total = 0, linear_unit = 0;
        for (const auto& c : d.components) {
            total += c.degree_over_K;
            if (c.root && *c.root == FieldElement::generator(K)) ++linear_unit;
        }
        CHECK(total == K.degree());
        CHECK(linear_unit == 1);
        CHECK(factors_multiply_back(d));
        if (d.galois_group) {
            CHECK(static_cast<int>(d.components.size()) == d.galois_group->order());
            for (const auto& c : d.components) {
                // x ↦ root is a field map K → K
                REQUIRE(c.root);
                CHECK_NOTHROW(FieldAutomorphism(K, *c.root));
            }
            CHECK(verify_action_formula(d).ok);
        }
    }
}

TEST_CASE("Witt class construction and products") {
    WittFamilyClass g = c2_generator_class();
    CHECK(g.galois_group().order() == 2);
    CHECK(g.coefficient_module() == mu(4));
    CHECK_THROWS_AS(WittFamilyClass(CochainClass::zero(mu(4), 3)), ShapeMismatch);

    WittFamilyClass one(CochainClass::zero(mu(4), 4));
    CHECK(witt_class_product(one, g).class4() == g.class4());

    WittFamilyClass sq = witt_class_product(g, g);
    CoboundaryResult r = is_coboundary(sq.class4());
    CHECK(r.is_coboundary);
    REQUIRE(r.witness);
    CHECK(coboundary(*r.witness) == sq.class4().cochain());

    WittFamilyClass other(CochainClass::zero(mu(8), 4));
    CHECK_THROWS_AS(witt_class_product(g, other), ShapeMismatch);
    WittFamilyClass c4(CochainClass::zero(GModule::cyclic_action(FiniteGroup::cyclic(4), 4, -1), 4));
    CHECK_THROWS_AS(witt_class_product(g, c4), ShapeMismatch);
}

TEST_CASE("property: Witt class products form a commutative monoid") {
    Rng rng(61);
    std::vector<GModule> modules{mu(4), mu(8), GModule::cyclic_action(FiniteGroup::cyclic(4), 8, 3),
                                 GModule::trivial(FiniteGroup::product({2, 2}), {2})};
    for (const auto& m : modules) {
        INFO(m.label());
        WittFamilyClass one(CochainClass::zero(m, 4));
        for (int trial = 0; trial < 6; ++trial) {
            WittFamilyClass a(testgen::cocycle(rng, m, 4));
            WittFamilyClass b(testgen::cocycle(rng, m, 4));
            WittFamilyClass c(testgen::cocycle(rng, m, 4));
            REQUIRE(witt_class_product(a, b).class4() == witt_class_product(b, a).class4());
            REQUIRE(witt_class_product(witt_class_product(a, b), c).class4() ==
                    witt_class_product(a, witt_class_product(b, c)).class4());
            REQUIRE(witt_class_product(a, one).class4() == a.class4());
        }
    }
}

TEST_CASE("Witt class inflation") {
    WittFamilyClass g = c2_generator_class();
    CHECK(witt_class_inflate(g, std::nullopt, std::nullopt).class4() == g.class4());
    CHECK(witt_class_inflate(g, ModuleMap::identity(mu(4)), std::nullopt).class4() == g.class4());

    WittFamilyClass up = witt_class_inflate(g, doubling_step(mu(4)), std::nullopt);
    CHECK(up.coefficient_module().factors() == std::vector<Integer>{8});
    CHECK(!is_coboundary(up.class4()).is_coboundary);

    WittFamilyClass zero(CochainClass::zero(mu(4), 4));
    CHECK(witt_class_inflate(zero, doubling_step(mu(4)), std::nullopt).class4().cochain().is_zero());

    GroupHom c4_to_c2{FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), {0, 1, 0, 1}};
    WittFamilyClass pulled = witt_class_inflate(g, doubling_step(mu(4)), c4_to_c2);
    CHECK(pulled.galois_group().order() == 4);
    CoboundaryResult r = is_coboundary(pulled.class4());
    if (r.is_coboundary) CHECK(coboundary(*r.witness) == pulled.class4().cochain());

    GroupHom not_onto{FiniteGroup::cyclic(2), FiniteGroup::cyclic(2), {0, 0}};
    CHECK_THROWS_AS(witt_class_inflate(g, std::nullopt, not_onto), NotHomomorphism);
}

TEST_CASE("triviality along the doubling tower") {
    TrivialityResult r = witt_class_is_trivial(c2_generator_class(), 2);
    CHECK(r.verdict == TrivialityVerdict::StabilizedNontrivial);
    CHECK(r.level == 2);
    CHECK(!r.witness);
    REQUIRE(r.level_groups.size() == 3);
    for (const auto& h : r.level_groups) CHECK(h.to_string() == "Z/2");

    TrivialityResult t = witt_class_is_trivial(WittFamilyClass(CochainClass::zero(mu(4), 4)), 1);
    CHECK(t.verdict == TrivialityVerdict::Trivial);
    CHECK(t.level == 0);
    REQUIRE(t.witness);
    CHECK(t.witness->is_zero());

    // Odd degree: the generator of H³(C2; μ4) dies after one doubling.
    CochainClass odd = bar_cohomology(mu(4), 3).representatives.at(0);
    CHECK(!is_coboundary(odd).is_coboundary);
    TrivialityResult o = tower_triviality(odd, 3);
    CHECK(o.verdict == TrivialityVerdict::Trivial);
    CHECK(o.level == 1);
    REQUIRE(o.witness);
    CochainClass lifted = inflate_coefficients(odd, doubling_step(mu(4)));
    CHECK(coboundary(*o.witness) == lifted.cochain());

    CHECK_THROWS_AS(witt_class_is_trivial(c2_generator_class(), 0), InvariantViolation);
    CohomologyOptions tiny;
    tiny.work_budget = 10;
    CHECK_THROWS_AS(witt_class_is_trivial(c2_generator_class(), 2, tiny), BudgetExceeded);

    // Non-cyclic groups never get the stabilized verdict.
    GModule v4 = GModule::trivial(FiniteGroup::product({2, 2}), {2});
    CochainClass nz = bar_cohomology(v4, 4).representatives.at(0);
    TrivialityResult v = tower_triviality(nz, 1);
    CHECK(v.verdict != TrivialityVerdict::StabilizedNontrivial);
}

TEST_CASE("Galois grading law") {
    CHECK(galois_grading_check(GradedSkeleton::from_group(FiniteGroup::cyclic(2))).ok);
    CHECK(galois_grading_check(GradedSkeleton::from_group(FiniteGroup::trivial())).ok);

    GradedSkeleton bad = GradedSkeleton::from_group(FiniteGroup::cyclic(2));
    bad.fusion_support[{1, 1}] = {1};
    bad.validate();
    CheckResult r = galois_grading_check(bad);
    CHECK(!r.ok);
    CHECK(r.where == std::vector<int>{1, 1, 1});
    GradedSkeleton relabelled = GradedSkeleton::from_group(FiniteGroup::cyclic(2));
    relabelled.objects[0].galois_degree = 1;
    CheckResult u = galois_grading_check(relabelled);
    CHECK(!u.ok);
    CHECK(u.where == std::vector<int>{0});

    GradedSkeleton empty = GradedSkeleton::from_group(FiniteGroup::cyclic(2));
    empty.fusion_support[{0, 1}].clear();
    CHECK_THROWS_AS(empty.validate(), InvariantViolation);
    GradedSkeleton unit = GradedSkeleton::from_group(FiniteGroup::cyclic(2));
    unit.unit = 1;
    CHECK_THROWS_AS(unit.validate(), InvariantViolation);
    GradedSkeleton unknown = GradedSkeleton::from_group(FiniteGroup::cyclic(2));
    unknown.fusion_support[{0, 0}] = {5};
    CHECK_THROWS_AS(unknown.validate(), InvariantViolation);
}

// A relabelling passes exactly when it is still a homomorphism on the group
// skeleton; away from order 2 no single-label change can be one.
bool is_hom_labelling(const FiniteGroup& g, const GradedSkeleton& s) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (s.objects[static_cast<std::size_t>(g.mul(a, b))].galois_degree !=
                g.mul(s.objects[static_cast<std::size_t>(a)].galois_degree, s.objects[static_cast<std::size_t>(b)].galois_degree))
                return false;
    return true;
}

TEST_CASE("property: single-label corruptions of group skeletons") {
    int caught = 0, missed = 0;
    for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                                 FiniteGroup::product({2, 2}), FiniteGroup::cyclic(6), s3()}) {
        const GradedSkeleton skel = GradedSkeleton::from_group(g);
        skel.validate();
        REQUIRE(galois_grading_check(skel).ok);
        for (std::size_t obj = 0; obj < skel.objects.size(); ++obj)
            for (int deg = 0; deg < g.order(); ++deg) {
                if (deg == skel.objects[obj].galois_degree) continue;
                GradedSkeleton c = skel;
                c.objects[obj].galois_degree = deg;
                CheckResult r = galois_grading_check(c);
                INFO(g.label(), " object ", obj, " -> ", deg);
                REQUIRE(r.ok == is_hom_labelling(g, c));
                if (r.ok) {
                    ++missed;
                    continue;
                }
                ++caught;
                const int o = static_cast<int>(obj);
                REQUIRE(std::find(r.where.begin(), r.where.end(), o) != r.where.end());
            }
    }
    CHECK(caught >= 50);
    // only V1 ↦ trivial degree over Z/2, which is the trivial grading
    CHECK(missed == 1);
}

TEST_CASE("real Witt class certificate") {
    WittCertificate cert = real_witt_certificate();
    CHECK(cert.ok());
    CHECK(cert.checks.size() == 9);
    for (const auto& c : cert.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.ok);
    }
    CHECK(cert.not_mechanized.size() >= 1);
    CHECK(cert.not_mechanized[0].find("classification") != std::string::npos);

    WittCertificate plus = real_witt_certificate(gamma_plus());
    CHECK(!plus.ok());
    REQUIRE(plus.failed);
    CHECK(*plus.failed == "action coherence");
    CHECK(plus.checks.size() == 5);

    CHECK_THROWS_AS(real_witt_certificate(GaloisAction::appendix_a(NumberField::rationals())), InsufficientRoots);
    CHECK_THROWS_AS(GaloisAction::appendix_a(NumberField::from_min_poly(Polynomial({-2, 0, 1}))), InsufficientRoots);
}
