#include "wittkit/equivariant.hpp"
#include "wittkit/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace wittkit;

namespace {

const NumberField& qi() {
    static const NumberField k = NumberField::cyclotomic(4);
    return k;
}

FieldAutomorphism conj(const NumberField& k = qi()) { return automorphisms(k).at(1); }

FieldElement sc(long v) { return FieldElement(qi(), Rational(v)); }

// Vect_Q(i) with complex conjugation and γ = g.
GaloisAction vect_qi(long g) {
    PointedBraidedCategory base(FiniteGroup::trivial(), qi(), nullptr,
                                PointedBraidedCategory::Table2([](int, int) { return FieldElement::one(qi()); }));
    return GaloisAction(base, conj(), {0}, [](int, int) { return sc(1); }, [g](int) { return sc(g); }, {"1"});
}

GaloisAction symmetric_z2() {
    PointedBraidedCategory base(FiniteGroup::cyclic(2), qi(), nullptr,
                                PointedBraidedCategory::Table2([](int, int) { return FieldElement::one(qi()); }));
    return GaloisAction(base, conj(), {0, 1}, [](int, int) { return sc(1); }, [](int) { return sc(1); });
}

std::map<int, int> multiset(const std::vector<int>& v) {
    std::map<int, int> m;
    for (int x : v) ++m[x];
    return m;
}

// u ∘ σ(u) as a matrix product, the identity an equivariant structure on a
// T-fixed support must satisfy against γ.
FieldMatrix twisted_square(const FieldAutomorphism& s, const FieldMatrix& u) {
    const std::size_t n = u.size();
    FieldMatrix r(n, std::vector<FieldElement>(n, FieldElement::zero(u[0][0].field())));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) r[a][b] = r[a][b] + u[a][c] * s(u[c][b]);
    return r;
}

}  // namespace

TEST_CASE("action coherence") {
    GaloisAction a = GaloisAction::appendix_a();
    CHECK(check_action_coherence(a).ok);
    // J((i,j),(k,l)) = (−1)^{il}, γ((i,j)) = (−1)^{ij}, index i + 2j
    for (int x = 0; x < 4; ++x) {
        CHECK(a.gamma(x) == sc((x % 2) * (x / 2) ? -1 : 1));
        for (int y = 0; y < 4; ++y) CHECK(a.J(x, y) == sc((x % 2) * (y / 2) ? -1 : 1));
    }
    CheckResult u = check_action_coherence(GaloisAction::appendix_a_untwisted());
    CHECK(!u.ok);
    CHECK(u.detail.find("braid") != std::string::npos);
    REQUIRE(u.where.size() == 2);
    CHECK(std::min(u.where[0], u.where[1]) == 1);
    CHECK(std::max(u.where[0], u.where[1]) == 2);
    CHECK(check_action_coherence(symmetric_z2()).ok);
    CHECK(check_action_coherence(GaloisAction::appendix_a(NumberField::cyclotomic(8))).ok);
    CHECK_THROWS_AS(GaloisAction::appendix_a(NumberField::rationals()), InsufficientRoots);
}

TEST_CASE("actions are validated") {
    PointedBraidedCategory base = drinfeld_center_pointed(FiniteGroup::cyclic(2), qi());
    auto one = [](int, int) { return sc(1); };
    auto g1 = [](int) { return sc(1); };
    CHECK_THROWS_AS(GaloisAction(base, automorphisms(qi()).at(0), {0, 2, 1, 3}, one, g1), InvariantViolation);
    // Order 3 on the nonzero elements of Z/2 x Z/2.
    CHECK_THROWS_AS(GaloisAction(base, conj(), {0, 2, 3, 1}, one, g1), InvariantViolation);
    CHECK_THROWS_AS(GaloisAction(base, conj(), {0, 1, 1, 3}, one, g1), InvariantViolation);
    PointedBraidedCategory z4(FiniteGroup::cyclic(4), qi(), nullptr, PointedBraidedCategory::Table2(one));
    CHECK_NOTHROW(GaloisAction(z4, conj(), {0, 3, 2, 1}, one, g1));
    CHECK_THROWS_AS(GaloisAction(z4, conj(), {2, 1, 0, 3}, one, g1), InvariantViolation);
    CHECK_THROWS_AS(GaloisAction(base, conj(), {0, 2, 1, 3}, [](int, int) { return sc(0); }, g1), InvariantViolation);
}

TEST_CASE("T² tensorator") {
    GaloisAction a = GaloisAction::appendix_a();
    auto t2 = t_squared_tensorator(a);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const int i = x % 2, j = x / 2, k = y % 2, l = y / 2;
            CHECK(t2[static_cast<std::size_t>(x * 4 + y)] == sc((i * l + j * k) % 2 ? -1 : 1));
        }
    for (const auto& v : t_squared_tensorator(symmetric_z2())) CHECK(v.is_one());

    // Semion under conjugation with J(1,1) = i: σ(i)·i = 1 at (1,1).
    const FieldElement i = FieldElement::generator(qi());
    PointedBraidedCategory semion(FiniteGroup::cyclic(2), qi(),
                                  [](int a, int b, int c) { return sc(a && b && c ? -1 : 1); },
                                  PointedBraidedCategory::Table2([i](int a, int b) { return a && b ? i : sc(1); }));
    GaloisAction s(semion, conj(), {0, 1}, [i](int a, int b) { return a && b ? i : sc(1); }, [](int) { return sc(1); });
    auto ts = t_squared_tensorator(s);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(ts[static_cast<std::size_t>(2 * x + y)] == conj()(s.J(x, y)) * s.J(x, y));
    CHECK(ts[3].is_one());
    // c(1,1) = i cannot be carried to σ(i) = −i by the identity on objects.
    CHECK(!check_action_coherence(s).ok);
}

TEST_CASE("equivariant simples of the appendix action") {
    GaloisAction a = GaloisAction::appendix_a();
    auto simples = equivariant_simples(a);
    REQUIRE(simples.size() == 3);
    CHECK(simples[0].label == "I");
    CHECK(simples[0].end_type == EndType::Real);
    CHECK(simples[1].label == "E+M");
    CHECK(simples[1].end_type == EndType::Complex);
    CHECK(simples[1].end_dim == 2);
    CHECK(simples[2].label == "EM+EM");
    CHECK(simples[2].end_type == EndType::Quaternionic);
    CHECK(simples[2].end_dim == 4);
    const FieldMatrix& u = simples[2].u;
    CHECK(u[0][0].is_zero());
    CHECK(u[0][1] == sc(-1));
    CHECK(u[1][0] == sc(1));
    CHECK(u[1][1].is_zero());
    CHECK(to_string(EndType::Quaternionic) == "QUATERNIONIC");

    CHECK(equivariant_hom_dim(a, simples[2], simples[2]) == 4);
    CHECK(equivariant_hom_dim(a, simples[1], simples[1]) == 2);
    CHECK(equivariant_hom_dim(a, simples[0], simples[1]) == 0);
    CHECK(equivariant_hom_dim(a, simples[0], simples[2]) == 0);
}

TEST_CASE("equivariant simples over Vect_Q(i)") {
    auto r = equivariant_simples(vect_qi(1));
    REQUIRE(r.size() == 1);
    CHECK(r[0].end_type == EndType::Real);
    auto q = equivariant_simples(vect_qi(-1));
    REQUIRE(q.size() == 1);
    CHECK(q[0].end_type == EndType::Quaternionic);
    CHECK(q[0].underlying == std::vector<int>{0, 0});
    // Only roots of unity are decided.
    CHECK_THROWS_AS(equivariant_simples(vect_qi(2)), ObstructionUndecidable);
}

TEST_CASE("norm equations") {
    const FieldAutomorphism s = conj();
    NormSolution a = solve_norm_equation(s, sc(1));
    REQUIRE(a.u);
    CHECK(*a.u * s(*a.u) == sc(1));
    NormSolution b = solve_norm_equation(s, sc(-1));
    CHECK(!b.u);
    CHECK(!b.certificate.empty());
    CHECK_THROWS_AS(solve_norm_equation(s, sc(5)), ObstructionUndecidable);

    // Q(sqrt2) with sqrt2 -> -sqrt2: norms a² - 2b² can be negative, and -1 = 1 - 2.
    NumberField r2 = NumberField::from_min_poly(Polynomial({-2, 0, 1}), "Q(sqrt2)");
    const FieldAutomorphism t = automorphisms(r2).at(1);
    NormSolution d = solve_norm_equation(t, FieldElement(r2, Rational(-1)));
    REQUIRE(d.u);
    CHECK(*d.u * t(*d.u) == FieldElement(r2, Rational(-1)));
    // a² - 3b² = -1 has no solution: 3 ≡ 3 mod 4.
    NumberField r3 = NumberField::from_min_poly(Polynomial({-3, 0, 1}), "Q(sqrt3)");
    NormSolution e = solve_norm_equation(automorphisms(r3).at(1), FieldElement(r3, Rational(-1)));
    CHECK(!e.u);
    CHECK(e.certificate.find("3 mod 4") != std::string::npos);
    // Q(zeta8)/Q(sqrt2) under conjugation: the fixed field is real, so -1 is no norm.
    NumberField k8 = NumberField::cyclotomic(8);
    NormSolution f = solve_norm_equation(automorphisms(k8).at(3), FieldElement(k8, Rational(-1)));
    CHECK(!f.u);
    CHECK(f.certificate.find("complex conjugation") != std::string::npos);
}

TEST_CASE("equivariant tensor products") {
    GaloisAction a = GaloisAction::appendix_a();
    auto s = equivariant_simples(a);
    for (int x = 0; x < 3; ++x) {
        auto d = equivariant_tensor_decompose(a, s, s[0], s[static_cast<std::size_t>(x)]);
        REQUIRE(d.size() == 1);
        CHECK(d[0] == std::make_pair(x, 1));
    }
    CHECK(equivariant_tensor_decompose(a, s, s[2], s[2]) == std::vector<std::pair<int, int>>{{0, 4}});
    // K ⊗ K has underlying I ⊕ I ⊕ EM ⊕ EM.
    auto kk = equivariant_tensor_decompose(a, s, s[1], s[1]);
    std::vector<int> under;
    for (auto [idx, mult] : kk)
        for (int m = 0; m < mult; ++m)
            for (int g : s[static_cast<std::size_t>(idx)].underlying) under.push_back(g);
    CHECK(multiset(under) == std::map<int, int>{{0, 2}, {3, 2}});
    // multiplicity = hom dim / end dim
    EquivariantObject t = equivariant_tensor(a, s[1], s[1]);
    for (auto [idx, mult] : kk)
        CHECK(mult * s[static_cast<std::size_t>(idx)].end_dim == equivariant_hom_dim(a, t, s[static_cast<std::size_t>(idx)]));
}

TEST_CASE("fusion ring and grading of the equivariantization") {
    GaloisAction a = GaloisAction::appendix_a();
    auto s = equivariant_simples(a);
    FusionRing ring = equivariant_fusion_ring(a, s);
    CHECK(check_fusion_axioms(ring).ok);
    CHECK(fpdim_category(ring) == AlgebraicReal(4));
    CHECK(fpdim_object(ring, 2) == AlgebraicReal(2));
    CHECK(ring.end(1) == EndData{2, 2, 1});
    CHECK(ring.end(2) == EndData{4, 1, 2});

    GradingDecomposition g = grading_decomposition(a, s);
    CHECK(g.group.order() == 2);
    REQUIRE(g.components.size() == 2);
    CHECK(g.components[0] == std::vector<int>{0, 2});
    CHECK(g.components[1] == std::vector<int>{1});
    CHECK(ring.N(2, 2, 0) == 4);

    auto single = equivariant_simples(vect_qi(1));
    CHECK(grading_decomposition(vect_qi(1), single).components.size() == 1);
}

TEST_CASE("property: equivariant simples satisfy their defining identities") {
    std::vector<GaloisAction> actions{GaloisAction::appendix_a(), GaloisAction::appendix_a(NumberField::cyclotomic(8)),
                                      GaloisAction::appendix_a(NumberField::cyclotomic(12)), symmetric_z2(),
                                      vect_qi(1)};
    for (const auto& act : actions) {
        auto simples = equivariant_simples(act);
        std::map<int, int> seen;
        std::size_t orbits = 0;
        for (int g = 0; g < act.order(); ++g)
            if (act.perm(g) >= g) ++orbits;
        REQUIRE(simples.size() == orbits);
        for (const auto& s : simples) {
            REQUIRE(satisfies_equivariance(act, s));
            REQUIRE(equivariant_hom_dim(act, s, s) == s.end_dim);
            const int want = s.end_type == EndType::Real ? 1 : s.end_type == EndType::Complex ? 2 : 4;
            REQUIRE(s.end_dim == want);
            const int g = s.underlying[0];
            if (s.end_type == EndType::Complex) {
                REQUIRE(act.perm(g) != g);
                REQUIRE(multiset(s.underlying) == std::map<int, int>{{g, 1}, {act.perm(g), 1}});
            } else {
                REQUIRE(act.perm(g) == g);
                REQUIRE(s.underlying.size() == (s.end_type == EndType::Real ? 1u : 2u));
                // On a fixed simple u∘σ(u) = γ(g)·Id.
                FieldMatrix sq = twisted_square(act.sigma(), s.u);
                for (std::size_t i = 0; i < sq.size(); ++i)
                    for (std::size_t j = 0; j < sq.size(); ++j)
                        REQUIRE(sq[i][j] == (i == j ? act.gamma(g) : FieldElement::zero(act.field())));
            }
            for (int x : s.underlying) ++seen[x];
        }
        for (int g = 0; g < act.order(); ++g) REQUIRE(seen.count(g) == 1);
        FusionRing ring = equivariant_fusion_ring(act, simples);
        REQUIRE(check_fusion_axioms(ring).ok);
        // Tensor products conserve underlying multisets.
        for (const auto& x : simples)
            for (const auto& y : simples) {
                std::vector<int> want;
                for (int p : x.underlying)
                    for (int q : y.underlying) want.push_back(act.base().group().mul(p, q));
                std::vector<int> got;
                for (auto [idx, mult] : equivariant_tensor_decompose(act, simples, x, y))
                    for (int m = 0; m < mult; ++m)
                        for (int g : simples[static_cast<std::size_t>(idx)].underlying) got.push_back(g);
                REQUIRE(multiset(got) == multiset(want));
            }
    }
}
