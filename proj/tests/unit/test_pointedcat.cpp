#include "wittkit/errors.hpp"
#include "wittkit/pointedcat.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wittkit;

namespace {

const NumberField& qi() {
    static const NumberField k = NumberField::cyclotomic(4);
    return k;
}

FieldElement sc(const NumberField& k, long v) { return FieldElement(k, Rational(v)); }

PointedBraidedCategory z2_with(const std::function<FieldElement(int, int, int)>& omega,
                               const std::optional<PointedBraidedCategory::Table2>& c) {
    return PointedBraidedCategory(FiniteGroup::cyclic(2), qi(), omega, c);
}

PointedBraidedCategory semion() {
    const FieldElement i = FieldElement::generator(qi());
    return z2_with([](int a, int b, int c) { return sc(qi(), a && b && c ? -1 : 1); },
                   [i](int a, int b) { return a && b ? i : FieldElement::one(qi()); });
}

PointedBraidedCategory symmetric(const FiniteGroup& g) {
    const NumberField q = NumberField::rationals();
    return PointedBraidedCategory(g, q, [q](int, int, int) { return FieldElement::one(q); },
                                  [q](int, int) { return FieldElement::one(q); });
}

Subgroup sg(std::vector<int> e) { return Subgroup{std::move(e)}; }

bool subset(const Subgroup& a, const Subgroup& b) {
    return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

}  // namespace

TEST_CASE("pentagon") {
    CHECK(check_pentagon(symmetric(FiniteGroup::product({2, 2}))).ok);
    CHECK(check_pentagon(z2_with([](int a, int b, int c) { return sc(qi(), a && b && c ? -1 : 1); }, std::nullopt)).ok);
    CheckResult r = check_pentagon(z2_with([](int a, int b, int c) { return sc(qi(), !a && b && c ? -1 : 1); }, std::nullopt));
    CHECK(!r.ok);
    CHECK(r.where.size() == 4);

    // Entries that are not roots of unity: the coboundary of f with f(1,1) = 2.
    const NumberField q = NumberField::rationals();
    auto f = [](int a, int b) { return Rational(a && b ? 2 : 1); };
    auto df = [q, f](int a, int b, int c) {
        return FieldElement(q, f(b, c) * f(a, (b + c) % 2) / (f((a + b) % 2, c) * f(a, b)));
    };
    CHECK(check_pentagon(PointedBraidedCategory(FiniteGroup::cyclic(2), q, df, std::nullopt)).ok);
    CheckResult two = check_pentagon(PointedBraidedCategory(
        FiniteGroup::cyclic(2), q, [q](int a, int b, int c) { return FieldElement(q, Rational(a && b && c ? 2 : 1)); },
        std::nullopt));
    CHECK(!two.ok);
    CHECK(two.where == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("hexagons") {
    const NumberField& k = qi();
    PointedBraidedCategory b = drinfeld_center_pointed(FiniteGroup::cyclic(2), k);
    CHECK(check_hexagons(b).ok);
    // (−1)^{jk} for E^i M^j ↔ index i + 2j.
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const int j = x / 2, kk = y % 2;
            CHECK(b.c(x, y) == sc(k, (j * kk) % 2 ? -1 : 1));
        }
    CHECK(check_hexagons(semion()).ok);
    CHECK(check_pentagon(semion()).ok);
    auto bad = z2_with([](int a, int b, int c) { return sc(qi(), a && b && c ? -1 : 1); },
                       [](int a, int b) { return sc(qi(), a && b ? -1 : 1); });
    CHECK(!check_hexagons(bad).ok);
    // c(1,1) = 2 is not a root of unity and breaks the first hexagon at (1,1,1)
    auto big = z2_with([](int, int, int) { return FieldElement::one(qi()); },
                       [](int a, int b) { return sc(qi(), a && b ? 2 : 1); });
    CheckResult h = check_hexagons(big);
    CHECK(!h.ok);
    CHECK(h.where == std::vector<int>{1, 1, 1});
}

TEST_CASE("category construction is validated") {
    const NumberField& k = qi();
    CHECK_THROWS_AS(z2_with([](int, int, int) { return FieldElement::zero(qi()); }, std::nullopt), InvariantViolation);
    FiniteGroup s3 = FiniteGroup::from_table({{0, 1, 2, 3, 4, 5},
                                              {1, 0, 3, 2, 5, 4},
                                              {2, 4, 0, 5, 1, 3},
                                              {3, 5, 1, 4, 0, 2},
                                              {4, 2, 5, 0, 3, 1},
                                              {5, 3, 4, 1, 2, 0}});
    CHECK(!s3.is_abelian());
    CHECK_THROWS_AS(PointedBraidedCategory(s3, k, [k](int, int, int) { return FieldElement::one(k); },
                                           [k](int, int) { return FieldElement::one(k); }),
                    InvariantViolation);
    CHECK_NOTHROW(PointedBraidedCategory(s3, k, [k](int, int, int) { return FieldElement::one(k); }, std::nullopt));
}

TEST_CASE("Drinfeld centers") {
    PointedBraidedCategory b = drinfeld_center_pointed(FiniteGroup::cyclic(2), qi());
    CHECK(b.order() == 4);
    PointedBraidedCategory t = drinfeld_center_pointed(FiniteGroup::trivial(), NumberField::rationals());
    CHECK(t.order() == 1);
    CHECK(t.c(0, 0).is_one());

    const NumberField q3 = NumberField::cyclotomic(3);
    PointedBraidedCategory z3 = drinfeld_center_pointed(FiniteGroup::cyclic(3), q3);
    CHECK(z3.order() == 9);
    const FieldElement zeta = FieldElement::generator(q3);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) CHECK(z3.c(x, y) == zeta.pow((x / 3) * (y % 3)));

    CHECK_THROWS_AS(drinfeld_center_pointed(FiniteGroup::cyclic(3), qi()), InsufficientRoots);
    CHECK_THROWS_AS(drinfeld_center_pointed(FiniteGroup::cyclic(4), NumberField::rationals()), InsufficientRoots);
    CHECK(drinfeld_center_pointed(FiniteGroup::cyclic(2), NumberField::rationals()).c(2, 1) == sc(NumberField::rationals(), -1));
    CHECK(is_nondegenerate(drinfeld_center_pointed(FiniteGroup::cyclic(6), NumberField::cyclotomic(3))));
}

TEST_CASE("Muger centers and nondegeneracy") {
    PointedBraidedCategory b = drinfeld_center_pointed(FiniteGroup::cyclic(2), qi());
    CHECK(muger_center(b).is_trivial());
    CHECK(is_nondegenerate(b));
    PointedBraidedCategory s = symmetric(FiniteGroup::product({2, 2}));
    CHECK(muger_center(s).elements.size() == 4);
    CHECK(!is_nondegenerate(s));
    CHECK(muger_center(semion()).is_trivial());
    CHECK(is_nondegenerate(semion()));
}

TEST_CASE("centralizers") {
    PointedBraidedCategory b = drinfeld_center_pointed(FiniteGroup::cyclic(2), qi());
    // I = 0, E = 1, M = 2, EM = 3
    CHECK(centralizer(b, sg({0})).elements.size() == 4);
    CHECK(centralizer(b, sg({0, 1})) == sg({0, 1}));
    CHECK(centralizer(b, sg({0, 3})) == sg({0, 3}));
    CHECK(centralizer(b, sg({0, 2})) == sg({0, 2}));
    CHECK(centralizer(b, sg({0, 1, 2, 3})).is_trivial());
    CHECK(all_subgroups(b.group()).size() == 5);
    CHECK(subgroup_generated_by(b.group(), {3}) == sg({0, 3}));
}

TEST_CASE("double centralizer") {
    DoubleCentralizerResult r = double_centralizer_check(drinfeld_center_pointed(FiniteGroup::cyclic(2), qi()));
    CHECK(r.ok);
    CHECK(r.subgroups_checked == 5);
    const NumberField q3 = NumberField::cyclotomic(3);
    r = double_centralizer_check(drinfeld_center_pointed(FiniteGroup::cyclic(3), q3));
    CHECK(r.ok);
    // Z/3 x Z/3 has four subgroups of order 3 besides the trivial and full ones.
    CHECK(r.subgroups_checked == 6);
    CHECK_THROWS_AS(double_centralizer_check(symmetric(FiniteGroup::cyclic(2))), DegenerateInput);
}

TEST_CASE("property: centers are valid and nondegenerate; centralizers reverse inclusion") {
    struct Case {
        FiniteGroup a;
        NumberField k;
    };
    std::vector<Case> cases{{FiniteGroup::trivial(), NumberField::rationals()},
                            {FiniteGroup::cyclic(2), NumberField::rationals()},
                            {FiniteGroup::cyclic(2), qi()},
                            {FiniteGroup::cyclic(3), NumberField::cyclotomic(3)},
                            {FiniteGroup::cyclic(4), qi()},
                            {FiniteGroup::product({2, 2}), qi()},
                            {FiniteGroup::cyclic(6), NumberField::cyclotomic(6)},
                            {FiniteGroup::product({2, 4}), NumberField::cyclotomic(8)}};
    for (const auto& [a, k] : cases) {
        PointedBraidedCategory z = drinfeld_center_pointed(a, k);
        REQUIRE(check_pentagon(z).ok);
        REQUIRE(check_hexagons(z).ok);
        REQUIRE(is_nondegenerate(z));
        REQUIRE(centralizer(z, subgroup_generated_by(z.group(), {})).elements.size() == static_cast<std::size_t>(z.order()));
        const auto subs = all_subgroups(z.group());
        Subgroup whole = subs.back();
        REQUIRE(muger_center(z) == centralizer(z, whole));
        for (const auto& h : subs) {
            REQUIRE(h.elements.size() * centralizer(z, h).elements.size() == static_cast<std::size_t>(z.order()));
            if (z.order() > 9) continue;
            for (const auto& kk : subs)
                if (subset(h, kk)) REQUIRE(subset(centralizer(z, kk), centralizer(z, h)));
        }
    }
}
