#include "wittkit/errors.hpp"
#include "wittkit/fusionring.hpp"

#include <doctest.h>

#include <cmath>

using namespace wittkit;

namespace {

using Table = std::vector<std::vector<std::vector<int>>>;

Table zeros(int r) { return Table(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0))); }

FusionRing ising() {
    Table N = zeros(3);  // 1, σ, ψ
    for (int i = 0; i < 3; ++i) N[0][i][i] = N[i][0][i] = 1;
    N[1][1][0] = N[1][1][2] = 1;
    N[1][2][1] = N[2][1][1] = 1;
    N[2][2][0] = 1;
    return FusionRing({"1", "sigma", "psi"}, N, 0, {0, 1, 2});
}

FusionRing appendix_ring() {
    Table N = zeros(3);  // I, K, H
    for (int i = 0; i < 3; ++i) N[0][i][i] = N[i][0][i] = 1;
    N[1][1][0] = 2;
    N[1][1][2] = 1;
    N[1][2][1] = N[2][1][1] = 2;
    N[2][2][0] = 4;
    return FusionRing({"I", "K", "H"}, N, 0, {0, 1, 2}, {{1, 1, 1}, {2, 2, 1}, {4, 1, 2}});
}

// Basis pairs (a, b) with index a + ra·b.
FusionRing product(const FusionRing& x, const FusionRing& y) {
    const int rx = x.rank(), ry = y.rank(), r = rx * ry;
    Table N = zeros(r);
    std::vector<std::string> labels(static_cast<std::size_t>(r));
    std::vector<int> dual(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        labels[static_cast<std::size_t>(i)] = x.label(i % rx) + "." + y.label(i / rx);
        dual[static_cast<std::size_t>(i)] = x.dual(i % rx) + rx * y.dual(i / rx);
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                N[i][j][k] = x.N(i % rx, j % rx, k % rx) * y.N(i / rx, j / rx, k / rx);
    }
    return FusionRing(labels, N, x.unit() + rx * y.unit(), dual);
}

// Largest eigenvalue of a nonnegative matrix by power iteration.
double perron(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    std::vector<double> v(n, 1.0), w(n);
    double lambda = 0;
    for (int it = 0; it < 500; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = v[i];  // the shift by 1 separates the Perron root from the rest of its circle
            for (std::size_t j = 0; j < n; ++j) w[i] += m[i][j].get_d() * v[j];
        }
        double norm = 0;
        for (double x : w) norm = std::max(norm, x);
        lambda = norm - 1;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    }
    return lambda;
}

std::vector<FusionRing> shipped_rings() {
    const NumberField q3 = NumberField::cyclotomic(3);
    return {FusionRing::group_ring(FiniteGroup::trivial()),
            FusionRing::group_ring(FiniteGroup::cyclic(2)),
            FusionRing::group_ring(FiniteGroup::cyclic(3)),
            FusionRing::group_ring(FiniteGroup::product({2, 2})),
            FusionRing::group_ring(FiniteGroup::cyclic(6)),
            FusionRing::fibonacci(),
            ising(),
            appendix_ring(),
            FusionRing::from_pointed(drinfeld_center_pointed(FiniteGroup::cyclic(3), q3)),
            product(FusionRing::fibonacci(), FusionRing::fibonacci()),
            product(ising(), FusionRing::fibonacci())};
}

}  // namespace

TEST_CASE("algebraic reals") {
    const AlgebraicReal two(2);
    AlgebraicReal s = *AlgebraicReal::largest_root(Polynomial({-2, 0, 1}));
    CHECK(!s.is_rational());
    CHECK(s * s == two);
    CHECK(s.approx() == doctest::Approx(std::sqrt(2.0)));
    AlgebraicReal phi = *AlgebraicReal::largest_root(Polynomial({-1, -1, 1}));
    CHECK(phi * phi == phi + AlgebraicReal(1));
    CHECK(phi.inverse() == phi - AlgebraicReal(1));
    CHECK(s < phi);
    CHECK(compare(phi, s) == 1);
    CHECK((s - s).is_rational());
    CHECK((s + phi).approx() == doctest::Approx(std::sqrt(2.0) + (1 + std::sqrt(5.0)) / 2));
    CHECK(AlgebraicReal(Rational(7, 3)).to_string() == "7/3");
    CHECK(phi.to_string().rfind("root of x^2 - x - 1 near 1.618", 0) == 0);
    CHECK(!AlgebraicReal::largest_root(Polynomial({1, 0, 1})));
    CHECK_THROWS_AS(AlgebraicReal::root_in(Polynomial({-2, 0, 1}), -2, 2), InvariantViolation);
    CHECK_THROWS_AS(AlgebraicReal(0).inverse(), DivisionByZero);
    CHECK((-phi).sign() == -1);
}

TEST_CASE("characteristic polynomial") {
    CHECK(characteristic_polynomial({{0, 1}, {1, 1}}) == Polynomial({-1, -1, 1}));
    CHECK(characteristic_polynomial({{2}}) == Polynomial({-2, 1}));
}

TEST_CASE("fusion axioms") {
    CHECK(check_fusion_axioms(FusionRing::group_ring(FiniteGroup::cyclic(2))).ok);
    CHECK(check_fusion_axioms(FusionRing::fibonacci()).ok);
    CHECK(check_fusion_axioms(appendix_ring()).ok);
    CHECK(check_fusion_axioms(ising()).ok);

    // Every commutative unital ring of rank 2 is associative, so raising
    // N[τ][τ][τ] to 2 keeps the axioms intact.
    FusionRing fib2 = FusionRing::fibonacci().with_entry(1, 1, 1, 2);
    CHECK(check_fusion_axioms(fib2).ok);

    // 1, a, b with a⊗a = b⊗b = 1 and a⊗b = b⊗a = a: (a⊗a)⊗b = b but a⊗(a⊗b) = 1.
    Table N = zeros(3);
    for (int i = 0; i < 3; ++i) N[0][i][i] = N[i][0][i] = 1;
    N[1][1][0] = N[2][2][0] = 1;
    N[1][2][1] = N[2][1][1] = 1;
    CheckResult r = check_fusion_axioms(FusionRing({"1", "a", "b"}, N, 0, {0, 1, 2}));
    CHECK(!r.ok);
    CHECK(r.detail.find("assoc") != std::string::npos);

    CheckResult u = check_fusion_axioms(FusionRing::fibonacci().with_entry(0, 1, 0, 1));
    CHECK(!u.ok);
    CheckResult d = check_fusion_axioms(appendix_ring().with_entry(2, 2, 0, 3));
    CHECK(!d.ok);
}

TEST_CASE("FPdim of objects") {
    FusionRing z3 = FusionRing::group_ring(FiniteGroup::cyclic(3));
    for (int i = 0; i < 3; ++i) CHECK(fpdim_object(z3, i) == AlgebraicReal(1));
    AlgebraicReal tau = fpdim_object(FusionRing::fibonacci(), 1);
    CHECK(tau.polynomial() == Polynomial({-1, -1, 1}));
    CHECK(tau.approx() == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    CHECK(fpdim_object(appendix_ring(), 2) == AlgebraicReal(2));
    CHECK(fpdim_object(appendix_ring(), 1) == AlgebraicReal(2));
    AlgebraicReal sigma = fpdim_object(ising(), 1);
    CHECK(sigma * sigma == AlgebraicReal(2));
}

TEST_CASE("FPdim of categories") {
    CHECK(fpdim_category(FusionRing::group_ring(FiniteGroup::product({2, 2}))) == AlgebraicReal(4));
    CHECK(fpdim_category(appendix_ring()) == AlgebraicReal(4));
    AlgebraicReal f = fpdim_category(FusionRing::fibonacci());
    // (5 + √5)/2 is a root of x^2 - 5x + 5
    CHECK(f.polynomial() == Polynomial({5, -5, 1}));
    CHECK(f.approx() == doctest::Approx((5 + std::sqrt(5.0)) / 2));
    CHECK(fpdim_category(ising()) == AlgebraicReal(4));
    FusionRing flagged({"1"}, {{{1}}}, 0, {0}, {}, true);
    CHECK_THROWS_AS(fpdim_category(flagged), GaloisNontrivial);
}

TEST_CASE("base change splitting") {
    const AlgebraicReal two(2);
    BaseChangeSplit r = base_change_split({1, 1, 1}, two);
    CHECK(r.k == 1);
    CHECK(r.n == 1);
    CHECK(r.d == two);
    r = base_change_split({2, 2, 1}, two);
    CHECK(r.k == 2);
    CHECK(r.d == AlgebraicReal(1));
    r = base_change_split({4, 1, 2}, two);
    CHECK(r.n == 2);
    CHECK(r.d == AlgebraicReal(1));
    // k·d² = D²/dim for every split
    for (const EndData& e : {EndData{1, 1, 1}, EndData{2, 2, 1}, EndData{4, 1, 2}, EndData{9, 1, 3}}) {
        BaseChangeSplit s = base_change_split(e, two);
        CHECK(AlgebraicReal(s.k) * s.d * s.d == two * two * AlgebraicReal(Rational(1, e.dim)));
    }
    CHECK_THROWS_AS(base_change_split({3, 1, 1}, two), InconsistentDivisionData);
    CHECK_THROWS_AS(base_change_split({0, 1, 1}, two), InconsistentDivisionData);
}

TEST_CASE("FPdim of a center is the square") {
    const NumberField qi = NumberField::cyclotomic(4);
    CHECK(fpdim_center_square_check(FusionRing::group_ring(FiniteGroup::cyclic(2)),
                                    FusionRing::from_pointed(drinfeld_center_pointed(FiniteGroup::cyclic(2), qi))));
    FusionRing one = FusionRing::group_ring(FiniteGroup::trivial());
    CHECK(fpdim_center_square_check(one, one));
    const NumberField q3 = NumberField::cyclotomic(3);
    FusionRing z3 = FusionRing::from_pointed(drinfeld_center_pointed(FiniteGroup::cyclic(3), q3));
    CHECK(z3.rank() == 9);
    CHECK(fpdim_center_square_check(FusionRing::group_ring(FiniteGroup::cyclic(3)), z3));
    CHECK(!fpdim_center_square_check(FusionRing::group_ring(FiniteGroup::cyclic(2)), z3));
}

TEST_CASE("property: FPdim laws on every shipped ring") {
    for (const FusionRing& ring : shipped_rings()) {
        INFO(ring.label(0), " rank ", ring.rank());
        REQUIRE(check_fusion_axioms(ring).ok);
        REQUIRE(check_fpdim_multiplicative(ring).ok);
        for (int i = 0; i < ring.rank(); ++i) {
            const AlgebraicReal d = fpdim_object(ring, i);
            REQUIRE(d == fpdim_object(ring, ring.dual(i)));
            REQUIRE(d >= AlgebraicReal(1));
            REQUIRE(d.approx() == doctest::Approx(perron(ring.left_matrix(i))).epsilon(1e-9));
        }
    }
    for (const FiniteGroup& g : {FiniteGroup::cyclic(5), FiniteGroup::product({2, 3}), FiniteGroup::product({2, 2, 2})})
        CHECK(fpdim_category(FusionRing::group_ring(g)) == AlgebraicReal(g.order()));
}
