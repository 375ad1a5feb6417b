#include "wittkit/equivariant.hpp"
#include "wittkit/errors.hpp"

#include <cmath>

namespace wittkit {

GaloisAction::GaloisAction(PointedBraidedCategory base, FieldAutomorphism sigma, std::vector<int> perm, const Table2& J,
                           const Table1& gamma, std::vector<std::string> names)
    : base_(std::move(base)), sigma_(std::move(sigma)), perm_(std::move(perm)), names_(std::move(names)) {
    const int n = base_.order();
    const FiniteGroup& G = base_.group();
    if (sigma_.field() != base_.field()) throw InvariantViolation("σ acts on a different field than the category");
    if (sigma_.order() != 2) throw InvariantViolation("Galois action needs σ of order exactly 2");
    if (static_cast<int>(perm_.size()) != n) throw ShapeMismatch("object permutation has wrong length");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int g = 0; g < n; ++g) {
        const int t = perm_[static_cast<std::size_t>(g)];
        if (t < 0 || t >= n || hit[static_cast<std::size_t>(t)]) throw InvariantViolation("object map is not a permutation");
        hit[static_cast<std::size_t>(t)] = true;
    }
    for (int g = 0; g < n; ++g) {
        if (this->perm(this->perm(g)) != g) throw InvariantViolation("T² is not the identity on objects");
        for (int h = 0; h < n; ++h)
            if (this->perm(G.mul(g, h)) != G.mul(this->perm(g), this->perm(h))) throw InvariantViolation("object map is not a group automorphism");
    }
    auto checked = [&](FieldElement x, const char* what) {
        if (x.field() != field()) throw InvariantViolation(std::string(what) + " entry lies in a different field");
        if (x.is_zero()) throw InvariantViolation(std::string(what) + " entry is zero");
        return x;
    };
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) J_.push_back(checked(J(g, h), "tensorator"));
    for (int g = 0; g < n; ++g) gamma_.push_back(checked(gamma(g), "gamma"));
    if (names_.empty())
        for (int g = 0; g < n; ++g) names_.push_back("g" + std::to_string(g));
    if (static_cast<int>(names_.size()) != n) throw ShapeMismatch("object names have wrong length");
}

namespace {

GaloisAction appendix_with(const NumberField& qi, bool twisted) {
    // σ is complex conjugation, so the field has to contain i.
    if (qi.known_root_of_unity_order() % 4 != 0)
        throw InsufficientRoots("appendix action needs i in " + qi.label());
    PointedBraidedCategory base = drinfeld_center_pointed(FiniteGroup::cyclic(2), qi);
    const int n = qi.cyclotomic_order().value_or(1);
    FieldAutomorphism conj(qi, n > 2 ? FieldElement::generator(qi).pow(n - 1) : FieldElement::generator(qi));
    // index x = i + 2j for E^i M^j
    auto sgn = [qi](int e) { return FieldElement(qi, Rational(e % 2 == 0 ? 1 : -1)); };
    GaloisAction::Table2 J = [=](int x, int y) { return twisted ? sgn((x % 2) * (y / 2)) : sgn(0); };
    GaloisAction::Table1 gamma = [=](int x) { return sgn((x % 2) * (x / 2)); };
    return GaloisAction(base, conj, {0, 2, 1, 3}, J, gamma, {"I", "E", "M", "EM"});
}

}  // namespace

GaloisAction GaloisAction::appendix_a(const NumberField& field) { return appendix_with(field, true); }
GaloisAction GaloisAction::appendix_a_untwisted() { return appendix_with(NumberField::cyclotomic(4), false); }

std::vector<FieldElement> t_squared_tensorator(const GaloisAction& action) {
    const int n = action.order();
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(n * n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) out.push_back(action.sigma()(action.J(g, h)) * action.J(action.perm(g), action.perm(h)));
    return out;
}

CheckResult check_action_coherence(const GaloisAction& action) {
    const auto& cat = action.base();
    const FiniteGroup& G = cat.group();
    const auto& s = action.sigma();
    const int n = action.order();
    auto T = [&](int g) { return action.perm(g); };
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                FieldElement lhs = s(cat.omega(g, h, k)) * action.J(g, h) * action.J(G.mul(g, h), k);
                FieldElement rhs = cat.omega(T(g), T(h), T(k)) * action.J(h, k) * action.J(g, G.mul(h, k));
                if (lhs != rhs) return CheckResult::fail({g, h, k}, "tensorator is not monoidal");
            }
    if (cat.has_braiding())
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                if (cat.c(T(g), T(h)) * action.J(h, g) != s(cat.c(g, h)) * action.J(g, h))
                    return CheckResult::fail({g, h}, "T is not braided");
    auto J2 = t_squared_tensorator(action);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (action.gamma(G.mul(g, h)) * J2[static_cast<std::size_t>(g * n + h)] != action.gamma(g) * action.gamma(h))
                return CheckResult::fail({g, h}, "gamma is not monoidal for the T² tensorator");
    for (int g = 0; g < n; ++g)
        if (action.gamma(T(g)) != s(action.gamma(g))) return CheckResult::fail({g}, "gamma_T(g) differs from σ(gamma_g)");
    return CheckResult::pass();
}

std::string to_string(EndType t) {
    switch (t) {
        case EndType::Real: return "REAL";
        case EndType::Complex: return "COMPLEX";
        case EndType::Quaternionic: return "QUATERNIONIC";
    }
    return "?";
}

namespace {

bool is_root_of_unity(const FieldElement& x) {
    const int n = x.field().degree();
    const int bound = 2 * n * n + 2;
    FieldElement p = x;
    for (int m = 1; m <= bound; ++m) {
        if (p.is_one()) return true;
        p *= x;
    }
    return false;
}

// Squarefree kernel d of a nonzero integer D = m²·d; nullopt when D is too
// large to factor by trial division.
std::optional<std::pair<Integer, Integer>> squarefree_split(Integer D) {
    if (abs(D) > Integer("1000000000000")) return std::nullopt;
    Integer m = 1, d = D < 0 ? -1 : 1;
    D = abs(D);
    for (Integer p = 2; p * p <= D; ++p) {
        int e = 0;
        while (D % p == 0) {
            D /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) m *= p;
        if (e % 2) d *= p;
    }
    d *= D;
    return std::make_pair(m, d);
}

}  // namespace

NormSolution solve_norm_equation(const FieldAutomorphism& sigma, const FieldElement& gamma) {
    const NumberField& K = sigma.field();
    if (gamma.is_zero()) throw InvariantViolation("norm target is zero");
    if (sigma(gamma) != gamma) throw InvariantViolation("norm target is not fixed by σ");
    if (gamma.is_one()) return {FieldElement::one(K), "u = 1"};
    std::vector<FieldElement> roots{FieldElement::one(K), -FieldElement::one(K)};
    if (K.cyclotomic_order()) {
        const int w = K.known_root_of_unity_order();
        for (int k = 0; k < w; ++k) roots.push_back(FieldElement::root_of_unity(K, w, k));
    }
    for (const auto& z : roots)
        if (z * sigma(z) == gamma) return {z, "u is a root of unity"};
    if (!is_root_of_unity(gamma))
        throw ObstructionUndecidable("u·σ(u) = " + gamma.to_string() + ": target is not a root of unity");
    FieldElement t = FieldElement::generator(K) - sigma(FieldElement::generator(K));
    if (K.degree() == 2) {
        // K = Q(t) with t² = δ ∈ Q; the target is −1, the only nontrivial rational root of unity.
        FieldElement delta = t * t;
        Rational dv = delta.coeffs()[0];
        auto split = squarefree_split(Integer(dv.get_num() * dv.get_den()));
        if (!split) throw ObstructionUndecidable("discriminant too large to factor");
        const auto& [m, d] = *split;
        if (d < 0)
            return {std::nullopt, "norms from Q(sqrt(" + d.get_str() + ")) are a² + " + Integer(-d).get_str() +
                                      "·b² >= 0, so " + gamma.to_string() + " is not a norm"};
        Integer rest = d;
        for (Integer p = 2; rest > 1; ++p) {
            if (p * p > rest) p = rest;
            if (rest % p != 0) continue;
            rest /= p;
            if (p % 4 == 3)
                return {std::nullopt, "-1 is not a norm from Q(sqrt(" + d.get_str() + ")): the prime " + p.get_str() +
                                          " ≡ 3 mod 4 divides " + d.get_str()};
        }
        FieldElement t0 = t * Rational(Integer(dv.get_den()), m);
        for (Integer x = 0; x * x <= d; ++x) {
            Integer z2 = d - x * x;
            Integer z = sqrt(z2);
            if (z * z != z2 || z == 0) continue;
            FieldElement u = (FieldElement(K, Rational(x)) + t0) * Rational(Integer(1), z);
            if (u * sigma(u) == gamma) return {u, "u = (" + x.get_str() + " + sqrt(" + d.get_str() + "))/" + z.get_str()};
        }
        throw ObstructionUndecidable("no two-square representation of " + d.get_str());
    }
    // If σ is complex conjugation under some embedding, every norm maps to |u|² > 0.
    const int bits = 256;
    auto embs = numeric_embeddings(K, bits);
    FieldElement s_theta = sigma(FieldElement::generator(K));
    mpf_class tol(1, bits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 100);
    for (std::size_t i = 0; i < embs.size(); ++i) {
        const auto& e = embs[i];
        Embedding img = evaluate(s_theta, e, bits);
        if (abs(img.re - e.re) < tol && abs(img.im + e.im) < tol) {
            Embedding g = evaluate(gamma, e, bits);
            if (g.re < 0)
                return {std::nullopt, "σ is complex conjugation at embedding " + std::to_string(i) +
                                          ", where norms are |u|² > 0 but γ is negative"};
        }
    }
    throw ObstructionUndecidable("cannot decide whether " + gamma.to_string() + " is a norm for σ");
}

}  // namespace wittkit
