#include "wittkit/errors.hpp"
#include "wittkit/galoiswitt.hpp"

namespace wittkit {

namespace {

FieldPolynomial lift(const NumberField& K, const Polynomial& p) {
    FieldPolynomial out;
    for (const auto& c : p.coeffs()) out.emplace_back(K, c);
    return out;
}

FieldPolynomial multiply(const NumberField& K, const FieldPolynomial& a, const FieldPolynomial& b) {
    FieldPolynomial c(a.size() + b.size() - 1, FieldElement::zero(K));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// p / (x − r); throws if r is not a root.
FieldPolynomial divide_linear(const FieldPolynomial& p, const FieldElement& r) {
    const std::size_t n = p.size() - 1;
    FieldPolynomial q(n, FieldElement::zero(r.field()));
    FieldElement carry = p[n];
    for (std::size_t i = n; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * r;
    }
    if (!carry.is_zero()) throw InvariantViolation("linear factor does not divide");
    return q;
}

FieldPolynomial linear(const FieldElement& root) { return {-root, FieldElement::one(root.field())}; }

// Absolute field K[x]/(R) for monic R irreducible over K: the norm of
// R(y − s·θ) is squarefree for some small shift s.
NumberField flatten(const NumberField& K, const FieldPolynomial& R) {
    const Polynomial& f = K.min_poly();
    const int n = static_cast<int>(R.size()) - 1;
    const int d = n * f.degree();
    for (long s : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) {
        std::vector<Rational> ys, vals;
        for (int i = 0; i <= d; ++i) {
            Rational y0(i);
            Polynomial shift(std::vector<Rational>{y0, Rational(-s)});  // y0 − s·t
            Polynomial G, power = Polynomial::constant(Rational(1));
            for (int j = 0; j <= n; ++j) {
                G += R[static_cast<std::size_t>(j)].as_polynomial() * power;
                power = power * shift;
            }
            ys.push_back(y0);
            vals.push_back(resultant(f, G));
        }
        Polynomial N = interpolate(ys, vals);
        if (gcd(N, N.derivative()).degree() != 0) continue;
        return NumberField::from_certified(N.monic(), IrreducibilityProof::Tower,
                                           K.label() + "[x]/(" + factor_string(R) + ")");
    }
    throw Inconclusive("no squarefree norm found while flattening " + factor_string(R));
}

}  // namespace

std::string factor_string(const FieldPolynomial& p) {
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        std::string c = p[i].to_string();
        const bool simple = c.find(' ') == std::string::npos;
        const bool negative = simple && c[0] == '-';
        if (negative) c.erase(0, 1);
        if (!s.empty()) s += negative ? " - " : " + ";
        else if (negative) s += "-";
        if (i == 0)
            s += c;
        else
            s += (c == "1" ? "" : simple ? c : "(" + c + ")") + (i == 1 ? "x" : "x^" + std::to_string(i));
    }
    return s.empty() ? "0" : s;
}

TensorDecomposition tensor_decompose(const NumberField& k, const NumberField& K, long height_bound) {
    TensorDecomposition dec{k, K, {}, 0, std::nullopt, {}};
    const FieldElement theta = FieldElement::generator(K);
    if (k == K) {
        dec.components.push_back({K, 1, linear(theta), theta, "trivial extension"});
        dec.galois_group = FiniteGroup::trivial();
        dec.automorphisms = {FieldAutomorphism::identity(K)};
        return dec;
    }
    if (k.degree() != 1) throw InvariantViolation("tensor_decompose supports base Q or the trivial extension");
    dec.automorphisms = automorphisms(K, height_bound);
    FieldPolynomial rest = lift(K, K.min_poly());
    for (const auto& a : dec.automorphisms) {
        FieldElement r = a(theta);
        rest = divide_linear(rest, r);
        dec.components.push_back({K, 1, linear(r), r, "automorphism θ ↦ " + r.to_string()});
    }
    const int remaining = static_cast<int>(rest.size()) - 1;
    if (remaining == 0) {
        const std::size_t g = dec.automorphisms.size();
        std::vector<std::vector<int>> table(g, std::vector<int>(g));
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t b = 0; b < g; ++b) {
                auto c = dec.automorphisms[a].compose(dec.automorphisms[b]);
                for (std::size_t x = 0; x < g; ++x)
                    if (dec.automorphisms[x] == c) table[a][b] = static_cast<int>(x);
            }
        dec.galois_group = FiniteGroup::from_table(table, "Gal(" + K.label() + "/Q)");
        return dec;
    }
    if (remaining == 1) {
        FieldElement r = -rest[0] / rest[1];
        dec.components.push_back({K, 1, linear(r), r, "remaining linear factor"});
        return dec;
    }
    if (remaining >= 3) throw UnfactoredRemainder(remaining);
    const FieldElement& a = rest[2];
    const FieldElement& b = rest[1];
    const FieldElement& c = rest[0];
    FieldElement disc = b * b - a * c * Rational(4);
    SqrtResult sq = sqrt_in_field(disc, height_bound);
    if (sq.status == SqrtStatus::Inconclusive) throw Inconclusive("discriminant " + disc.to_string() + ": " + sq.certificate);
    if (sq.status == SqrtStatus::Found) {
        FieldElement two_a = a * Rational(2);
        for (const FieldElement& sgn : {*sq.root, -*sq.root}) {
            FieldElement r = (-b + sgn) / two_a;
            dec.components.push_back({K, 1, linear(r), r, "discriminant is a square: " + sq.certificate});
        }
        return dec;
    }
    FieldPolynomial monic{c / a, b / a, FieldElement::one(K)};
    dec.components.push_back({flatten(K, monic), 2, monic, std::nullopt,
                              "discriminant " + disc.to_string() + " is not a square: " + sq.certificate});
    return dec;
}

bool factors_multiply_back(const TensorDecomposition& dec) {
    const NumberField& K = dec.extension;
    FieldPolynomial prod{FieldElement::one(K)};
    for (const auto& comp : dec.components) prod = multiply(K, prod, comp.factor);
    FieldPolynomial f = dec.base == K ? linear(FieldElement::generator(K)) : lift(K, K.min_poly());
    return prod == f;
}

CheckResult verify_action_formula(const TensorDecomposition& dec) {
    if (!dec.galois_group) return CheckResult::fail({}, "extension is not Galois");
    const auto& auts = dec.automorphisms;
    const FiniteGroup& G = *dec.galois_group;
    const NumberField& K = dec.extension;
    const int n = G.order();
    if (dec.base == K) return CheckResult::pass();
    std::vector<FieldElement> basis;
    FieldElement p = FieldElement::one(K);
    for (int i = 0; i < K.degree(); ++i, p *= FieldElement::generator(K)) basis.push_back(p);
    auto aut = [&](int g) -> const FieldAutomorphism& { return auts[static_cast<std::size_t>(g)]; };
    for (int alpha = 0; alpha < n; ++alpha)
        for (int beta = 0; beta < n; ++beta)
            for (int gamma = 0; gamma < n; ++gamma) {
                const int delta = G.mul(G.mul(G.inverse(alpha), gamma), beta);
                for (std::size_t i = 0; i < basis.size(); ++i)
                    for (std::size_t j = 0; j < basis.size(); ++j) {
                        const FieldElement& a = basis[i];
                        const FieldElement& b = basis[j];
                        // image of α(a) ⊗ β(b) at component γ
                        FieldElement lhs = aut(alpha)(a) * aut(gamma)(aut(beta)(b));
                        FieldElement rhs = aut(alpha)(a * aut(delta)(b));
                        if (lhs != rhs)
                            return CheckResult::fail({alpha, beta, gamma, static_cast<int>(i), static_cast<int>(j)},
                                                     "(α,β)·c_γ differs from α(c_{α⁻¹γβ})");
                    }
            }
    return CheckResult::pass();
}

}  // namespace wittkit
