#include "wittkit/numfield.hpp"

#include "irreducibility.hpp"
#include "wittkit/errors.hpp"

#include <numeric>
#include <sstream>

namespace wittkit {

std::string to_string(IrreducibilityProof proof) {
    switch (proof) {
        case IrreducibilityProof::Linear: return "linear";
        case IrreducibilityProof::RationalRoot: return "no rational root";
        case IrreducibilityProof::ModPrimes: return "factor degrees modulo primes";
        case IrreducibilityProof::Cyclotomic: return "cyclotomic";
        case IrreducibilityProof::Tower: return "squarefree tower norm";
    }
    return "unknown";
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

Polynomial cyclotomic_polynomial(int n) {
    if (n < 1) throw InvariantViolation("cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    Polynomial p = Polynomial::monomial(1, n) - Polynomial::constant(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divmod(p, cyclotomic_polynomial(d)).first;
    return p;
}

NumberField NumberField::build(Polynomial f, std::string label, std::optional<int> cyc, IrreducibilityProof proof) {
    auto impl = std::make_shared<Impl>();
    impl->min_poly = std::move(f);
    impl->label = std::move(label);
    impl->cyclotomic_order = cyc;
    impl->proof = proof;
    if (cyc && *cyc == 4) {
        impl->generator_name = "i";
    } else if (cyc && *cyc > 2) {
        impl->generator_name = "z" + std::to_string(*cyc);
    } else {
        impl->generator_name = "t";
    }
    const int d = impl->min_poly.degree();
    // Power table: x^k mod f for d <= k <= 2d-2.
    std::vector<Rational> cur(static_cast<std::size_t>(d));
    if (d >= 1) {
        // x^d = -(f - x^d)
        for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = -impl->min_poly.coeff(i);
    }
    for (int k = d; k <= 2 * d - 2; ++k) {
        impl->power_table.push_back(cur);
        // multiply by x
        std::vector<Rational> next(static_cast<std::size_t>(d));
        Rational top = cur[static_cast<std::size_t>(d - 1)];
        for (int i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        next[0] = 0;
        if (top != 0)
            for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] -= top * impl->min_poly.coeff(i);
        cur = std::move(next);
    }
    return NumberField(std::move(impl));
}

NumberField NumberField::rationals() { return cyclotomic(1); }

NumberField NumberField::cyclotomic(int n) {
    Polynomial f = cyclotomic_polynomial(n);
    std::string label = n <= 2 ? "Q" : (n == 4 ? "Q(i)" : "Q(zeta" + std::to_string(n) + ")");
    // Q(zeta_1) = Q presented as Q[x]/(x - 1); normalize to Q[x]/(x).
    if (f.degree() == 1) f = Polynomial({0, 1});
    const auto proof = f.degree() == 1 ? IrreducibilityProof::Linear : IrreducibilityProof::Cyclotomic;
    return build(std::move(f), label, n, proof);
}

NumberField make_cyclotomic(int n) { return NumberField::cyclotomic(n); }

NumberField NumberField::from_min_poly(const Polynomial& f, std::string label) {
    if (f.degree() < 1) throw InvariantViolation("defining polynomial must have positive degree");
    if (f.lead() != 1) throw InvariantViolation("defining polynomial must be monic");
    auto proof = detail::prove_irreducible(f);
    if (!proof) throw IrreducibilityUnproven("no irreducibility certificate for " + f.to_string());
    if (label.empty()) label = "Q[x]/(" + f.to_string() + ")";
    return build(f, std::move(label), std::nullopt, *proof);
}

NumberField NumberField::from_certified(const Polynomial& f, IrreducibilityProof proof, std::string label) {
    if (f.degree() < 1 || f.lead() != 1) throw InvariantViolation("defining polynomial must be monic of positive degree");
    if (gcd(f, f.derivative()).degree() > 0) throw InvariantViolation("defining polynomial must be squarefree");
    return build(f, std::move(label), std::nullopt, proof);
}

int NumberField::known_root_of_unity_order() const {
    if (impl_->cyclotomic_order) return std::lcm(2, *impl_->cyclotomic_order);
    return 2;
}

bool NumberField::operator==(const NumberField& o) const {
    return impl_ == o.impl_ || impl_->min_poly == o.impl_->min_poly;
}

std::vector<Rational> NumberField::reduce(const Polynomial& p) const {
    const int d = degree();
    std::vector<Rational> out(static_cast<std::size_t>(d));
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (k < d) {
            out[static_cast<std::size_t>(k)] += c;
        } else if (k <= 2 * d - 2) {
            const auto& row = impl_->power_table[static_cast<std::size_t>(k - d)];
            for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] += c * row[static_cast<std::size_t>(i)];
        } else {
            // Rare: high powers outside the table.
            Polynomial r = Polynomial::monomial(c, k) % impl_->min_poly;
            for (int i = 0; i <= r.degree(); ++i) out[static_cast<std::size_t>(i)] += r.coeff(i);
        }
    }
    return out;
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != field_.degree()) coeffs_ = field_.reduce(Polynomial(coeffs_));
    for (auto& c : coeffs_) c.canonicalize();
}

FieldElement::FieldElement(NumberField field, const Rational& c)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_.degree())) {
    coeffs_[0] = c;
}

FieldElement FieldElement::generator(const NumberField& f) {
    return from_polynomial(f, Polynomial({0, 1}));
}

FieldElement FieldElement::from_polynomial(const NumberField& f, const Polynomial& p) {
    return FieldElement(f, f.reduce(p));
}

FieldElement FieldElement::root_of_unity(const NumberField& f, int n, long k) {
    auto cyc = f.cyclotomic_order();
    if (n < 1) throw InvariantViolation("root of unity order must be positive");
    const int avail = f.known_root_of_unity_order();
    if (avail % n != 0)
        throw InsufficientRoots("field " + f.label() + " does not contain the roots of unity of order " + std::to_string(n));
    long kk = ((k % n) + n) % n;
    if (!cyc) return FieldElement(f, Rational(kk == 0 ? 1 : -1));
    // zeta_avail^(avail/n * k). For odd cyclotomic order c, zeta_{2c} = -zeta_c^((c+1)/2).
    long e = kk * (avail / n) % avail;
    const int c = *cyc;
    if (avail == c || c <= 2) {
        if (c <= 2) {
            // Q: only +-1.
            return FieldElement(f, Rational(e == 0 ? 1 : -1));
        }
        return from_polynomial(f, Polynomial::monomial(1, static_cast<int>(e)));
    }
    // avail = 2c with c odd; zeta_{2c}^e = (-1)^e * zeta_c^(e * (c+1)/2 mod c)
    long ze = (e * ((c + 1) / 2)) % c;
    FieldElement z = from_polynomial(f, Polynomial::monomial(1, static_cast<int>(ze)));
    return (e % 2 == 0) ? z : -z;
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (field_ != o.field_) throw ShapeMismatch("field elements from different fields");
}

bool FieldElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_field(o);
    const std::size_t d = coeffs_.size();
    std::vector<Rational> prod(d == 0 ? 0 : 2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = field_.reduce(Polynomial(std::move(prod)));
    return *this;
}

FieldElement operator*(FieldElement a, const Rational& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
}

FieldElement operator-(const FieldElement& a) { return a * Rational(-1); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // s*a + t*f = 1  =>  a^{-1} = s mod f
    auto eg = extended_gcd(as_polynomial(), field_.min_poly());
    if (eg.g.degree() != 0) throw InvariantViolation("defining polynomial is not irreducible");
    return from_polynomial(field_, eg.s);
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result = one(field_);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string FieldElement::to_string() const {
    return as_polynomial().to_string(field_.generator_name());
}

FieldElement invert(const FieldElement& x) { return x.inverse(); }

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& x) {
    const int d = x.field().degree();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    FieldElement basis = FieldElement::one(x.field());
    const FieldElement theta = FieldElement::generator(x.field());
    for (int j = 0; j < d; ++j) {
        FieldElement col = x * basis;
        for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeffs()[static_cast<std::size_t>(i)];
        basis *= theta;
    }
    return m;
}

FieldAutomorphism::FieldAutomorphism(NumberField field, FieldElement image_of_generator)
    : field_(std::move(field)), image_(std::move(image_of_generator)) {
    if (image_.field() != field_) throw ShapeMismatch("automorphism image lies in a different field");
    // Horner evaluation of f at the image.
    FieldElement acc = FieldElement::zero(field_);
    const auto& f = field_.min_poly();
    for (int i = f.degree(); i >= 0; --i) acc = acc * image_ + FieldElement(field_, f.coeff(i));
    if (!acc.is_zero()) throw InvariantViolation("automorphism image is not a root of the defining polynomial");
}

FieldAutomorphism FieldAutomorphism::identity(const NumberField& f) {
    return FieldAutomorphism(f, FieldElement::generator(f));
}

FieldElement FieldAutomorphism::operator()(const FieldElement& x) const {
    if (x.field() != field_) throw ShapeMismatch("automorphism applied to element of another field");
    FieldElement acc = FieldElement::zero(field_);
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * image_ + FieldElement(field_, c[i]);
    return acc;
}

FieldAutomorphism FieldAutomorphism::compose(const FieldAutomorphism& other) const {
    return FieldAutomorphism(field_, (*this)(other.image_));
}

bool FieldAutomorphism::is_identity() const { return image_ == FieldElement::generator(field_); }

int FieldAutomorphism::order() const {
    FieldAutomorphism p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = compose(p);
        ++k;
        if (k > 4 * field_.degree() + 4) throw InvariantViolation("automorphism has no finite order");
    }
    return k;
}

FieldAutomorphism FieldAutomorphism::inverse() const {
    FieldAutomorphism prev = identity(field_);
    FieldAutomorphism cur = *this;
    while (!cur.is_identity()) {
        prev = cur;
        cur = compose(cur);
    }
    return prev;
}

std::vector<std::vector<Rational>> FieldAutomorphism::matrix() const {
    const int d = field_.degree();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    FieldElement pw = FieldElement::one(field_);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pw.coeffs()[static_cast<std::size_t>(i)];
        pw *= image_;
    }
    return m;
}

}  // namespace wittkit
