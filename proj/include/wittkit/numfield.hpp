#pragma once

#include "wittkit/polynomial.hpp"

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wittkit {

/// How irreducibility of a field's defining polynomial was established.
enum class IrreducibilityProof {
    Linear,        // degree 1
    RationalRoot,  // degree 2 or 3 with no rational root
    ModPrimes,     // factor-degree patterns modulo primes leave no proper factor degree
    Cyclotomic,    // cyclotomic polynomial, irreducible by construction
    Tower,         // squarefree norm of an irreducible relative polynomial
};

std::string to_string(IrreducibilityProof proof);

/// Number field Q[x]/(f) with f monic irreducible. Copies share one immutable
/// definition, so handles are cheap to pass around.
class NumberField {
public:
    /// Q itself (presented as Q[x]/(x), cyclotomic order 1).
    static NumberField rationals();
    static NumberField cyclotomic(int n);
    /// Verifies irreducibility; throws IrreducibilityUnproven if no certificate is found.
    static NumberField from_min_poly(const Polynomial& f, std::string label = {});
    /// Trusted constructor for polynomials whose irreducibility is known from the
    /// way they were produced (tower flattening); still checks monic and squarefree.
    static NumberField from_certified(const Polynomial& f, IrreducibilityProof proof, std::string label);

    const Polynomial& min_poly() const { return impl_->min_poly; }
    int degree() const { return impl_->min_poly.degree(); }
    const std::string& label() const { return impl_->label; }
    std::optional<int> cyclotomic_order() const { return impl_->cyclotomic_order; }
    IrreducibilityProof irreducibility_proof() const { return impl_->proof; }
    const std::string& generator_name() const { return impl_->generator_name; }
    /// Order of the group of roots of unity known to lie in the field
    /// (lcm(2, n) for Q(zeta_n); 2 for any other field).
    int known_root_of_unity_order() const;

    bool operator==(const NumberField& o) const;
    bool operator!=(const NumberField& o) const { return !(*this == o); }

    /// Reduction of an arbitrary polynomial modulo the defining polynomial,
    /// returned as `degree()` coordinates.
    std::vector<Rational> reduce(const Polynomial& p) const;

private:
    struct Impl {
        Polynomial min_poly;
        std::string label;
        std::string generator_name;
        std::optional<int> cyclotomic_order;
        IrreducibilityProof proof;
        // x^k mod f for k in [d, 2d-2], each as d coordinates.
        std::vector<std::vector<Rational>> power_table;
    };
    explicit NumberField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static NumberField build(Polynomial f, std::string label, std::optional<int> cyc, IrreducibilityProof proof);
    std::shared_ptr<const Impl> impl_;

    friend class FieldElement;
};

/// Exact element of a number field in the power basis of its generator.
class FieldElement {
public:
    FieldElement(NumberField field, std::vector<Rational> coeffs);
    FieldElement(NumberField field, const Rational& c);
    static FieldElement zero(const NumberField& f) { return FieldElement(f, Rational(0)); }
    static FieldElement one(const NumberField& f) { return FieldElement(f, Rational(1)); }
    static FieldElement generator(const NumberField& f);
    static FieldElement from_polynomial(const NumberField& f, const Polynomial& p);
    /// zeta_n^k inside a cyclotomic field of order divisible by n; InsufficientRoots otherwise.
    static FieldElement root_of_unity(const NumberField& f, int n, long k);

    const NumberField& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Polynomial as_polynomial() const { return Polynomial(coeffs_); }

    bool is_zero() const;
    bool is_one() const;
    /// True iff the element lies in Q (only the constant coordinate is nonzero).
    bool is_rational() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator*(FieldElement a, const Rational& c);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    std::string to_string() const;

private:
    void check_same_field(const FieldElement& o) const;
    NumberField field_;
    std::vector<Rational> coeffs_;
};

/// Division with the same contract as `x.inverse()`.
FieldElement invert(const FieldElement& x);
FieldElement operator/(const FieldElement& a, const FieldElement& b);

/// Field automorphism determined by the image of the generator.
class FieldAutomorphism {
public:
    /// Verifies f(image) == 0 exactly; throws InvariantViolation otherwise.
    FieldAutomorphism(NumberField field, FieldElement image_of_generator);
    static FieldAutomorphism identity(const NumberField& f);

    const NumberField& field() const { return field_; }
    const FieldElement& image_of_generator() const { return image_; }

    FieldElement operator()(const FieldElement& x) const;
    /// (this ∘ other)(x) = this(other(x)).
    FieldAutomorphism compose(const FieldAutomorphism& other) const;
    FieldAutomorphism inverse() const;
    bool is_identity() const;
    int order() const;
    bool operator==(const FieldAutomorphism& o) const { return image_ == o.image_; }

    /// Matrix over Q of the automorphism in the power basis (column j = image of θ^j).
    std::vector<std::vector<Rational>> matrix() const;

private:
    NumberField field_;
    FieldElement image_;
};

/// Q(zeta_n) with the n-th cyclotomic polynomial as defining polynomial.
NumberField make_cyclotomic(int n);
Polynomial cyclotomic_polynomial(int n);
int euler_phi(int n);

inline constexpr long kDefaultHeightBound = 1000000000L;

/// All automorphisms of the field, identity first. Cyclotomic fields use
/// zeta -> zeta^k directly; other fields reconstruct candidate roots from
/// numeric embeddings and verify them exactly. Throws ReconstructionInconclusive
/// when a numerically plausible root cannot be certified at the height bound.
std::vector<FieldAutomorphism> automorphisms(const NumberField& field, long height_bound = kDefaultHeightBound);

/// Complex approximation of one root of the defining polynomial.
struct Embedding {
    mpf_class re;
    mpf_class im;
    bool is_real = false;
    double re_d() const { return re.get_d(); }
    double im_d() const { return im.get_d(); }
};

/// All `degree` roots of the defining polynomial with |f(z)| < 2^-precision.
/// Real roots (counted exactly by Sturm sequences) come first in increasing
/// order and have exactly zero imaginary part; complex roots follow in
/// conjugate pairs (positive imaginary part first).
std::vector<Embedding> numeric_embeddings(const NumberField& field, int precision_bits);

/// Image of an element under a numeric embedding.
Embedding evaluate(const FieldElement& x, const Embedding& at, int precision_bits);

/// Isolating intervals (lo, hi] of the real roots of the defining polynomial.
std::vector<std::pair<Rational, Rational>> real_root_intervals(const NumberField& field);

/// Exact sign of x under the real embedding isolated by (lo, hi]; x must be nonzero.
int sign_at_real_embedding(const FieldElement& x, Rational lo, Rational hi);

enum class SqrtStatus { Found, NoRoot, Inconclusive };

struct SqrtResult {
    SqrtStatus status = SqrtStatus::Inconclusive;
    std::optional<FieldElement> root;
    /// For NoRoot: which real embedding makes d negative. For Found: "exact".
    std::string certificate;
};

SqrtResult sqrt_in_field(const FieldElement& d, long height_bound = kDefaultHeightBound);

/// Matrix over Q of multiplication by x in the power basis (column j = x·θ^j).
std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& x);

}  // namespace wittkit
