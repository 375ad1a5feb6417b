#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace wittkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The representation is always trimmed: the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);
    /// x - r
    static Polynomial linear_root(const Rational& r);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const Rational& lead() const { return coeffs_.back(); }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    /// p(x + shift)
    Polynomial shifted(const Rational& shift) const;
    /// p(scale * x)
    Polynomial scaled_argument(const Rational& scale) const;
    /// x^deg * p(1/x)
    Polynomial reversed() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws DivisionByZero on b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
    Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

Polynomial squarefree_part(const Polynomial& p);
Rational resultant(const Polynomial& f, const Polynomial& g);
/// Unique polynomial of degree < xs.size() through the given points.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
/// Scale to a primitive integer polynomial with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p);
int sign(const Rational& r);

/// Sturm chain of a squarefree polynomial, used for exact real-root counting.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);
    /// Number of distinct real roots in the half-open interval (a, b].
    int count_roots(const Rational& a, const Rational& b) const;
    int count_all_real_roots() const;
    const Polynomial& polynomial() const { return chain_.front(); }

private:
    int sign_changes_at(const Rational& x) const;
    int sign_changes_at_infinity(bool positive) const;
    std::vector<Polynomial> chain_;
};

/// Cauchy bound: every complex root has absolute value < the returned value.
Rational root_bound(const Polynomial& p);

/// Isolating intervals (lo, hi] for every real root of the squarefree
/// polynomial p, in increasing order. Exact rational roots come back as
/// degenerate intervals [r, r].
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& p);

}  // namespace wittkit
