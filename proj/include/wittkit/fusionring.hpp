#pragma once

#include "wittkit/groupcoh.hpp"
#include "wittkit/pointedcat.hpp"
#include "wittkit/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wittkit {

/// Real algebraic number: the unique root of a squarefree monic rational
/// polynomial inside an isolating interval. Rational values are kept exactly
/// with lo == hi; irrational ones satisfy lo < root < hi.
class AlgebraicReal {
public:
    AlgebraicReal() : AlgebraicReal(Rational(0)) {}
    AlgebraicReal(const Rational& r);  // NOLINT(google-explicit-constructor)
    AlgebraicReal(long r) : AlgebraicReal(Rational(r)) {}  // NOLINT(google-explicit-constructor)
    /// Throws InvariantViolation unless (lo, hi] holds exactly one root of p.
    static AlgebraicReal root_in(const Polynomial& p, const Rational& lo, const Rational& hi);
    /// Largest real root, if p has any real root.
    static std::optional<AlgebraicReal> largest_root(const Polynomial& p);

    const Polynomial& polynomial() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_rational() const { return lo_ == hi_; }
    std::optional<Rational> rational_value() const;
    /// Halve the isolating interval.
    void refine() const;
    /// Refine until the interval is narrower than `width`.
    void refine_to(const Rational& width) const;
    double approx() const;
    int sign() const;

    friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal operator-(const AlgebraicReal& a);
    friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) { return a + (-b); }
    friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
    AlgebraicReal inverse() const;
    friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) { return a * b.inverse(); }
    /// Exact comparison; −1, 0 or 1.
    friend int compare(const AlgebraicReal& a, const AlgebraicReal& b);
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
    friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) != 0; }
    friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }
    friend bool operator>=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) >= 0; }

    /// "4" for rationals, otherwise "root of x^2 - x - 1 near 1.618033989".
    std::string to_string() const;

private:
    AlgebraicReal(Polynomial p, Rational lo, Rational hi);
    mutable Polynomial poly_;
    mutable Rational lo_, hi_;
};

/// Endomorphism data of a simple object: dim over the base field, number k
/// of pieces after base change, matrix degree n (dim = k·n²).
struct EndData {
    int dim = 1;
    int k = 1;
    int n = 1;
    bool operator==(const EndData&) const = default;
};

class FusionRing {
public:
    /// N is indexed N[i][j][k]; `end` may be empty (all End = base field).
    FusionRing(std::vector<std::string> labels, std::vector<std::vector<std::vector<int>>> N, int unit,
               std::vector<int> dual, std::vector<EndData> end = {}, bool galois_nontrivial = false);

    static FusionRing group_ring(const FiniteGroup& g);
    static FusionRing from_pointed(const PointedBraidedCategory& cat);
    static FusionRing fibonacci();

    int rank() const { return static_cast<int>(labels_.size()); }
    int N(int i, int j, int k) const { return N_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]; }
    int unit() const { return unit_; }
    int dual(int i) const { return dual_[static_cast<std::size_t>(i)]; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const EndData& end(int i) const { return end_[static_cast<std::size_t>(i)]; }
    bool galois_nontrivial() const { return galois_nontrivial_; }
    /// Left multiplication matrix of basis element i (column j = i ⊗ j).
    std::vector<std::vector<Rational>> left_matrix(int i) const;
    FusionRing with_entry(int i, int j, int k, int value) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<int>>> N_;
    int unit_;
    std::vector<int> dual_;
    std::vector<EndData> end_;
    bool galois_nontrivial_;
};

/// Unit law, associativity and duality. For rings with endomorphism data the
/// duality law reads N[i][j][unit] = δ_{j,dual(i)}·dim End(i).
CheckResult check_fusion_axioms(const FusionRing& ring);

/// Characteristic polynomial det(x·I − A) (Faddeev–LeVerrier).
Polynomial characteristic_polynomial(const std::vector<std::vector<Rational>>& a);

AlgebraicReal fpdim_object(const FusionRing& ring, int i);
/// Σ_X FPdim(X)² / dim End(X); throws GaloisNontrivial for flagged rings.
AlgebraicReal fpdim_category(const FusionRing& ring);

struct BaseChangeSplit {
    int k;
    int n;
    AlgebraicReal d;
};

/// Splitting of one simple after base change to the closure: k pieces of
/// multiplicity n, each of dimension D/(n·k). Throws InconsistentDivisionData.
BaseChangeSplit base_change_split(const EndData& end, const AlgebraicReal& D);

bool fpdim_center_square_check(const FusionRing& ring, const FusionRing& center);

/// FPdim(i)·FPdim(j) = Σ_k N[i][j][k]·FPdim(k) for all pairs.
CheckResult check_fpdim_multiplicative(const FusionRing& ring);

}  // namespace wittkit
