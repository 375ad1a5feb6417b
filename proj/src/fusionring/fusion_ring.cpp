#include "wittkit/errors.hpp"
#include "wittkit/fusionring.hpp"

namespace wittkit {

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<std::vector<std::vector<int>>> N, int unit,
                       std::vector<int> dual, std::vector<EndData> end, bool galois_nontrivial)
    : labels_(std::move(labels)),
      N_(std::move(N)),
      unit_(unit),
      dual_(std::move(dual)),
      end_(std::move(end)),
      galois_nontrivial_(galois_nontrivial) {
    const std::size_t r = labels_.size();
    if (r == 0) throw ShapeMismatch("fusion ring needs at least one basis element");
    if (N_.size() != r) throw ShapeMismatch("N has " + std::to_string(N_.size()) + " slices, expected " + std::to_string(r));
    for (const auto& slice : N_) {
        if (slice.size() != r) throw ShapeMismatch("N slice has wrong size");
        for (const auto& row : slice) {
            if (row.size() != r) throw ShapeMismatch("N row has wrong size");
            for (int v : row)
                if (v < 0) throw InvariantViolation("fusion multiplicities must be non-negative");
        }
    }
    if (unit_ < 0 || static_cast<std::size_t>(unit_) >= r) throw ShapeMismatch("unit index out of range");
    if (dual_.size() != r) throw ShapeMismatch("dual has wrong length");
    for (std::size_t i = 0; i < r; ++i) {
        const int d = dual_[i];
        if (d < 0 || static_cast<std::size_t>(d) >= r) throw ShapeMismatch("dual index out of range");
        if (dual_[static_cast<std::size_t>(d)] != static_cast<int>(i)) throw InvariantViolation("dual is not an involution");
    }
    if (end_.empty()) end_.assign(r, EndData{});
    if (end_.size() != r) throw ShapeMismatch("end data has wrong length");
    for (const auto& e : end_)
        if (e.dim < 1 || e.k < 1 || e.n < 1) throw InconsistentDivisionData("end data entries must be positive");
}

FusionRing FusionRing::group_ring(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<std::string> labels;
    std::vector<int> dual;
    std::vector<std::vector<std::vector<int>>> N(static_cast<std::size_t>(n),
                                                 std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0)));
    for (int a = 0; a < n; ++a) {
        labels.push_back("g" + std::to_string(a));
        dual.push_back(g.inverse(a));
        for (int b = 0; b < n; ++b) N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(g.mul(a, b))] = 1;
    }
    return FusionRing(std::move(labels), std::move(N), g.identity(), std::move(dual));
}

FusionRing FusionRing::from_pointed(const PointedBraidedCategory& cat) { return group_ring(cat.group()); }

FusionRing FusionRing::fibonacci() {
    std::vector<std::vector<std::vector<int>>> N{{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}};
    return FusionRing({"1", "tau"}, std::move(N), 0, {0, 1});
}

std::vector<std::vector<Rational>> FusionRing::left_matrix(int i) const {
    const int r = rank();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(r)));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = N(i, j, k);
    return m;
}

FusionRing FusionRing::with_entry(int i, int j, int k, int value) const {
    auto N = N_;
    N.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k)) = value;
    return FusionRing(labels_, std::move(N), unit_, dual_, end_, galois_nontrivial_);
}

CheckResult check_fusion_axioms(const FusionRing& ring) {
    const int r = ring.rank();
    const int u = ring.unit();
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            if (ring.N(u, i, k) != (i == k ? 1 : 0)) return CheckResult::fail({u, i, k}, "left unit law fails");
            if (ring.N(i, u, k) != (i == k ? 1 : 0)) return CheckResult::fail({i, u, k}, "right unit law fails");
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    long lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += static_cast<long>(ring.N(i, j, m)) * ring.N(m, k, l);
                        rhs += static_cast<long>(ring.N(j, k, m)) * ring.N(i, m, l);
                    }
                    if (lhs != rhs) return CheckResult::fail({i, j, k, l}, "associativity fails");
                }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const int expected = j == ring.dual(i) ? ring.end(i).dim : 0;
            if (ring.N(i, j, u) != expected) return CheckResult::fail({i, j}, "duality law fails");
        }
    return CheckResult::pass();
}

Polynomial characteristic_polynomial(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw ShapeMismatch("characteristic polynomial needs a square matrix");
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A·M_{k-1} + c_{n-k+1}·I, c_{n-k} = −tr(A·M_k)/k
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * m[l][j];
            }
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        m = std::move(next);
        Rational tr;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return Polynomial(std::move(c));
}

AlgebraicReal fpdim_object(const FusionRing& ring, int i) {
    auto root = AlgebraicReal::largest_root(characteristic_polynomial(ring.left_matrix(i)));
    if (!root) throw InvariantViolation("left multiplication matrix of " + ring.label(i) + " has no real eigenvalue");
    return *root;
}

AlgebraicReal fpdim_category(const FusionRing& ring) {
    if (ring.galois_nontrivial())
        throw GaloisNontrivial("FPdim normalization is undefined for Galois-nontrivial categories");
    AlgebraicReal total(Rational(0));
    for (int i = 0; i < ring.rank(); ++i) {
        AlgebraicReal d = fpdim_object(ring, i);
        total = total + d * d * AlgebraicReal(Rational(1, ring.end(i).dim));
    }
    return total;
}

BaseChangeSplit base_change_split(const EndData& end, const AlgebraicReal& D) {
    if (end.dim < 1 || end.k < 1 || end.n < 1) throw InconsistentDivisionData("end data entries must be positive");
    if (end.dim != end.k * end.n * end.n)
        throw InconsistentDivisionData("dim " + std::to_string(end.dim) + " != k·n² = " +
                                       std::to_string(end.k * end.n * end.n));
    return {end.k, end.n, D * AlgebraicReal(Rational(1, end.n * end.k))};
}

bool fpdim_center_square_check(const FusionRing& ring, const FusionRing& center) {
    AlgebraicReal d = fpdim_category(ring);
    return fpdim_category(center) == d * d;
}

CheckResult check_fpdim_multiplicative(const FusionRing& ring) {
    const int r = ring.rank();
    std::vector<AlgebraicReal> d;
    for (int i = 0; i < r; ++i) d.push_back(fpdim_object(ring, i));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            AlgebraicReal rhs(Rational(0));
            for (int k = 0; k < r; ++k)
                if (ring.N(i, j, k) != 0) rhs = rhs + AlgebraicReal(Rational(ring.N(i, j, k))) * d[static_cast<std::size_t>(k)];
            if (d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(j)] != rhs)
                return CheckResult::fail({i, j}, "FPdim is not multiplicative");
        }
    return CheckResult::pass();
}

}  // namespace wittkit
