#include "wittkit/errors.hpp"
#include "wittkit/fusionring.hpp"

#include <algorithm>
#include <sstream>

namespace wittkit {

namespace {

Polynomial strip_zero_roots(Polynomial p) {
    int z = 0;
    while (z < p.degree() && p.coeff(z) == 0) ++z;
    if (z == 0) return p;
    std::vector<Rational> c(p.coeffs().begin() + z, p.coeffs().end());
    return Polynomial(std::move(c));
}

// Res_y(f(y), g(x - y)): vanishes at every α + β.
Polynomial sum_polynomial(const Polynomial& f, const Polynomial& g) {
    const int d = f.degree() * g.degree();
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= d; ++i) {
        Rational x(i);
        xs.push_back(x);
        ys.push_back(resultant(f, g.shifted(x).scaled_argument(Rational(-1))));
    }
    return interpolate(xs, ys);
}

// Res_y(f(y), y^n g(x / y)) with g(0) != 0: vanishes at every α·β.
Polynomial product_polynomial(const Polynomial& f, const Polynomial& g) {
    const int n = g.degree();
    const int d = f.degree() * n;
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= d; ++i) {
        Rational x(i);
        std::vector<Rational> c(static_cast<std::size_t>(n + 1));
        Rational xp(1);
        for (int j = 0; j <= n; ++j) {
            c[static_cast<std::size_t>(n - j)] = g.coeff(j) * xp;
            xp *= x;
        }
        xs.push_back(x);
        ys.push_back(resultant(f, Polynomial(std::move(c))));
    }
    return interpolate(xs, ys);
}

struct Hull {
    Rational lo, hi;
};

Hull hull_of(std::initializer_list<Rational> values) {
    Hull h{*values.begin(), *values.begin()};
    for (const auto& v : values) {
        if (v < h.lo) h.lo = v;
        if (v > h.hi) h.hi = v;
    }
    return h;
}

}  // namespace

AlgebraicReal::AlgebraicReal(const Rational& r) : poly_(Polynomial::linear_root(r)), lo_(r), hi_(r) {}

// Normal form for irrational values: lo < root < hi, p(lo) != 0, p(hi) != 0,
// p monic and squarefree with exactly one root in [lo, hi].
AlgebraicReal::AlgebraicReal(Polynomial p, Rational lo, Rational hi)
    : poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
    poly_ = poly_.monic();
    auto make_rational = [&](const Rational& r) {
        poly_ = Polynomial::linear_root(r);
        lo_ = hi_ = r;
    };
    if (poly_.degree() == 1) {
        make_rational(-poly_.coeff(0));
        return;
    }
    if (lo_ == hi_) {
        make_rational(lo_);
        return;
    }
    if (poly_.eval(hi_) == 0) {
        make_rational(hi_);
        return;
    }
    if (lo_ < 0 && hi_ > 0 && poly_.eval(Rational(0)) == 0) {
        make_rational(Rational(0));
        return;
    }
    while (poly_.eval(lo_) == 0) {
        Rational mid = (lo_ + hi_) / 2;
        const int sm = wittkit::sign(poly_.eval(mid));
        if (sm == 0) {
            make_rational(mid);
            return;
        }
        if (sm != wittkit::sign(poly_.eval(hi_)))
            lo_ = mid;
        else
            hi_ = mid;
    }
    // A rational root a/b of the primitive integer polynomial has b | lead, so
    // it is a multiple of 1/lead; narrow the interval below that spacing.
    Integer lead = primitive_integer_coeffs(poly_).back();
    Rational step(Integer(1), lead);
    refine_to(step);
    if (is_rational()) return;
    Integer first = Integer(Rational(lo_ * lead).get_num() / Rational(lo_ * lead).get_den());
    for (Integer m = first - 1; Rational(m, lead) <= hi_; ++m) {
        Rational c(m, lead);
        c.canonicalize();
        if (c > lo_ && poly_.eval(c) == 0) {
            make_rational(c);
            return;
        }
    }
    poly_ = strip_zero_roots(poly_);
}

AlgebraicReal AlgebraicReal::root_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.degree() < 1) throw InvariantViolation("root_in needs a non-constant polynomial");
    Polynomial sf = squarefree_part(p);
    if (lo == hi) {
        if (sf.eval(lo) != 0) throw InvariantViolation("degenerate interval is not a root");
        return AlgebraicReal(lo);
    }
    if (SturmSequence(sf).count_roots(lo, hi) != 1)
        throw InvariantViolation("interval does not isolate exactly one root of " + p.to_string());
    return AlgebraicReal(sf, lo, hi);
}

std::optional<AlgebraicReal> AlgebraicReal::largest_root(const Polynomial& p) {
    if (p.degree() < 1) return std::nullopt;
    Polynomial sf = squarefree_part(p);
    auto roots = isolate_real_roots(sf);
    if (roots.empty()) return std::nullopt;
    const auto& [lo, hi] = roots.back();
    if (lo == hi) return AlgebraicReal(lo);
    return AlgebraicReal(sf, lo, hi);
}

std::optional<Rational> AlgebraicReal::rational_value() const {
    if (is_rational()) return lo_;
    return std::nullopt;
}

void AlgebraicReal::refine() const {
    if (is_rational()) return;
    Rational mid = (lo_ + hi_) / 2;
    const int sm = wittkit::sign(poly_.eval(mid));
    if (sm == 0) {
        poly_ = Polynomial::linear_root(mid);
        lo_ = hi_ = mid;
        return;
    }
    if (sm != wittkit::sign(poly_.eval(hi_)))
        lo_ = mid;
    else
        hi_ = mid;
}

void AlgebraicReal::refine_to(const Rational& width) const {
    while (!is_rational() && hi_ - lo_ >= width) refine();
}

double AlgebraicReal::approx() const {
    refine_to(Rational(1, 1L << 50) * (abs(lo_) + 1));
    return Rational((lo_ + hi_) / 2).get_d();
}

int AlgebraicReal::sign() const {
    if (is_rational()) return wittkit::sign(lo_);
    while (lo_ <= 0 && hi_ >= 0) refine();
    return lo_ > 0 ? 1 : -1;
}

AlgebraicReal operator-(const AlgebraicReal& a) {
    if (a.is_rational()) return AlgebraicReal(Rational(-a.lo_));
    return AlgebraicReal(a.poly_.scaled_argument(Rational(-1)), -a.hi_, -a.lo_);
}

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational()) return AlgebraicReal(Rational(a.lo_ + b.lo_));
    if (a.is_rational() && a.lo_ == 0) return b;
    if (b.is_rational() && b.lo_ == 0) return a;
    if (a.is_rational() || b.is_rational()) {
        const AlgebraicReal& r = a.is_rational() ? a : b;
        const AlgebraicReal& x = a.is_rational() ? b : a;
        return AlgebraicReal(x.poly_.shifted(-r.lo_), x.lo_ + r.lo_, x.hi_ + r.lo_);
    }
    Polynomial h = squarefree_part(sum_polynomial(a.poly_, b.poly_));
    SturmSequence sturm(h);
    for (;;) {
        Rational lo = a.lo_ + b.lo_, hi = a.hi_ + b.hi_;
        Rational w = hi - lo;
        if (sturm.count_roots(lo - w, hi + w) == 1) return AlgebraicReal(h, lo - w, hi + w);
        a.refine();
        b.refine();
        if (a.is_rational() || b.is_rational()) return a + b;
    }
}

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational()) return AlgebraicReal(Rational(a.lo_ * b.lo_));
    if ((a.is_rational() && a.lo_ == 0) || (b.is_rational() && b.lo_ == 0)) return AlgebraicReal(Rational(0));
    if (a.is_rational() || b.is_rational()) {
        const AlgebraicReal& r = a.is_rational() ? a : b;
        const AlgebraicReal& x = a.is_rational() ? b : a;
        Rational s = r.lo_;
        Polynomial p = x.poly_.scaled_argument(Rational(1 / s));
        return s > 0 ? AlgebraicReal(p, x.lo_ * s, x.hi_ * s) : AlgebraicReal(p, x.hi_ * s, x.lo_ * s);
    }
    Polynomial h = squarefree_part(product_polynomial(a.poly_, strip_zero_roots(b.poly_)));
    SturmSequence sturm(h);
    for (;;) {
        Hull c = hull_of({a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_});
        Rational w = c.hi - c.lo;
        if (sturm.count_roots(c.lo - w, c.hi + w) == 1) return AlgebraicReal(h, c.lo - w, c.hi + w);
        a.refine();
        b.refine();
        if (a.is_rational() || b.is_rational()) return a * b;
    }
}

AlgebraicReal AlgebraicReal::inverse() const {
    if (is_rational()) {
        if (lo_ == 0) throw DivisionByZero();
        return AlgebraicReal(Rational(1 / lo_));
    }
    sign();
    return AlgebraicReal(poly_.reversed(), Rational(1 / hi_), Rational(1 / lo_));
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational()) return a.lo_ < b.lo_ ? -1 : (a.lo_ > b.lo_ ? 1 : 0);
    for (int round = 0; round < 16; ++round) {
        if (a.hi_ < b.lo_) return -1;
        if (b.hi_ < a.lo_) return 1;
        a.refine();
        b.refine();
    }
    return (a - b).sign();
}

std::string AlgebraicReal::to_string() const {
    if (is_rational()) return lo_.get_str();
    std::ostringstream os;
    const double v = approx();
    os.precision(10);
    os << "root of " << poly_.to_string() << " near " << v;
    return os.str();
}

}  // namespace wittkit
