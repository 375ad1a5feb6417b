#include "wittkit/polynomial.hpp"

#include "wittkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wittkit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({-r, 1}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    Rational l = lead();
    for (auto& c : r.coeffs_) c /= l;
    return r;
}

Polynomial Polynomial::shifted(const Rational& shift) const {
    // Horner in the shifted variable.
    Polynomial acc;
    Polynomial lin({shift, 1});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
}

Polynomial Polynomial::scaled_argument(const Rational& scale) const {
    std::vector<Rational> v = coeffs_;
    Rational p = 1;
    for (auto& c : v) {
        c *= p;
        p *= scale;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational& lb = b.lead();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        Rational c = r[static_cast<std::size_t>(i)] / lb;
        q[static_cast<std::size_t>(i - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(1), s1;
    Polynomial t0, t1 = Polynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational l = r0.lead();
    Rational inv = 1 / l;
    return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() < 1) return p.monic();
    Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

Rational resultant(const Polynomial& f0, const Polynomial& g0) {
    if (f0.is_zero() || g0.is_zero()) return 0;
    Polynomial f = f0, g = g0;
    Rational acc = 1;
    while (true) {
        int m = f.degree(), n = g.degree();
        if (n == 0) {
            Rational p = 1;
            for (int i = 0; i < m; ++i) p *= g.lead();
            return acc * p;
        }
        if (m == 0) {
            Rational p = 1;
            for (int i = 0; i < n; ++i) p *= f.lead();
            return acc * p;
        }
        Polynomial r = f % g;
        if (r.is_zero()) return 0;
        int d = r.degree();
        // res(f, g) = (-1)^{mn} lc(g)^{m-d} res(g, r)
        if ((m * n) % 2 != 0) acc = -acc;
        for (int i = 0; i < m - d; ++i) acc *= g.lead();
        f = std::move(g);
        g = std::move(r);
    }
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    // Newton divided differences.
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Polynomial acc = Polynomial::constant(dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) acc = acc * Polynomial::linear_root(xs[k]) + Polynomial::constant(dd[k]);
    return acc;
}

std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = Integer(c.get_num()) * (den / Integer(c.get_den()));
        g = gcd(g, v);
        out.push_back(v);
    }
    if (g == 0) return out;
    if (out.back() < 0) g = -g;
    for (auto& v : out) v /= g;
    return out;
}

int sign(const Rational& r) { return sgn(r); }

SturmSequence::SturmSequence(const Polynomial& p) {
    chain_.push_back(p);
    if (p.degree() < 1) return;
    chain_.push_back(p.derivative());
    while (true) {
        Polynomial r = chain_[chain_.size() - 2] % chain_.back();
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

int SturmSequence::sign_changes_at(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& q : chain_) {
        int s = sign(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::sign_changes_at_infinity(bool positive) const {
    int changes = 0, last = 0;
    for (const auto& q : chain_) {
        if (q.is_zero()) continue;
        int s = sign(q.lead());
        if (!positive && q.degree() % 2 != 0) s = -s;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return sign_changes_at(a) - sign_changes_at(b);
}

int SturmSequence::count_all_real_roots() const {
    return sign_changes_at_infinity(false) - sign_changes_at_infinity(true);
}

Rational root_bound(const Polynomial& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = abs(p.coeff(i) / p.lead());
        if (q > m) m = q;
    }
    return m + 1;
}

namespace {

void isolate_in(const SturmSequence& s, const Polynomial& p, Rational lo, Rational hi,
                std::vector<std::pair<Rational, Rational>>& out) {
    int n = s.count_roots(lo, hi);
    if (n == 0) return;
    if (n == 1) {
        if (p.eval(hi) == 0) {
            out.emplace_back(hi, hi);
        } else {
            out.emplace_back(lo, hi);
        }
        return;
    }
    Rational mid = (lo + hi) / 2;
    isolate_in(s, p, lo, mid, out);
    isolate_in(s, p, mid, hi, out);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& p) {
    std::vector<std::pair<Rational, Rational>> out;
    if (p.degree() < 1) return out;
    SturmSequence s(p);
    Rational b = root_bound(p);
    isolate_in(s, p, -b, b, out);
    return out;
}

}  // namespace wittkit
