#include "irreducibility.hpp"

#include <algorithm>
#include <set>

namespace wittkit::detail {

namespace {

using Fp = std::vector<std::int64_t>;  // low degree first, trimmed

std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, b = mod(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

void trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Fp& a) { return static_cast<int>(a.size()) - 1; }

Fp sub(Fp a, const Fp& b, std::int64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
    trim(a);
    return a;
}

Fp rem(Fp a, const Fp& b, std::int64_t p) {
    const int db = deg(b);
    const std::int64_t il = inv_mod(b.back(), p);
    while (deg(a) >= db) {
        const int shift = deg(a) - db;
        const std::int64_t c = a.back() * il % p;
        for (int i = 0; i <= db; ++i) {
            auto& x = a[static_cast<std::size_t>(i + shift)];
            x = mod(x - c * b[static_cast<std::size_t>(i)], p);
        }
        trim(a);
    }
    return a;
}

Fp quo(Fp a, const Fp& b, std::int64_t p) {
    const int db = deg(b);
    if (deg(a) < db) return {};
    Fp q(static_cast<std::size_t>(deg(a) - db + 1), 0);
    const std::int64_t il = inv_mod(b.back(), p);
    while (deg(a) >= db) {
        const int shift = deg(a) - db;
        const std::int64_t c = a.back() * il % p;
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            auto& x = a[static_cast<std::size_t>(i + shift)];
            x = mod(x - c * b[static_cast<std::size_t>(i)], p);
        }
        trim(a);
    }
    return q;
}

Fp mulmod(const Fp& a, const Fp& b, const Fp& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return rem(std::move(r), m, p);
}

Fp gcd_fp(Fp a, Fp b, std::int64_t p) {
    while (!b.empty()) {
        Fp r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::int64_t il = inv_mod(a.back(), p);
        for (auto& x : a) x = x * il % p;
    }
    return a;
}

Fp powmod(Fp base, std::int64_t e, const Fp& m, std::int64_t p) {
    Fp r{1};
    base = rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

std::vector<std::int64_t> first_primes(int count) {
    std::vector<std::int64_t> primes;
    for (std::int64_t n = 2; static_cast<int>(primes.size()) < count; ++n) {
        bool prime = true;
        for (auto q : primes) {
            if (q * q > n) break;
            if (n % q == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(n);
    }
    return primes;
}

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

}  // namespace

std::optional<std::vector<int>> factor_degrees_mod_p(const std::vector<Integer>& f, std::int64_t p) {
    Fp a;
    for (const auto& c : f) {
        Integer r = c % p;
        if (r < 0) r += p;
        a.push_back(r.get_si());
    }
    trim(a);
    if (deg(a) != static_cast<int>(f.size()) - 1) return std::nullopt;
    // derivative
    Fp da;
    for (std::size_t i = 1; i < a.size(); ++i) da.push_back(static_cast<std::int64_t>(i) % p * a[i] % p);
    trim(da);
    if (da.empty() || deg(gcd_fp(a, da, p)) > 0) return std::nullopt;

    std::vector<int> degrees;
    Fp rest = a;
    Fp x{0, 1};
    Fp h = rem(x, rest, p);
    for (int i = 1; deg(rest) >= 2 * i; ++i) {
        h = powmod(h, p, rest, p);
        Fp g = gcd_fp(rest, sub(h, x, p), p);
        if (deg(g) > 0) {
            for (int k = 0; k < deg(g) / i; ++k) degrees.push_back(i);
            rest = quo(rest, g, p);
            h = rem(h, rest, p);
        }
    }
    if (deg(rest) > 0) degrees.push_back(deg(rest));
    return degrees;
}

bool has_rational_root(const Polynomial& f) {
    auto c = primitive_integer_coeffs(f);
    if (c.empty()) return false;
    if (c.front() == 0) return true;
    // Candidates p/q with p | c0 and q | lead.
    for (const auto& num : divisors(c.front()))
        for (const auto& den : divisors(c.back()))
            for (int s : {1, -1}) {
                Rational r(num * s, den);
                r.canonicalize();
                if (f.eval(r) == 0) return true;
            }
    return false;
}

std::optional<IrreducibilityProof> prove_irreducible(const Polynomial& f) {
    const int d = f.degree();
    if (d == 1) return IrreducibilityProof::Linear;
    if (d <= 3) return has_rational_root(f) ? std::nullopt : std::optional(IrreducibilityProof::RationalRoot);
    if (has_rational_root(f)) return std::nullopt;
    auto ic = primitive_integer_coeffs(f);
    // Degrees of possible rational factors: the intersection over primes of the
    // subset sums of factor degrees modulo p.
    std::set<int> possible;
    for (int k = 1; k < d; ++k) possible.insert(k);
    for (auto p : first_primes(100)) {
        auto degs = factor_degrees_mod_p(ic, p);
        if (!degs) continue;
        std::vector<char> reach(static_cast<std::size_t>(d) + 1, 0);
        reach[0] = 1;
        for (int dg : *degs)
            for (int s = d; s >= dg; --s)
                if (reach[static_cast<std::size_t>(s - dg)]) reach[static_cast<std::size_t>(s)] = 1;
        for (auto it = possible.begin(); it != possible.end();) {
            if (!reach[static_cast<std::size_t>(*it)]) {
                it = possible.erase(it);
            } else {
                ++it;
            }
        }
        if (possible.empty()) return IrreducibilityProof::ModPrimes;
    }
    return std::nullopt;
}

}  // namespace wittkit::detail
