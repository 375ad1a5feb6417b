#include "wittkit/errors.hpp"
#include "wittkit/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>

namespace wittkit {

namespace {

using CLD = std::complex<long double>;

/// Complex number over mpf with a fixed working precision.
struct MpC {
    mpf_class re, im;
    MpC(mp_bitcnt_t prec) : re(0, prec), im(0, prec) {}
    MpC(const mpf_class& r, const mpf_class& i, mp_bitcnt_t prec) : re(r, prec), im(i, prec) {}
};

MpC add(const MpC& a, const MpC& b, mp_bitcnt_t prec) {
    MpC r(prec);
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    return r;
}

MpC sub(const MpC& a, const MpC& b, mp_bitcnt_t prec) {
    MpC r(prec);
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}

MpC mul(const MpC& a, const MpC& b, mp_bitcnt_t prec) {
    MpC r(prec);
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

mpf_class norm2(const MpC& a, mp_bitcnt_t prec) {
    mpf_class r(0, prec);
    r = a.re * a.re + a.im * a.im;
    return r;
}

MpC div(const MpC& a, const MpC& b, mp_bitcnt_t prec) {
    mpf_class n = norm2(b, prec);
    MpC r(prec);
    r.re = (a.re * b.re + a.im * b.im) / n;
    r.im = (a.im * b.re - a.re * b.im) / n;
    return r;
}

MpC complex_sqrt(const MpC& z, mp_bitcnt_t prec) {
    mpf_class mod(0, prec), t(0, prec);
    mod = sqrt(norm2(z, prec));
    MpC r(prec);
    t = (mod + z.re) / 2;
    if (t < 0) t = 0;
    r.re = sqrt(t);
    t = (mod - z.re) / 2;
    if (t < 0) t = 0;
    r.im = sqrt(t);
    if (z.im < 0) r.im = -r.im;
    return r;
}

mpf_class to_mpf(const Rational& q, mp_bitcnt_t prec) {
    mpf_class r(0, prec);
    r = q;
    return r;
}

MpC eval_poly(const std::vector<Rational>& coeffs, const MpC& z, mp_bitcnt_t prec) {
    MpC acc(prec);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = mul(acc, z, prec);
        acc.re += to_mpf(coeffs[i], prec);
    }
    return acc;
}

std::vector<CLD> durand_kerner(const Polynomial& f) {
    const int d = f.degree();
    std::vector<CLD> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = static_cast<long double>(Rational(f.coeff(i) / f.lead()).get_d());
    auto eval = [&](CLD z) {
        CLD acc = 0;
        for (int i = d; i >= 0; --i) acc = acc * z + c[static_cast<std::size_t>(i)];
        return acc;
    };
    long double bound = static_cast<long double>(root_bound(f).get_d());
    std::vector<CLD> z(static_cast<std::size_t>(d));
    CLD seed(0.4L, 0.9L);
    for (int k = 0; k < d; ++k) z[static_cast<std::size_t>(k)] = std::pow(seed, k) * (bound / 2);
    for (int iter = 0; iter < 5000; ++iter) {
        long double delta = 0;
        for (int k = 0; k < d; ++k) {
            CLD denom = 1;
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            if (std::abs(denom) == 0) denom = 1e-30L;
            CLD step = eval(z[static_cast<std::size_t>(k)]) / denom;
            z[static_cast<std::size_t>(k)] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-18L) break;
    }
    return z;
}

mpf_class pow2(int e, mp_bitcnt_t prec) {
    mpf_class r(1, prec);
    if (e >= 0) {
        mpf_mul_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpf_div_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

/// Refine an isolated real root by exact bisection until |f| is tiny at the midpoint.
Rational refine_real_root(const Polynomial& f, Rational lo, Rational hi, int precision_bits) {
    if (lo == hi) return lo;
    SturmSequence s(f);
    // Make both endpoints non-roots.
    while (f.eval(lo) == 0) {
        Rational mid = (lo + hi) / 2;
        if (f.eval(mid) == 0 && s.count_roots(lo, mid) == 1) return mid;
        if (s.count_roots(lo, mid) == 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    int slo = sign(f.eval(lo));
    // |f'| on the interval is bounded by sum i |a_i| B^{i-1}
    Rational B = Rational(abs(lo)) > Rational(abs(hi)) ? Rational(abs(lo)) : Rational(abs(hi));
    B += 1;
    Rational dbound = 0;
    {
        Rational pw = 1;
        for (int i = 1; i <= f.degree(); ++i) {
            dbound += abs(f.coeff(i)) * i * pw;
            pw *= B;
        }
    }
    Integer scale = Integer(1) << static_cast<mp_bitcnt_t>(precision_bits + 2);
    Rational target(1, scale);
    if (dbound > 1) target /= dbound;
    while (hi - lo > target) {
        Rational mid = (lo + hi) / 2;
        int sm = sign(f.eval(mid));
        if (sm == 0) return mid;
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

/// Complex LU solve with partial pivoting, A is row-major n x n; returns A^{-1}.
std::vector<std::vector<MpC>> invert_matrix(std::vector<std::vector<MpC>> a, mp_bitcnt_t prec) {
    const std::size_t n = a.size();
    std::vector<std::vector<MpC>> inv(n, std::vector<MpC>(n, MpC(prec)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i].re = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        mpf_class best = norm2(a[col][col], prec);
        for (std::size_t r = col + 1; r < n; ++r) {
            mpf_class v = norm2(a[r][col], prec);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        MpC p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = div(a[col][j], p, prec);
            inv[col][j] = div(inv[col][j], p, prec);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            MpC factor = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = sub(a[r][j], mul(factor, a[col][j], prec), prec);
                inv[r][j] = sub(inv[r][j], mul(factor, inv[col][j], prec), prec);
            }
        }
    }
    return inv;
}

/// Best rational approximation p/q with q <= height of x, accepted when within tol.
std::optional<Rational> rationalize(const mpf_class& x, const Integer& height, const mpf_class& tol, mp_bitcnt_t prec) {
    // Continued fraction convergents.
    mpf_class rem(x, prec);
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    std::optional<Rational> best;
    for (int it = 0; it < 200; ++it) {
        mpf_class fl(0, prec);
        fl = floor(rem);
        Integer a(fl);
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        if (q2 > height) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational cand(p1, q1);
        cand.canonicalize();
        mpf_class err(0, prec);
        err = abs(x - to_mpf(cand, prec));
        if (err <= tol) return cand;
        mpf_class frac(0, prec);
        frac = rem - fl;
        if (frac == 0) break;
        rem = 1 / frac;
    }
    return best;
}

struct NumericContext {
    std::vector<Embedding> roots;
    std::vector<MpC> z;
    std::vector<std::vector<MpC>> vinv;  // inverse Vandermonde: c = vinv * w
    mp_bitcnt_t prec;
    int real_count = 0;
};

NumericContext make_context(const NumberField& field, int precision_bits) {
    NumericContext ctx;
    ctx.prec = static_cast<mp_bitcnt_t>(precision_bits + 64);
    ctx.roots = numeric_embeddings(field, precision_bits + 32);
    const int d = field.degree();
    for (const auto& e : ctx.roots) {
        ctx.z.emplace_back(e.re, e.im, ctx.prec);
        if (e.is_real) ++ctx.real_count;
    }
    std::vector<std::vector<MpC>> v(static_cast<std::size_t>(d), std::vector<MpC>(static_cast<std::size_t>(d), MpC(ctx.prec)));
    for (int k = 0; k < d; ++k) {
        MpC pw(ctx.prec);
        pw.re = 1;
        for (int i = 0; i < d; ++i) {
            v[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = pw;
            pw = mul(pw, ctx.z[static_cast<std::size_t>(k)], ctx.prec);
        }
    }
    ctx.vinv = invert_matrix(std::move(v), ctx.prec);
    return ctx;
}

enum class Fit { Refuted, Exact, Unresolved };

/// Solve for rational power-basis coordinates from the embedding images w and
/// verify exactly with `accept`.
Fit fit_rational(const NumericContext& ctx, const NumberField& field, const std::vector<MpC>& w, long height_bound,
                 const std::function<bool(const FieldElement&)>& accept, std::optional<FieldElement>& out) {
    const std::size_t d = w.size();
    const mp_bitcnt_t prec = ctx.prec;
    mpf_class imag_tol = pow2(-static_cast<int>(prec) / 3, prec);
    mpf_class rat_tol = pow2(-static_cast<int>(prec) / 3, prec);
    std::vector<Rational> coeffs(d);
    for (std::size_t i = 0; i < d; ++i) {
        MpC acc(prec);
        for (std::size_t k = 0; k < d; ++k) acc = add(acc, mul(ctx.vinv[i][k], w[k], prec), prec);
        if (abs(acc.im) > imag_tol) return Fit::Refuted;
        auto r = rationalize(acc.re, Integer(height_bound), rat_tol, prec);
        if (!r) return Fit::Refuted;
        coeffs[i] = *r;
    }
    FieldElement cand(field, coeffs);
    if (accept(cand)) {
        out = cand;
        return Fit::Exact;
    }
    return Fit::Unresolved;
}

}  // namespace

std::vector<std::pair<Rational, Rational>> real_root_intervals(const NumberField& field) {
    return isolate_real_roots(field.min_poly());
}

std::vector<Embedding> numeric_embeddings(const NumberField& field, int precision_bits) {
    if (precision_bits < 32) throw InvariantViolation("embedding precision must be at least 32 bits");
    const Polynomial& f = field.min_poly();
    const int d = f.degree();
    const auto prec = static_cast<mp_bitcnt_t>(precision_bits + 32);
    std::vector<Embedding> out;
    auto intervals = isolate_real_roots(f);
    for (const auto& [lo, hi] : intervals) {
        Rational r = refine_real_root(f, lo, hi, precision_bits);
        Embedding e{mpf_class(0, prec), mpf_class(0, prec), true};
        e.re = r;
        out.push_back(std::move(e));
    }
    const int complex_count = d - static_cast<int>(intervals.size());
    if (complex_count == 0) return out;

    auto approx = durand_kerner(f);
    std::sort(approx.begin(), approx.end(), [](const CLD& a, const CLD& b) { return std::abs(a.imag()) > std::abs(b.imag()); });
    std::vector<CLD> upper;
    for (int k = 0; k < complex_count; ++k)
        if (approx[static_cast<std::size_t>(k)].imag() > 0) upper.push_back(approx[static_cast<std::size_t>(k)]);
    std::sort(upper.begin(), upper.end(), [](const CLD& a, const CLD& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    if (static_cast<int>(upper.size()) * 2 != complex_count)
        throw ReconstructionInconclusive("could not separate complex roots of " + f.to_string());

    std::vector<Rational> fc = f.coeffs();
    std::vector<Rational> dfc = f.derivative().coeffs();
    mpf_class tol(0, prec);
    tol = pow2(-precision_bits, prec);
    for (const auto& z0 : upper) {
        MpC z(prec);
        z.re = static_cast<double>(z0.real());
        z.im = static_cast<double>(z0.imag());
        for (int it = 0; it < 400; ++it) {
            MpC fz = eval_poly(fc, z, prec);
            mpf_class res(0, prec);
            res = sqrt(norm2(fz, prec));
            if (res < tol) break;
            MpC dz = eval_poly(dfc, z, prec);
            z = sub(z, div(fz, dz, prec), prec);
        }
        Embedding e{mpf_class(z.re, prec), mpf_class(z.im, prec), false};
        Embedding c{mpf_class(z.re, prec), mpf_class(-z.im, prec), false};
        out.push_back(std::move(e));
        out.push_back(std::move(c));
    }
    return out;
}

Embedding evaluate(const FieldElement& x, const Embedding& at, int precision_bits) {
    const auto prec = static_cast<mp_bitcnt_t>(precision_bits + 32);
    MpC z(at.re, at.im, prec);
    MpC v = eval_poly(x.coeffs(), z, prec);
    Embedding e{mpf_class(v.re, prec), mpf_class(v.im, prec), at.is_real};
    if (at.is_real) e.im = 0;
    return e;
}

int sign_at_real_embedding(const FieldElement& x, Rational lo, Rational hi) {
    const Polynomial& f = x.field().min_poly();
    const Polynomial g = x.as_polynomial();
    if (g.is_zero()) throw DivisionByZero();
    if (lo == hi) return sign(g.eval(lo));
    SturmSequence sf(f);
    // Shrink until g has no root in (lo, hi] and g(hi) != 0.
    SturmSequence sg(squarefree_part(g));
    for (int it = 0; it < 4096; ++it) {
        if (g.degree() < 1 || sg.count_roots(lo, hi) == 0) {
            if (g.eval(hi) != 0) return sign(g.eval(hi));
        }
        Rational mid = (lo + hi) / 2;
        if (sf.count_roots(lo, mid) == 1) {
            if (f.eval(mid) == 0) return sign(g.eval(mid));
            hi = mid;
        } else {
            lo = mid;
        }
    }
    throw Inconclusive("sign determination did not terminate");
}

std::vector<FieldAutomorphism> automorphisms(const NumberField& field, long height_bound) {
    std::vector<FieldAutomorphism> out;
    out.push_back(FieldAutomorphism::identity(field));
    const int d = field.degree();
    if (d == 1) return out;
    if (auto n = field.cyclotomic_order(); n && *n > 2) {
        for (int k = 2; k < *n; ++k) {
            if (std::gcd(k, *n) != 1) continue;
            out.emplace_back(field, FieldElement::from_polynomial(field, Polynomial::monomial(1, k)));
        }
        return out;
    }
    if (d > 9) throw ReconstructionInconclusive("automorphism reconstruction is limited to degree 9");

    NumericContext ctx = make_context(field, 256);
    const int r = ctx.real_count;
    const int pairs = (d - r) / 2;
    auto is_root = [&](const FieldElement& b) {
        try {
            FieldAutomorphism a(field, b);
            return true;
        } catch (const InvariantViolation&) {
            return false;
        }
    };

    // Enumerate root permutations that respect complex conjugation.
    std::vector<int> real_perm(static_cast<std::size_t>(r));
    std::iota(real_perm.begin(), real_perm.end(), 0);
    std::vector<int> pair_perm(static_cast<std::size_t>(pairs));
    std::iota(pair_perm.begin(), pair_perm.end(), 0);
    bool unresolved = false;
    do {
        do {
            for (long flips = 0; flips < (1L << pairs); ++flips) {
                std::vector<MpC> w;
                for (int k = 0; k < r; ++k) w.push_back(ctx.z[static_cast<std::size_t>(real_perm[static_cast<std::size_t>(k)])]);
                for (int p = 0; p < pairs; ++p) {
                    const std::size_t base = static_cast<std::size_t>(r + 2 * pair_perm[static_cast<std::size_t>(p)]);
                    const bool flip = (flips >> p) & 1;
                    w.push_back(ctx.z[flip ? base + 1 : base]);
                    w.push_back(ctx.z[flip ? base : base + 1]);
                }
                std::optional<FieldElement> beta;
                Fit fit = fit_rational(ctx, field, w, height_bound, is_root, beta);
                if (fit == Fit::Unresolved) unresolved = true;
                if (fit != Fit::Exact) continue;
                FieldAutomorphism a(field, *beta);
                if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
            }
        } while (std::next_permutation(pair_perm.begin(), pair_perm.end()));
    } while (std::next_permutation(real_perm.begin(), real_perm.end()));
    if (unresolved) throw ReconstructionInconclusive("a numeric root of " + field.min_poly().to_string() + " could not be certified");
    return out;
}

SqrtResult sqrt_in_field(const FieldElement& d, long height_bound) {
    const NumberField& field = d.field();
    SqrtResult result;
    if (d.is_zero()) {
        result.status = SqrtStatus::Found;
        result.root = d;
        result.certificate = "exact";
        return result;
    }
    // Exact shortcut for rational squares.
    if (d.is_rational()) {
        Rational q = d.coeffs()[0];
        if (q > 0) {
            Integer n(q.get_num()), m(q.get_den());
            Integer sn = sqrt(n), sm = sqrt(m);
            if (sn * sn == n && sm * sm == m) {
                result.status = SqrtStatus::Found;
                result.root = FieldElement(field, Rational(sn, sm));
                result.certificate = "exact";
                return result;
            }
        }
        if (field.degree() == 1) {
            result.status = SqrtStatus::NoRoot;
            result.certificate = q < 0 ? "negative rational" : "numerator or denominator is not a perfect square";
            return result;
        }
    }
    // Sound refutation: a real embedding where d is negative.
    auto intervals = real_root_intervals(field);
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        if (sign_at_real_embedding(d, intervals[k].first, intervals[k].second) < 0) {
            result.status = SqrtStatus::NoRoot;
            result.certificate = "negative at real embedding " + std::to_string(k) + " (root in (" +
                                 intervals[k].first.get_str() + ", " + intervals[k].second.get_str() + "])";
            return result;
        }
    }
    const int deg = field.degree();
    if (deg > 12) {
        result.status = SqrtStatus::Inconclusive;
        result.certificate = "degree too large for sign-pattern reconstruction";
        return result;
    }
    NumericContext ctx = make_context(field, 256);
    const mp_bitcnt_t prec = ctx.prec;
    std::vector<MpC> roots;
    for (const auto& z : ctx.z) roots.push_back(complex_sqrt(eval_poly(d.coeffs(), z, prec), prec));
    const int r = ctx.real_count;
    const int pairs = (deg - r) / 2;
    const int free_signs = r + pairs;
    auto squares_to_d = [&](const FieldElement& s) { return s * s == d; };
    bool unresolved = false;
    // Global sign is irrelevant: fix the first choice.
    for (long mask = 0; mask < (1L << std::max(free_signs - 1, 0)); ++mask) {
        std::vector<MpC> w;
        for (int k = 0; k < deg; ++k) {
            int slot = k < r ? k : r + (k - r) / 2;
            bool neg = slot > 0 && ((mask >> (slot - 1)) & 1);
            MpC v = roots[static_cast<std::size_t>(k)];
            if (k >= r && (k - r) % 2 == 1) {
                // conjugate of the previous entry
                v = roots[static_cast<std::size_t>(k - 1)];
                v.im = -v.im;
            }
            if (neg) {
                v.re = -v.re;
                v.im = -v.im;
            }
            w.push_back(v);
        }
        std::optional<FieldElement> s;
        Fit fit = fit_rational(ctx, field, w, height_bound, squares_to_d, s);
        if (fit == Fit::Exact) {
            result.status = SqrtStatus::Found;
            result.root = *s;
            result.certificate = "exact";
            return result;
        }
        if (fit == Fit::Unresolved) unresolved = true;
    }
    result.status = SqrtStatus::Inconclusive;
    result.certificate = unresolved ? "candidate failed exact verification" : "no square root with coordinates of height <= " + std::to_string(height_bound);
    return result;
}

}  // namespace wittkit
