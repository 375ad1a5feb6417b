#include "wittkit/errors.hpp"
#include "wittkit/kernels/modrow.hpp"
#include "wittkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

namespace wittkit {

std::string AbelianGroupStructure::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : invariant_factors) {
        if (!first) os << " x ";
        os << "Z/" << d.get_str();
        first = false;
    }
    if (free_rank > 0) {
        if (!first) os << " x ";
        os << "Z^" << free_rank;
    }
    return os.str();
}

namespace linalg {

void reduce_into(std::vector<Integer>& v, const std::vector<Integer>& factors) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(factors[i]) == 0) continue;
        mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), factors[i].get_mpz_t());
    }
}

namespace {

void check_budget(std::size_t entries, const Options& opts, const char* what) {
    if (entries > opts.work_budget) throw BudgetExceeded(entries, opts.work_budget, what);
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int valuation(long long n, long long p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

long long ipow(long long p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

long long mod_q(const Integer& x, long long q) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(q));
    return r.get_si();
}

long long mulmod(long long a, long long b, long long q) { return (a * b) % q; }

bool local_path_applies(const std::vector<Integer>& a, const std::vector<Integer>& b, const Options& opts) {
    if (opts.force_integer) return false;
    for (const auto* v : {&a, &b})
        for (const auto& f : *v)
            if (sgn(f) == 0 || f >= Integer(static_cast<long>(kernels::kMaxModulus))) return false;
    return true;
}

std::vector<long long> primes_of(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<long long> ps;
    for (const auto* v : {&a, &b})
        for (const auto& f : *v)
            for (auto [p, e] : factorize(f.get_si())) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

/// Data of one prime: indices with positive valuation and those valuations.
struct PrimeSlice {
    long long p;
    int k = 0;
    long long q = 1;
    std::vector<std::size_t> idx;
    std::vector<int> val;
    std::vector<long long> pos;  // full index -> slice index or -1
};

PrimeSlice slice(const std::vector<Integer>& factors, long long p) {
    PrimeSlice s;
    s.p = p;
    s.pos.assign(factors.size(), -1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        int v = valuation(factors[i].get_si(), p);
        if (v == 0) continue;
        s.pos[i] = static_cast<long long>(s.idx.size());
        s.idx.push_back(i);
        s.val.push_back(v);
    }
    return s;
}

/// Full-module element whose p-part is `local` (defined modulo p^val) and whose other parts vanish.
std::vector<Integer> lift(const std::vector<long long>& local, const PrimeSlice& s, const std::vector<Integer>& factors) {
    std::vector<Integer> x(factors.size(), 0);
    for (std::size_t j = 0; j < s.idx.size(); ++j) {
        const std::size_t i = s.idx[j];
        const long long pe = ipow(s.p, s.val[j]);
        Integer m = factors[i] / static_cast<long>(pe);
        Integer minv;
        Integer pe_z(static_cast<long>(pe));
        mpz_invert(minv.get_mpz_t(), Integer(m % pe_z).get_mpz_t(), pe_z.get_mpz_t());
        if (pe == 1) minv = 0;
        Integer val(static_cast<long>(local[j] % pe));
        x[i] = val * m * minv;
        mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), factors[i].get_mpz_t());
    }
    return x;
}

Integer crt_pair(const Integer& a, const Integer& m, const Integer& b, const Integer& n) {
    // x ≡ a (m), x ≡ b (n), gcd(m, n) = 1
    Integer minv;
    mpz_invert(minv.get_mpz_t(), Integer(m % n).get_mpz_t(), n.get_mpz_t());
    if (n == 1) minv = 0;
    Integer t = ((b - a) * minv) % n;
    if (t < 0) t += n;
    Integer x = a + m * t;
    return x % (m * n);
}

/// One p-primary summand list: exponents ascending with representatives and coordinates.
struct LocalPart {
    long long p;
    std::vector<int> exponents;
    std::vector<std::vector<Integer>> generators;
    std::function<std::vector<long long>(const std::vector<Integer>&)> coordinates;
};

LocalPart local_subquotient(long long p, const std::vector<Integer>& mid, const std::vector<Integer>& out,
                            const SparseIntMatrix& d_out, const SparseIntMatrix& d_in, const Options& opts) {
    PrimeSlice S = slice(mid, p);
    PrimeSlice T = slice(out, p);
    LocalPart part;
    part.p = p;
    int k = 0;
    for (int v : S.val) k = std::max(k, v);
    for (int v : T.val) k = std::max(k, v);
    const long long q = ipow(p, k);
    const std::size_t ns = S.idx.size(), nt = T.idx.size();
    if (ns == 0) {
        part.coordinates = [](const std::vector<Integer>&) { return std::vector<long long>{}; };
        return part;
    }
    check_budget(std::max(nt * ns, ns * ns), opts, "kernel working matrix");

    std::vector<double> dprime(nt * ns, 0.0);
    {
        std::vector<long long> acc(nt * ns, 0);
        for (const auto& e : d_out.entries) {
            const long long r = T.pos[e.row], c = S.pos[e.col];
            if (r < 0 || c < 0) continue;
            const long long scale = ipow(p, k - T.val[static_cast<std::size_t>(r)]);
            long long v = (e.value % q + q) % q;
            auto& cell = acc[static_cast<std::size_t>(r) * ns + static_cast<std::size_t>(c)];
            cell = (cell + mulmod(v, scale, q)) % q;
        }
        for (std::size_t i = 0; i < acc.size(); ++i) dprime[i] = static_cast<double>(acc[i]);
    }
    auto kern = std::make_shared<LocalSmithForm>(local_smith_form(std::move(dprime), nt, ns, p, k, false, true));

    // Coordinates z_i of the kernel lattice modulo p^k: y = Vinv x, z_i = y_i / p^{c_i} (mod p^{w_i}).
    std::vector<std::size_t> zidx;
    std::vector<int> zw, zc;
    for (std::size_t i = 0; i < ns; ++i) {
        const int w = i < kern->rank ? kern->valuations[i] : k;
        if (w == 0) continue;
        zidx.push_back(i);
        zw.push_back(w);
        zc.push_back(k - w);
    }
    const std::size_t nz = zidx.size();
    std::vector<char> in_z(ns, 0);
    for (std::size_t i : zidx) in_z[i] = 1;
    auto z_of = [kern, zidx, zw, zc, in_z, ns, q, p](const std::vector<long long>& xs) -> std::optional<std::vector<long long>> {
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < ns; ++j)
            if (xs[j] != 0) nz.push_back(j);
        auto y_at = [&](std::size_t i) {
            const double* row = kern->Vinv.data() + i * ns;
            long long y = 0;
            for (std::size_t j : nz) y = (y + static_cast<long long>(row[j]) * xs[j]) % q;
            return y;
        };
        std::vector<long long> z(zidx.size());
        for (std::size_t a = 0; a < zidx.size(); ++a) {
            const long long y = y_at(zidx[a]);
            const long long pc = ipow(p, zc[a]);
            if (y % pc != 0) return std::nullopt;
            z[a] = (y / pc) % ipow(p, zw[a]);
        }
        // Rows of Vinv outside zidx belong to w = 0 and must vanish on kernel elements.
        for (std::size_t i = 0; i < ns; ++i)
            if (!in_z[i] && y_at(i) != 0) return std::nullopt;
        return z;
    };
    auto to_local = [S, q](const std::vector<Integer>& x) {
        std::vector<long long> xs(S.idx.size());
        for (std::size_t j = 0; j < S.idx.size(); ++j) xs[j] = mod_q(x[S.idx[j]], q);
        return xs;
    };

    // Boundary generators in z-coordinates, followed by the relations p^{w_i}.
    std::vector<std::vector<long long>> bcols;
    {
        std::vector<std::vector<std::pair<std::size_t, long long>>> cols(d_in.cols);
        for (const auto& e : d_in.entries) {
            const long long r = S.pos[e.row];
            if (r >= 0) cols[e.col].emplace_back(static_cast<std::size_t>(r), e.value);
        }
        for (const auto& col : cols) {
            if (col.empty()) continue;
            std::vector<long long> xs(ns, 0);
            for (auto [r, v] : col) xs[r] = ((xs[r] + v) % q + q) % q;
            auto z = z_of(xs);
            if (!z) throw InvariantViolation("composite differential is nonzero");
            bcols.push_back(std::move(*z));
        }
        for (std::size_t j = 0; j < ns; ++j) {
            if (S.val[j] == k) continue;
            std::vector<long long> xs(ns, 0);
            xs[j] = ipow(p, S.val[j]);
            auto z = z_of(xs);
            if (!z) throw InvariantViolation("module relation outside the cycle lattice");
            bcols.push_back(std::move(*z));
        }
    }
    const std::size_t nb = bcols.size();
    check_budget(std::max(nz * (nb + nz), nz * nz), opts, "cokernel working matrix");
    std::vector<double> cmat(nz * (nb + nz), 0.0);
    for (std::size_t c = 0; c < nb; ++c)
        for (std::size_t r = 0; r < nz; ++r) cmat[r * (nb + nz) + c] = static_cast<double>(bcols[c][r]);
    for (std::size_t r = 0; r < nz; ++r) cmat[r * (nb + nz) + nb + r] = static_cast<double>(ipow(p, zw[r]) % q);
    auto cok = std::make_shared<LocalSmithForm>(local_smith_form(std::move(cmat), nz, nb + nz, p, k, true, false));

    std::vector<std::size_t> rows_kept;
    for (std::size_t j = 0; j < nz; ++j) {
        const int e = j < cok->rank ? cok->valuations[j] : k;
        if (e == 0) continue;
        rows_kept.push_back(j);
        part.exponents.push_back(e);
        // z = column j of Uinv; x = V · diag(p^{c}) z
        std::vector<long long> xs(ns, 0);
        const double* uz = cok->UinvT.data() + j * nz;
        for (std::size_t a = 0; a < nz; ++a) {
            const long long za = static_cast<long long>(uz[a]) % ipow(p, zw[a]);
            if (za == 0) continue;
            const long long ya = mulmod(za, ipow(p, zc[a]), q);
            const double* vcol = kern->VT.data() + zidx[a] * ns;
            for (std::size_t s = 0; s < ns; ++s) xs[s] = (xs[s] + mulmod(ya, static_cast<long long>(vcol[s]), q)) % q;
        }
        part.generators.push_back(lift(xs, S, mid));
    }
    std::vector<int> exps = part.exponents;
    part.coordinates = [cok, rows_kept, exps, z_of, to_local, nz, p, q](const std::vector<Integer>& x) {
        auto z = z_of(to_local(x));
        if (!z) throw InvariantViolation("element is not a cycle");
        std::vector<long long> c(rows_kept.size());
        for (std::size_t a = 0; a < rows_kept.size(); ++a) {
            const double* urow = cok->U.data() + rows_kept[a] * nz;
            long long acc = 0;
            for (std::size_t i = 0; i < nz; ++i) acc = (acc + mulmod(static_cast<long long>(urow[i]), (*z)[i], q)) % q;
            c[a] = acc % ipow(p, exps[a]);
        }
        return c;
    };
    return part;
}

Subquotient local_path(const std::vector<Integer>& mid, const std::vector<Integer>& out, const SparseIntMatrix& d_out,
                       const SparseIntMatrix& d_in, const Options& opts) {
    std::vector<LocalPart> parts;
    for (long long p : primes_of(mid, out)) {
        auto part = local_subquotient(p, mid, out, d_out, d_in, opts);
        if (!part.exponents.empty()) parts.push_back(std::move(part));
    }
    std::size_t t = 0;
    for (const auto& pt : parts) t = std::max(t, pt.exponents.size());
    Subquotient res;
    // Canonical factor i collects, from each prime, the exponent aligned to the right.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> slots(t);  // (part, index)
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const std::size_t c = parts[pi].exponents.size();
        for (std::size_t j = 0; j < c; ++j) slots[t - c + j].emplace_back(pi, j);
    }
    for (std::size_t i = 0; i < t; ++i) {
        Integer d = 1;
        std::vector<Integer> g(mid.size(), 0);
        for (auto [pi, j] : slots[i]) {
            d *= Integer(static_cast<long>(ipow(parts[pi].p, parts[pi].exponents[j])));
            for (std::size_t s = 0; s < mid.size(); ++s) g[s] += parts[pi].generators[j][s];
        }
        reduce_into(g, mid);
        res.structure.invariant_factors.push_back(d);
        res.generators.push_back(std::move(g));
    }
    auto shared_parts = std::make_shared<std::vector<LocalPart>>(std::move(parts));
    res.coordinates = [shared_parts, slots](const std::vector<Integer>& x) {
        std::vector<std::vector<long long>> local;
        for (const auto& pt : *shared_parts) local.push_back(pt.coordinates(x));
        std::vector<Integer> c;
        for (const auto& slot : slots) {
            Integer a = 0, m = 1;
            for (auto [pi, j] : slot) {
                const Integer n(static_cast<long>(ipow((*shared_parts)[pi].p, (*shared_parts)[pi].exponents[j])));
                a = crt_pair(a, m, Integer(static_cast<long>(local[pi][j])), n);
                m *= n;
            }
            c.push_back(a);
        }
        return c;
    };
    return res;
}

ZMatrix column_block(const SparseIntMatrix& d, const std::vector<Integer>& relations) {
    ZMatrix m = d.dense();
    if (m.empty()) m.assign(d.rows, {});
    for (std::size_t i = 0; i < relations.size(); ++i) {
        if (sgn(relations[i]) == 0) continue;
        for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(r == i ? relations[i] : Integer(0));
    }
    return m;
}

Subquotient integer_path(const std::vector<Integer>& mid, const std::vector<Integer>& out, const SparseIntMatrix& d_out,
                         const SparseIntMatrix& d_in, const Options& opts) {
    const std::size_t a = mid.size();
    check_budget(out.size() * (a + out.size()), opts, "kernel working matrix");
    // Cycle lattice L = projection of ker [d_out | E_out] onto the first a coordinates.
    ZMatrix m1 = column_block(d_out, out);
    std::size_t width = a;
    for (const auto& f : out) if (sgn(f) != 0) ++width;
    for (auto& row : m1) row.resize(width, 0);
    std::vector<std::vector<Integer>> lat_gens;
    if (m1.empty()) {
        for (std::size_t i = 0; i < a; ++i) {
            std::vector<Integer> e(a, 0);
            e[i] = 1;
            lat_gens.push_back(std::move(e));
        }
    } else {
        auto snf1 = integer_smith_form(m1, false, true);
        for (std::size_t j = snf1.rank; j < width; ++j) {
            std::vector<Integer> v(a);
            for (std::size_t i = 0; i < a; ++i) v[i] = snf1.V[i][j];
            lat_gens.push_back(std::move(v));
        }
    }
    Subquotient res;
    if (lat_gens.empty() || a == 0) {
        res.coordinates = [](const std::vector<Integer>&) { return std::vector<Integer>{}; };
        return res;
    }
    ZMatrix G(a, std::vector<Integer>(lat_gens.size()));
    for (std::size_t j = 0; j < lat_gens.size(); ++j)
        for (std::size_t i = 0; i < a; ++i) G[i][j] = lat_gens[j][i];
    auto snfL = std::make_shared<IntegerSmithForm>(integer_smith_form(G, true, false));
    const std::size_t r = snfL->rank;
    // Basis b_i = s_i · (column i of Uinv); coordinates c_i = (U v)_i / s_i.
    auto lattice_coords = [snfL, r, a](const std::vector<Integer>& v) -> std::optional<std::vector<Integer>> {
        std::vector<Integer> c(r);
        for (std::size_t i = 0; i < a; ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < a; ++j) acc += snfL->U[i][j] * v[j];
            if (i < r) {
                if (!mpz_divisible_p(acc.get_mpz_t(), snfL->diagonal[i].get_mpz_t())) return std::nullopt;
                c[i] = acc / snfL->diagonal[i];
            } else if (sgn(acc) != 0) {
                return std::nullopt;
            }
        }
        return c;
    };
    std::vector<std::vector<Integer>> bgens;
    {
        ZMatrix din = d_in.dense();
        for (std::size_t j = 0; j < d_in.cols; ++j) {
            std::vector<Integer> v(a);
            bool nz = false;
            for (std::size_t i = 0; i < a; ++i) { v[i] = din[i][j]; nz = nz || sgn(v[i]) != 0; }
            if (nz) bgens.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < a; ++i) {
            if (sgn(mid[i]) == 0) continue;
            std::vector<Integer> v(a, 0);
            v[i] = mid[i];
            bgens.push_back(std::move(v));
        }
    }
    ZMatrix cmat(r, std::vector<Integer>(bgens.size()));
    for (std::size_t j = 0; j < bgens.size(); ++j) {
        auto c = lattice_coords(bgens[j]);
        if (!c) throw InvariantViolation("composite differential is nonzero");
        for (std::size_t i = 0; i < r; ++i) cmat[i][j] = (*c)[i];
    }
    auto cok = std::make_shared<IntegerSmithForm>(integer_smith_form(cmat, true, false));
    std::vector<std::size_t> kept;
    std::vector<Integer> moduli;  // 0 for free
    for (std::size_t j = 0; j < r; ++j) {
        Integer e = j < cok->rank ? cok->diagonal[j] : Integer(0);
        if (e == 1) continue;
        kept.push_back(j);
        moduli.push_back(e);
        if (sgn(e) != 0) res.structure.invariant_factors.push_back(e);
        else ++res.structure.free_rank;
        std::vector<Integer> x(a, 0);
        for (std::size_t i = 0; i < r; ++i) {
            const Integer& zi = cok->Uinv[i][j];
            if (sgn(zi) == 0) continue;
            for (std::size_t s = 0; s < a; ++s) x[s] += zi * snfL->diagonal[i] * snfL->Uinv[s][i];
        }
        reduce_into(x, mid);
        res.generators.push_back(std::move(x));
    }
    res.coordinates = [cok, kept, moduli, lattice_coords, r](const std::vector<Integer>& x) {
        auto c = lattice_coords(x);
        if (!c) throw InvariantViolation("element is not a cycle");
        std::vector<Integer> out;
        for (std::size_t t = 0; t < kept.size(); ++t) {
            Integer acc = 0;
            for (std::size_t i = 0; i < r; ++i) acc += cok->U[kept[t]][i] * (*c)[i];
            if (sgn(moduli[t]) != 0) mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), moduli[t].get_mpz_t());
            out.push_back(acc);
        }
        return out;
    };
    return res;
}

std::optional<std::vector<Integer>> local_solve(const std::vector<Integer>& src, const std::vector<Integer>& dst,
                                                const SparseIntMatrix& d, const std::vector<Integer>& target,
                                                const Options& opts) {
    std::vector<Integer> x(src.size(), 0);
    for (long long p : primes_of(src, dst)) {
        PrimeSlice S = slice(src, p), T = slice(dst, p);
        int k = 0;
        for (int v : S.val) k = std::max(k, v);
        for (int v : T.val) k = std::max(k, v);
        const long long q = ipow(p, k);
        const std::size_t ns = S.idx.size(), nt = T.idx.size();
        std::vector<long long> c(nt);
        for (std::size_t t = 0; t < nt; ++t)
            c[t] = mulmod(mod_q(target[T.idx[t]], q), ipow(p, k - T.val[t]), q);
        if (nt == 0) continue;
        if (ns == 0) {
            if (std::any_of(c.begin(), c.end(), [](long long v) { return v != 0; })) return std::nullopt;
            continue;
        }
        check_budget(std::max({nt * ns, nt * nt, ns * ns}), opts, "solver working matrix");
        std::vector<long long> acc(nt * ns, 0);
        for (const auto& e : d.entries) {
            const long long r = T.pos[e.row], cc = S.pos[e.col];
            if (r < 0 || cc < 0) continue;
            long long v = (e.value % q + q) % q;
            auto& cell = acc[static_cast<std::size_t>(r) * ns + static_cast<std::size_t>(cc)];
            cell = (cell + mulmod(v, ipow(p, k - T.val[static_cast<std::size_t>(r)]), q)) % q;
        }
        std::vector<double> dm(acc.begin(), acc.end());
        auto snf = local_smith_form(std::move(dm), nt, ns, p, k, true, true);
        std::vector<long long> sol(ns, 0);
        for (std::size_t i = 0; i < nt; ++i) {
            long long y = 0;
            for (std::size_t j = 0; j < nt; ++j) y = (y + mulmod(static_cast<long long>(snf.U[i * nt + j]), c[j], q)) % q;
            if (i < snf.rank) {
                const long long pw = ipow(p, snf.valuations[i]);
                if (y % pw != 0) return std::nullopt;
                sol[i] = y / pw;
            } else if (y != 0) {
                return std::nullopt;
            }
        }
        std::vector<long long> xs(ns, 0);
        for (std::size_t i = 0; i < ns; ++i) {
            if (sol[i] == 0) continue;
            const double* vcol = snf.VT.data() + i * ns;
            for (std::size_t s = 0; s < ns; ++s) xs[s] = (xs[s] + mulmod(sol[i], static_cast<long long>(vcol[s]), q)) % q;
        }
        auto lifted = lift(xs, S, src);
        for (std::size_t s = 0; s < src.size(); ++s) x[s] += lifted[s];
    }
    reduce_into(x, src);
    return x;
}

std::optional<std::vector<Integer>> integer_solve(const std::vector<Integer>& src, const std::vector<Integer>& dst,
                                                  const SparseIntMatrix& d, const std::vector<Integer>& target,
                                                  const Options& opts) {
    const std::size_t a = src.size(), b = dst.size();
    check_budget(b * (a + b), opts, "solver working matrix");
    ZMatrix m = column_block(d, dst);
    std::size_t width = a;
    for (const auto& f : dst) if (sgn(f) != 0) ++width;
    for (auto& row : m) row.resize(width, 0);
    if (b == 0) return std::vector<Integer>(a, 0);
    auto snf = integer_smith_form(m, true, true);
    std::vector<Integer> sol(width, 0);
    for (std::size_t i = 0; i < b; ++i) {
        Integer y = 0;
        for (std::size_t j = 0; j < b; ++j) y += snf.U[i][j] * target[j];
        if (i < snf.rank) {
            if (!mpz_divisible_p(y.get_mpz_t(), snf.diagonal[i].get_mpz_t())) return std::nullopt;
            sol[i] = y / snf.diagonal[i];
        } else if (sgn(y) != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(a, 0);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < width; ++j) x[i] += snf.V[i][j] * sol[j];
    reduce_into(x, src);
    return x;
}

}  // namespace

Subquotient subquotient(const std::vector<Integer>& mid, const std::vector<Integer>& out, const SparseIntMatrix& d_out,
                        const SparseIntMatrix& d_in, const Options& opts) {
    if (d_out.cols != mid.size() || d_out.rows != out.size() || d_in.rows != mid.size())
        throw ShapeMismatch("subquotient: differential shapes do not match the modules");
    if (local_path_applies(mid, out, opts)) return local_path(mid, out, d_out, d_in, opts);
    return integer_path(mid, out, d_out, d_in, opts);
}

std::optional<std::vector<Integer>> solve_presented(const std::vector<Integer>& src, const std::vector<Integer>& dst,
                                                    const SparseIntMatrix& d, const std::vector<Integer>& target,
                                                    const Options& opts) {
    if (d.cols != src.size() || d.rows != dst.size() || target.size() != dst.size())
        throw ShapeMismatch("solve_presented: shapes do not match");
    if (local_path_applies(src, dst, opts)) return local_solve(src, dst, d, target, opts);
    return integer_solve(src, dst, d, target, opts);
}

AbelianGroupStructure generated_subgroup(const std::vector<Integer>& ambient,
                                         const std::vector<std::vector<Integer>>& gens) {
    const std::size_t g = gens.size(), n = ambient.size();
    AbelianGroupStructure out;
    if (g == 0) return out;
    ZMatrix m(n, std::vector<Integer>(g));
    for (std::size_t j = 0; j < g; ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = gens[j][i];
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(ambient[i]) == 0) continue;
        for (std::size_t r = 0; r < n; ++r) m[r].push_back(r == i ? ambient[i] : Integer(0));
    }
    const std::size_t width = m.empty() ? g : m[0].size();
    std::vector<std::vector<Integer>> rel;
    if (n == 0) {
        for (std::size_t j = 0; j < g; ++j) {
            std::vector<Integer> e(g, 0);
            e[j] = 1;
            rel.push_back(e);
        }
    } else {
        auto snf = integer_smith_form(m, false, true);
        for (std::size_t j = snf.rank; j < width; ++j) {
            std::vector<Integer> v(g);
            for (std::size_t i = 0; i < g; ++i) v[i] = snf.V[i][j];
            rel.push_back(std::move(v));
        }
    }
    if (rel.empty()) {
        out.free_rank = g;
        return out;
    }
    ZMatrix k(g, std::vector<Integer>(rel.size()));
    for (std::size_t j = 0; j < rel.size(); ++j)
        for (std::size_t i = 0; i < g; ++i) k[i][j] = rel[j][i];
    auto snf = integer_smith_form(k, false, false);
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.diagonal[i] != 1) out.invariant_factors.push_back(snf.diagonal[i]);
    out.free_rank = g - snf.rank;
    return out;
}

}  // namespace linalg
}  // namespace wittkit
