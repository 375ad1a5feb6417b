#include "wittkit/errors.hpp"
#include "wittkit/kernels/modrow.hpp"
#include "wittkit/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace wittkit::linalg {

ZMatrix SparseIntMatrix::dense() const {
    ZMatrix m(rows, std::vector<Integer>(cols, 0));
    for (const auto& e : entries) m[e.row][e.col] += static_cast<long>(e.value);
    return m;
}

namespace {

ZMatrix identity(std::size_t n) {
    ZMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

class IntegerEliminator {
public:
    IntegerEliminator(ZMatrix a, bool left, bool right) : a_(std::move(a)), left_(left), right_(right) {
        m_ = a_.size();
        n_ = m_ ? a_[0].size() : 0;
        if (left_) { U_ = identity(m_); Uinv_ = identity(m_); }
        if (right_) { V_ = identity(n_); Vinv_ = identity(n_); }
    }

    // row_r += f * row_s
    void row_add(std::size_t r, std::size_t s, const Integer& f) {
        for (std::size_t j = 0; j < n_; ++j) a_[r][j] += f * a_[s][j];
        if (left_) {
            for (std::size_t j = 0; j < m_; ++j) U_[r][j] += f * U_[s][j];
            for (std::size_t i = 0; i < m_; ++i) Uinv_[i][s] -= f * Uinv_[i][r];
        }
    }
    void row_swap(std::size_t r, std::size_t s) {
        if (r == s) return;
        std::swap(a_[r], a_[s]);
        if (left_) {
            std::swap(U_[r], U_[s]);
            for (std::size_t i = 0; i < m_; ++i) std::swap(Uinv_[i][r], Uinv_[i][s]);
        }
    }
    void row_negate(std::size_t r) {
        for (auto& x : a_[r]) x = -x;
        if (left_) {
            for (auto& x : U_[r]) x = -x;
            for (std::size_t i = 0; i < m_; ++i) Uinv_[i][r] = -Uinv_[i][r];
        }
    }
    // col_c += f * col_s
    void col_add(std::size_t c, std::size_t s, const Integer& f) {
        for (std::size_t i = 0; i < m_; ++i) a_[i][c] += f * a_[i][s];
        if (right_) {
            for (std::size_t i = 0; i < n_; ++i) V_[i][c] += f * V_[i][s];
            for (std::size_t j = 0; j < n_; ++j) Vinv_[s][j] -= f * Vinv_[c][j];
        }
    }
    void col_swap(std::size_t c, std::size_t s) {
        if (c == s) return;
        for (std::size_t i = 0; i < m_; ++i) std::swap(a_[i][c], a_[i][s]);
        if (right_) {
            for (std::size_t i = 0; i < n_; ++i) std::swap(V_[i][c], V_[i][s]);
            std::swap(Vinv_[c], Vinv_[s]);
        }
    }

    IntegerSmithForm run() {
        const std::size_t steps = std::min(m_, n_);
        std::size_t t = 0;
        for (; t < steps; ++t) {
            if (!pivot_step(t)) break;
        }
        IntegerSmithForm out;
        out.rank = t;
        out.diagonal.assign(steps, 0);
        for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = a_[i][i];
        out.U = std::move(U_);
        out.Uinv = std::move(Uinv_);
        out.V = std::move(V_);
        out.Vinv = std::move(Vinv_);
        return out;
    }

private:
    bool find_min(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < m_; ++i)
            for (std::size_t j = t; j < n_; ++j) {
                if (sgn(a_[i][j]) == 0) continue;
                Integer v = abs(a_[i][j]);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pr = i;
                    pc = j;
                    if (best == 1) return true;
                }
            }
        return found;
    }

    bool pivot_step(std::size_t t) {
        for (;;) {
            std::size_t pr = 0, pc = 0;
            if (!find_min(t, pr, pc)) return false;
            row_swap(t, pr);
            col_swap(t, pc);
            bool clean = true;
            for (std::size_t i = t + 1; i < m_; ++i) {
                if (sgn(a_[i][t]) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
                if (sgn(q) != 0) row_add(i, t, -q);
                if (sgn(a_[i][t]) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n_; ++j) {
                if (sgn(a_[t][j]) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
                if (sgn(q) != 0) col_add(j, t, -q);
                if (sgn(a_[t][j]) != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < m_ && divides; ++i)
                for (std::size_t j = t + 1; j < n_; ++j) {
                    if (!mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
                        row_add(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            if (!divides) continue;
            if (sgn(a_[t][t]) < 0) row_negate(t);
            return true;
        }
    }

    ZMatrix a_;
    bool left_, right_;
    std::size_t m_ = 0, n_ = 0;
    ZMatrix U_, Uinv_, V_, Vinv_;
};

long long inverse_mod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, r = a % m;
    if (r < 0) r += m;
    long long rr = r;
    while (rr != 0) {
        long long q = g / rr;
        std::swap(g, rr);
        rr -= q * g;
        std::swap(x, x1);
        x1 -= q * x;
    }
    if (g != 1) throw InvariantViolation("local pivot is not a unit times a prime power");
    x %= m;
    if (x < 0) x += m;
    return x;
}

class LocalEliminator {
public:
    LocalEliminator(std::vector<double> a, std::size_t rows, std::size_t cols, long long p, int k, bool left,
                    bool right)
        : a_(std::move(a)), m_(rows), n_(cols), p_(p), k_(k), left_(left), right_(right),
          kern_(kernels::active_kernels()) {
        q_ = 1;
        for (int i = 0; i < k; ++i) q_ *= p;
        if (static_cast<double>(q_) >= kernels::kMaxModulus)
            throw InvariantViolation("local modulus exceeds the row-kernel range");
        qd_ = static_cast<double>(q_);
        if (left_) { U_ = eye(m_); UinvT_ = eye(m_); }
        if (right_) { VT_ = eye(n_); Vinv_ = eye(n_); }
        pw_.assign(static_cast<std::size_t>(k) + 1, 1);
        for (int i = 1; i <= k; ++i) pw_[static_cast<std::size_t>(i)] = pw_[static_cast<std::size_t>(i) - 1] * p;
    }

    LocalSmithForm run() {
        LocalSmithForm out;
        out.p = p_;
        out.k = k_;
        out.rows = m_;
        out.cols = n_;
        const std::size_t steps = std::min(m_, n_);
        int w = 0;
        std::size_t t = 0;
        for (; t < steps; ++t) {
            std::size_t pr = 0, pc = 0;
            bool found = false;
            while (w < k_ && !(found = find_pivot(t, w, pr, pc))) ++w;
            if (!found) break;
            eliminate(t, pr, pc, w);
            out.valuations.push_back(w);
        }
        out.rank = t;
        out.U = std::move(U_);
        out.UinvT = std::move(UinvT_);
        out.VT = std::move(VT_);
        out.Vinv = std::move(Vinv_);
        return out;
    }

private:
    static std::vector<double> eye(std::size_t n) {
        std::vector<double> m(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
        return m;
    }
    double* row(std::vector<double>& m, std::size_t width, std::size_t r) { return m.data() + r * width; }
    long long at(std::size_t r, std::size_t c) const { return static_cast<long long>(a_[r * n_ + c]); }

    bool find_pivot(std::size_t t, int w, std::size_t& pr, std::size_t& pc) const {
        const long long next = pw_[static_cast<std::size_t>(w) + 1];
        auto eligible = [&](double v) { return v != 0.0 && static_cast<long long>(v) % next != 0; };
        bool found = false;
        for (std::size_t i = t; i < m_ && !found; ++i) {
            const double* r = a_.data() + i * n_;
            for (std::size_t j = t; j < n_; ++j)
                if (eligible(r[j])) {
                    pr = i;
                    pc = j;
                    found = true;
                    break;
                }
        }
        if (!found) return false;
        // Within the pivot column, prefer the sparsest row to limit fill-in.
        std::size_t best = n_ + 1;
        for (std::size_t i = pr; i < m_; ++i) {
            const double* r = a_.data() + i * n_;
            if (!eligible(r[pc])) continue;
            std::size_t count = 0;
            for (std::size_t j = t; j < n_ && count < best; ++j) count += r[j] != 0.0;
            if (count < best) {
                best = count;
                pr = i;
                if (count == 1) break;
            }
        }
        return true;
    }

    void swap_rows(std::vector<double>& m, std::size_t width, std::size_t r, std::size_t s) {
        if (r != s) std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(r * width),
                                     m.begin() + static_cast<std::ptrdiff_t>((r + 1) * width),
                                     m.begin() + static_cast<std::ptrdiff_t>(s * width));
    }

    void eliminate(std::size_t t, std::size_t pr, std::size_t pc, int w) {
        if (pr != t) {
            swap_rows(a_, n_, t, pr);
            if (left_) { swap_rows(U_, m_, t, pr); swap_rows(UinvT_, m_, t, pr); }
        }
        if (pc != t) {
            for (std::size_t i = 0; i < m_; ++i) std::swap(a_[i * n_ + t], a_[i * n_ + pc]);
            if (right_) { swap_rows(VT_, n_, t, pc); swap_rows(Vinv_, n_, t, pc); }
        }
        const long long pwr = pw_[static_cast<std::size_t>(w)];
        const long long unit = at(t, t) / pwr;
        const long long uinv = inverse_mod(unit, q_);
        if (uinv != 1) {
            kern_.scale(row(a_, n_, t) + t, static_cast<double>(uinv), qd_, n_ - t);
            if (left_) {
                kern_.scale(row(U_, m_, t), static_cast<double>(uinv), qd_, m_);
                kern_.scale(row(UinvT_, m_, t), static_cast<double>(unit % q_), qd_, m_);
            }
        }
        // Clear the pivot column below t.
        for (std::size_t i = t + 1; i < m_; ++i) {
            const long long v = at(i, t);
            if (v == 0) continue;
            const long long f = v / pwr;
            kern_.axpy(row(a_, n_, i) + t, row(a_, n_, t) + t, static_cast<double>(q_ - f), qd_, n_ - t);
            if (left_) {
                kern_.axpy(row(U_, m_, i), row(U_, m_, t), static_cast<double>(q_ - f), qd_, m_);
                kern_.axpy(row(UinvT_, m_, t), row(UinvT_, m_, i), static_cast<double>(f), qd_, m_);
            }
        }
        // Clear the pivot row to the right; only row t of A changes.
        double* prow = row(a_, n_, t);
        for (std::size_t j = t + 1; j < n_; ++j) {
            const long long v = static_cast<long long>(prow[j]);
            if (v == 0) continue;
            const long long f = v / pwr;
            prow[j] = 0.0;
            if (right_) {
                kern_.axpy(row(VT_, n_, j), row(VT_, n_, t), static_cast<double>(q_ - f), qd_, n_);
                kern_.axpy(row(Vinv_, n_, t), row(Vinv_, n_, j), static_cast<double>(f), qd_, n_);
            }
        }
    }

    std::vector<double> a_;
    std::size_t m_, n_;
    long long p_;
    int k_;
    bool left_, right_;
    const kernels::ModRowKernels& kern_;
    long long q_;
    double qd_;
    std::vector<long long> pw_;
    std::vector<double> U_, UinvT_, VT_, Vinv_;
};

}  // namespace

IntegerSmithForm integer_smith_form(ZMatrix a, bool track_left, bool track_right) {
    return IntegerEliminator(std::move(a), track_left, track_right).run();
}

LocalSmithForm local_smith_form(std::vector<double> a, std::size_t rows, std::size_t cols, long long p, int k,
                                bool track_left, bool track_right) {
    if (a.size() != rows * cols) throw ShapeMismatch("local_smith_form: data size does not match shape");
    return LocalEliminator(std::move(a), rows, cols, p, k, track_left, track_right).run();
}

}  // namespace wittkit::linalg
