#include "generators.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/kernels/modrow.hpp"
#include "wittkit/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstring>

using namespace wittkit;
using namespace wittkit::linalg;

namespace {

std::vector<double> random_row(testgen::Rng& rng, std::size_t n, long long q) {
    std::uniform_int_distribution<long long> d(0, q - 1);
    std::vector<double> v(n);
    for (auto& x : v) x = static_cast<double>(d(rng));
    return v;
}

long long modq(const Integer& x, long long q) {
    Integer r = x % static_cast<long>(q);
    if (r < 0) r += static_cast<long>(q);
    return r.get_si();
}

long long pw(long long p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

// v_p of the nonzero diagonal entries that survive modulo p^k.
std::vector<int> local_oracle(const ZMatrix& a, long long p, int k) {
    IntegerSmithForm s = integer_smith_form(a, false, false);
    std::vector<int> v;
    for (std::size_t i = 0; i < s.rank; ++i) {
        Integer d = s.diagonal[i];
        int e = 0;
        while (e < k && d % static_cast<long>(p) == 0) {
            d /= static_cast<long>(p);
            ++e;
        }
        if (e < k) v.push_back(e);
    }
    std::sort(v.begin(), v.end());
    return v;
}

// (X·Y) mod q for row-major square or rectangular matrices.
std::vector<long long> mulmod(const std::vector<long long>& x, const std::vector<long long>& y, std::size_t r,
                              std::size_t m, std::size_t c, long long q) {
    std::vector<long long> z(r * c, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < m; ++t) {
            const long long a = x[i * m + t];
            if (a == 0) continue;
            for (std::size_t j = 0; j < c; ++j) z[i * c + j] = (z[i * c + j] + a * y[t * c + j]) % q;
        }
    return z;
}

std::vector<long long> as_ll(const std::vector<double>& v) {
    std::vector<long long> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = static_cast<long long>(v[i]);
    return r;
}

std::vector<long long> transpose(const std::vector<long long>& v, std::size_t n) {
    std::vector<long long> t(v.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j * n + i] = v[i * n + j];
    return t;
}

bool is_identity(const std::vector<long long>& m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m[i * n + j] != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace

TEST_CASE("scalar kernels") {
    const auto& k = kernels::scalar_kernels();
    std::vector<double> dst{1, 2, 3, 4, 5}, src{6, 6, 6, 6, 6};
    k.axpy(dst.data(), src.data(), 3, 7, dst.size());
    CHECK(dst == std::vector<double>{5, 6, 0, 1, 2});
    k.scale(dst.data(), 2, 7, dst.size());
    CHECK(dst == std::vector<double>{3, 5, 0, 2, 4});
    CHECK(kernels::active_kernels().name.size() > 0);
}

TEST_CASE("property: AVX2 kernels agree with the scalar reference") {
    const kernels::ModRowKernels* avx = kernels::avx2_kernels();
    if (!avx) {
        MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
        return;
    }
    const auto& ref = kernels::scalar_kernels();
    testgen::Rng rng(21);
    const std::vector<long long> moduli{2, 3, 8, 9, 97, 1024, 65521, 1 << 20, (1 << 26) - 5, (1 << 26) - 1};
    std::uniform_int_distribution<std::size_t> len(0, 77);
    for (long long q : moduli) {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = len(rng);
            std::vector<double> a = random_row(rng, n, q), b = a, src = random_row(rng, n, q);
            const double f = static_cast<double>(std::uniform_int_distribution<long long>(0, q - 1)(rng));
            ref.axpy(a.data(), src.data(), f, static_cast<double>(q), n);
            avx->axpy(b.data(), src.data(), f, static_cast<double>(q), n);
            REQUIRE(a == b);
            ref.scale(a.data(), f, static_cast<double>(q), n);
            avx->scale(b.data(), f, static_cast<double>(q), n);
            REQUIRE(a == b);
            for (double x : a) REQUIRE((x >= 0 && x < static_cast<double>(q)));
        }
    }
}

TEST_CASE("integer Smith form") {
    IntegerSmithForm s = integer_smith_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, true, true);
    CHECK(s.diagonal == std::vector<Integer>{2, 6, 12});
    CHECK(s.rank == 3);
    s = integer_smith_form({{0, 0}, {0, 0}}, false, false);
    CHECK(s.rank == 0);
    s = integer_smith_form({{4}, {6}}, false, false);
    CHECK(s.diagonal.front() == 2);
}

TEST_CASE("property: U·A·V is the Smith diagonal over Z") {
    testgen::Rng rng(22);
    std::uniform_int_distribution<int> dim(1, 7), ent(-9, 9);
    for (int trial = 0; trial < 150; ++trial) {
        const int r = dim(rng), c = dim(rng);
        ZMatrix a(static_cast<std::size_t>(r), std::vector<Integer>(static_cast<std::size_t>(c)));
        for (auto& row : a)
            for (auto& x : row) x = ent(rng);
        IntegerSmithForm s = integer_smith_form(a, true, true);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                Integer acc = 0;
                for (int t = 0; t < r; ++t)
                    for (int u = 0; u < c; ++u) acc += s.U[i][t] * a[t][u] * s.V[u][j];
                const Integer want = (i == j && static_cast<std::size_t>(i) < s.diagonal.size()) ? s.diagonal[i] : Integer(0);
                REQUIRE(acc == want);
            }
        for (std::size_t i = 0; i + 1 < s.rank; ++i) REQUIRE(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
}

TEST_CASE("property: local Smith form matches the integer oracle and its transforms") {
    testgen::Rng rng(23);
    const std::vector<std::pair<long long, int>> prime_powers{{2, 1}, {2, 3}, {2, 6}, {3, 2}, {5, 3}, {2, 20}, {7, 1}};
    std::uniform_int_distribution<int> dim(1, 9);
    for (auto [p, k] : prime_powers) {
        const long long q = pw(p, k);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
            // Bias toward p-divisible entries so higher valuations show up.
            std::uniform_int_distribution<long long> ent(-12, 12), shift(0, 3);
            ZMatrix a(r, std::vector<Integer>(c));
            std::vector<double> flat(r * c);
            std::vector<long long> A(r * c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) {
                    const long long v = ent(rng) * pw(p, static_cast<int>(shift(rng)));
                    a[i][j] = static_cast<long>(v);
                    A[i * c + j] = modq(a[i][j], q);
                    flat[i * c + j] = static_cast<double>(A[i * c + j]);
                }
            LocalSmithForm s = local_smith_form(flat, r, c, p, k, true, true);
            REQUIRE(s.valuations == local_oracle(a, p, k));
            REQUIRE(s.rank == s.valuations.size());

            const auto U = as_ll(s.U), Uinv = transpose(as_ll(s.UinvT), r);
            const auto V = transpose(as_ll(s.VT), c), Vinv = as_ll(s.Vinv);
            REQUIRE(is_identity(mulmod(U, Uinv, r, r, r, q), r));
            REQUIRE(is_identity(mulmod(V, Vinv, c, c, c, q), c));
            const auto D = mulmod(mulmod(U, A, r, r, c, q), V, r, c, c, q);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) {
                    long long want = 0;
                    if (i == j && i < s.rank) want = pw(p, s.valuations[i]) % q;
                    REQUIRE(D[i * c + j] == want);
                }
        }
    }
}

TEST_CASE("local Smith form rejects bad shapes") {
    CHECK_THROWS_AS(local_smith_form({1, 2, 3}, 2, 2, 2, 1, false, false), ShapeMismatch);
}

TEST_CASE("subquotient and generated subgroups") {
    // Z/8 with d_out = multiplication by 2 into Z/8, d_in = 0: kernel {0,4}.
    SparseIntMatrix out{1, 1, {}}, in{1, 0, {}};
    out.add(0, 0, 2);
    Subquotient h = subquotient({8}, {8}, out, in);
    CHECK(h.structure.to_string() == "Z/2");
    CHECK(generated_subgroup({8, 4}, {{2, 0}, {0, 2}}).to_string() == "Z/2 x Z/4");
    CHECK(generated_subgroup({0}, {{3}}).free_rank == 1);
    CHECK(AbelianGroupStructure{}.to_string() == "0");
}
