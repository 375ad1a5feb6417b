#pragma once

// Integer linear algebra behind the cohomology computations: Smith normal
// forms over Z and over Z/p^k, and subquotients ker(d_out)/im(d_in) of
// finitely presented abelian groups Z^a / diag(factors).

#include "wittkit/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace wittkit {

/// Finitely generated abelian group in canonical form: torsion invariant
/// factors d_1 | d_2 | ... (each > 1) plus a free rank.
struct AbelianGroupStructure {
    std::vector<Integer> invariant_factors;
    std::size_t free_rank = 0;

    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    bool operator==(const AbelianGroupStructure& o) const = default;
    /// e.g. "0", "Z/2", "Z/2 x Z/4 x Z^1"
    std::string to_string() const;
};

namespace linalg {

using ZMatrix = std::vector<std::vector<Integer>>;

struct SparseEntry {
    std::size_t row;
    std::size_t col;
    long long value;
};

/// Integer matrix given by its nonzero entries; repeated positions add up.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseEntry> entries;
    void add(std::size_t r, std::size_t c, long long v) {
        if (v != 0) entries.push_back({r, c, v});
    }
    ZMatrix dense() const;
};

/// U·A·V = diag(diagonal) with U, V unimodular. The diagonal is nonnegative,
/// in divisibility order, zeros last; `rank` counts the nonzero entries.
struct IntegerSmithForm {
    std::vector<Integer> diagonal;
    std::size_t rank = 0;
    ZMatrix U, Uinv, V, Vinv;  // left empty when not requested
};

IntegerSmithForm integer_smith_form(ZMatrix a, bool track_left, bool track_right);

/// Smith form over Z/p^k of a dense row-major matrix with entries in [0, p^k),
/// p^k < 2^26. valuations[i] is v_p of the i-th diagonal entry for i < rank
/// (nondecreasing, each < k); all further diagonal entries vanish mod p^k.
/// Transforms are dense row-major; Uinv and V are stored transposed because
/// they only ever receive column operations.
struct LocalSmithForm {
    long long p = 0;
    int k = 0;
    std::size_t rows = 0, cols = 0, rank = 0;
    std::vector<int> valuations;
    std::vector<double> U, UinvT, VT, Vinv;
};

LocalSmithForm local_smith_form(std::vector<double> a, std::size_t rows, std::size_t cols, long long p, int k,
                                bool track_left, bool track_right);

struct Options {
    /// Upper bound on dense working-matrix entries.
    std::size_t work_budget = 10'000'000;
    /// Skip the local fast path and use the arbitrary-precision route.
    bool force_integer = false;
};

/// H = ker(d_out) / im(d_in) for Z^a/diag(mid) with d_out: mid -> out and
/// d_in: in -> mid. Generators are representatives in Z^a reduced into
/// [0, factor); `coordinates` maps a cycle to its class in the canonical
/// decomposition (torsion coordinates reduced, free ones exact) and throws
/// InvariantViolation for a non-cycle.
struct Subquotient {
    AbelianGroupStructure structure;
    std::vector<std::vector<Integer>> generators;
    std::function<std::vector<Integer>(const std::vector<Integer>&)> coordinates;
};

Subquotient subquotient(const std::vector<Integer>& mid, const std::vector<Integer>& out, const SparseIntMatrix& d_out,
                        const SparseIntMatrix& d_in, const Options& opts = {});

/// Some x with d·x ≡ target modulo the relations of `dst`, or nullopt.
std::optional<std::vector<Integer>> solve_presented(const std::vector<Integer>& src, const std::vector<Integer>& dst,
                                                    const SparseIntMatrix& d, const std::vector<Integer>& target,
                                                    const Options& opts = {});

/// Structure of the subgroup of ⊕ Z/d_i (d_i = 0 meaning Z) generated by the given vectors.
AbelianGroupStructure generated_subgroup(const std::vector<Integer>& ambient,
                                         const std::vector<std::vector<Integer>>& gens);

/// Reduce each coordinate into [0, factor) (free coordinates untouched).
void reduce_into(std::vector<Integer>& v, const std::vector<Integer>& factors);

}  // namespace linalg
}  // namespace wittkit
