#pragma once

#include "wittkit/numfield.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wittkit::detail {

/// Irreducibility certificate for a monic rational polynomial, or nullopt when
/// neither the rational-root test (degree <= 3) nor the factor-degree patterns
/// modulo the first 100 primes rule out a proper factor.
std::optional<IrreducibilityProof> prove_irreducible(const Polynomial& f);

/// Degrees of the irreducible factors of f modulo p (distinct-degree
/// factorization); nullopt when p divides the leading coefficient or f is not
/// squarefree modulo p.
std::optional<std::vector<int>> factor_degrees_mod_p(const std::vector<Integer>& f, std::int64_t p);

bool has_rational_root(const Polynomial& f);

}  // namespace wittkit::detail
