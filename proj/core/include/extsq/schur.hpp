#pragma once

#include <cstdint>

#include "extsq/partition.hpp"
#include "extsq/sympoly.hpp"

namespace extsq {

/// Complete homogeneous polynomial h_k: sum of all degree-k monomials.
SymPoly homogeneous_h(std::uint32_t k, std::size_t nvars);

/// Elementary polynomial e_k: sum of all squarefree degree-k monomials;
/// zero when k > nvars.
SymPoly elementary_e(std::uint32_t k, std::size_t nvars);

/// Schur polynomial S_lambda via the Jacobi-Trudi determinant
/// det(h_{lambda_i - i + j}), expanded by cofactors with minors memoized.
/// Zero when lambda has more than nvars parts. Not quotient-normalized.
SymPoly schur(const Partition& lambda, std::size_t nvars);

inline constexpr std::uint32_t schur_oracle_max_weight = 12;

/// Independent oracle: sum of content monomials over all semistandard
/// Young tableaux of shape lambda with entries in 1..nvars.
/// Throws when |lambda| exceeds schur_oracle_max_weight.
SymPoly schur_oracle(const Partition& lambda, std::size_t nvars);

}  // namespace extsq
