#pragma once

#include <cstdint>
#include <vector>

#include "extsq/biseries.hpp"
#include "extsq/fourier.hpp"
#include "extsq/report.hpp"

namespace extsq {

struct VerifyOptions {
    IndexConvention convention = IndexConvention::inclusive_suffix;
    bool use_quotient = true;  // PGL normalization a1...an = 1
    unsigned jobs = 1;
};

/// Correction factor L0: 1 - Y^{n/2} for even n, 1 - X*Y^{(n-1)/2} for odd n.
BiSeries l0_factor(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y);

/// prod_i (1 - a_i X)^-1 up to the caps.
BiSeries euler_factor_x(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                        bool quotient);

/// prod_{i<j} (1 - a_i a_j Y)^-1 up to the caps.
BiSeries wedge_factor_y(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                        bool quotient);

/// Sum over Fourier indices k of S_{lambda(k)} X^{k1+k3+...} Y^{k2+k3+2k4+...},
/// truncated at the caps.
BiSeries bf_sum_side(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                     const VerifyOptions& opts = {});

/// L0 * prod_i (1 - a_i X)^-1 * prod_{i<j} (1 - a_i a_j Y)^-1.
BiSeries bf_product_side(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                         bool quotient = true);

/// Coefficientwise comparison of the two sides above. Identity "bf".
VerificationReport verify_bf(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                             const VerifyOptions& opts = {});

/// Underlying symmetric-function identity with the full n-part index set,
/// no L0 and no quotient: sum over all partitions lambda with at most n
/// parts and |lambda| <= max_weight of S_lambda X^{o(lambda)} Y^{(|lambda|-o)/2},
/// where o counts odd-height columns, against the two Euler factors.
/// Identity "bf-unconstrained".
VerificationReport verify_bf_unconstrained(std::uint32_t n, std::uint32_t max_weight,
                                           const VerifyOptions& opts = {});

/// Exterior-square sum side of the factorization theorem: for odd n the sum
/// over (k2,k4,...,k_{n-1}); for even n the analogous sum over
/// (k2,...,k_{n-2}) times (1 - Y^{n/2})^-1, the local zeta(ns/2) factor.
BiSeries theorem1_sum_side(std::uint32_t n, std::uint32_t cap_y,
                           const VerifyOptions& opts = {});

/// theorem1_sum_side without the zeta factor (identical for odd n).
BiSeries middle_sum(std::uint32_t n, std::uint32_t cap_y, const VerifyOptions& opts = {});

/// Compares theorem1_sum_side against prod_{i<j} (1 - a_i a_j Y)^-1.
/// Identity "theorem1".
VerificationReport verify_theorem1(std::uint32_t n, std::uint32_t cap_y,
                                   const VerifyOptions& opts = {});

/// Hecke relation at a prime: S at (k,0,...,0) times S at the even-slot
/// index against the divisor-system sum, modulo the quotient.
/// even_exponents lists (e2, e4, ...); shorter vectors are zero-padded.
/// Identity "hecke".
VerificationReport verify_hecke(std::uint32_t n, std::uint32_t k,
                                std::vector<std::uint32_t> even_exponents,
                                const VerifyOptions& opts = {});

/// Y^d coefficient of prod_{i<j} (1 - a_i a_j Y)^-1 against the sum of
/// S_lambda over partitions of 2d with even conjugate. Identity "littlewood".
VerificationReport verify_littlewood(std::uint32_t n, std::uint32_t d,
                                     const VerifyOptions& opts = {});

/// Bookkeeping check behind the Hecke-relation proof: the product of the
/// local standard L-series and the exterior-square sum equals the full
/// Fourier double sum, up to an extra geometric factor for odd n.
/// Identity "hecke-reindexing".
VerificationReport verify_reindexing(std::uint32_t n, std::uint32_t cap_x,
                                     std::uint32_t cap_y, const VerifyOptions& opts = {});

}  // namespace extsq
