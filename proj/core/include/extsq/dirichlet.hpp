#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "extsq/fourier.hpp"
#include "extsq/report.hpp"
#include "extsq/satake.hpp"

namespace extsq {

/// Dirichlet coefficient list a(m) for m <= bound. For an L-series slice
/// a(1) = 1.
struct DirichletSlice {
    std::uint64_t bound = 0;
    std::map<std::uint64_t, std::complex<double>> coeffs;

    std::complex<double> at(std::uint64_t m) const {
        auto it = coeffs.find(m);
        return it == coeffs.end() ? std::complex<double>(0.0) : it->second;
    }
};

/// A(p^{k1},...,p^{k_{n-1}}): the Schur value at the numeric Satake tuple.
std::complex<double> local_coefficient(
    const FourierIndex& index, std::uint64_t p, const SatakeData& data,
    IndexConvention convention = IndexConvention::inclusive_suffix);

/// A(m1,...,m_{n-1}) assembled multiplicatively from local coefficients.
/// Every prime dividing any slot must be listed in the data.
std::complex<double> global_coefficient(
    const std::vector<std::uint64_t>& m, const SatakeData& data,
    IndexConvention convention = IndexConvention::inclusive_suffix);

/// Exterior-square coefficients from the Fourier side of the factorization
/// theorem: for odd n the sum over A(1,m2,1,m4,...) with m2*m4^2*... = m;
/// for even n additionally convolved with the indicator of (n/2)-th powers.
/// Runs over integers supported on the listed primes.
DirichletSlice exterior_square_dirichlet_side(
    const SatakeData& data, std::uint64_t bound,
    IndexConvention convention = IndexConvention::inclusive_suffix);

/// Exterior-square coefficients by direct expansion of the Euler product
/// prod_p prod_{i<j} (1 - a_i a_j p^-s)^-1 over the listed primes.
DirichletSlice exterior_square_euler_side(const SatakeData& data, std::uint64_t bound);

/// Compares the two slices above coefficientwise up to `bound`.
/// strict additionally requires every prime <= bound to be listed.
/// Fails (report, not error) when the max relative error exceeds tol.
/// Identity "theorem1-numeric".
VerificationReport numeric_verify_theorem1(
    const SatakeData& data, std::uint64_t bound, double tol, bool strict = true,
    IndexConvention convention = IndexConvention::inclusive_suffix);

}  // namespace extsq
