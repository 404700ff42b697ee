#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace extsq {

/// Per-prime numeric Satake parameters. The PGL normalization requires
/// |a1(p)...an(p) - 1| <= satake_product_tolerance at every listed prime.
struct SatakeData {
    std::uint32_t n = 0;
    std::string label;
    std::map<std::uint64_t, std::vector<std::complex<double>>> entries;

    bool has_prime(std::uint64_t p) const { return entries.count(p) != 0; }
    const std::vector<std::complex<double>>& alphas(std::uint64_t p) const;
    std::vector<std::uint64_t> primes() const;
};

inline constexpr double satake_product_tolerance = 1e-9;

/// Throws std::runtime_error naming the offending prime and invariant.
void validate_satake(const SatakeData& data);

/// Reads the JSON format
///   {"n": int, "label": string, "primes": [{"p": int, "alpha": [[re, im], ...]}]}
/// and validates tuple lengths and the unimodular product.
SatakeData load_satake(const std::filesystem::path& path);

void save_satake(const SatakeData& data, const std::filesystem::path& path);

/// Random tuples on the unit circle with product exactly 1 by construction.
SatakeData random_unimodular_satake(std::uint32_t n,
                                    const std::vector<std::uint64_t>& primes,
                                    std::uint64_t seed, std::string label = "random");

}  // namespace extsq
