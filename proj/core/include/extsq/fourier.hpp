#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extsq/partition.hpp"

namespace extsq {

/// Exponent vector (k1,...,k_{n-1}) of a prime-power Fourier coefficient
/// A(p^{k1},...,p^{k_{n-1}}).
struct FourierIndex {
    std::vector<std::uint32_t> k;

    FourierIndex() = default;
    explicit FourierIndex(std::vector<std::uint32_t> k_) : k(std::move(k_)) {}

    /// Number of slots, n-1.
    std::size_t rank() const { return k.size(); }

    std::string to_string() const;  // "k=(1,0,2)"

    friend bool operator==(const FourierIndex&, const FourierIndex&) = default;
};

/// Which suffix sum turns a Fourier index into a partition.
enum class IndexConvention {
    inclusive_suffix,  // lambda_j = sum over i >= j of k_i
    paper_literal,     // lambda_j = sum over i >  j of k_i
};

/// Partition attached to a Fourier index under the given convention.
Partition lambda_of_index(const FourierIndex& index,
                          IndexConvention convention = IndexConvention::inclusive_suffix);

/// Marker exponents of a general index: X picks up k1+k3+k5+..., Y picks up
/// k2+k3+2k4+2k5+... (that is, floor(i/2) per slot i).
std::uint32_t x_exponent(const FourierIndex& index);
std::uint32_t y_exponent(const FourierIndex& index);

}  // namespace extsq
