#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace extsq {

/// Integer partition: weakly decreasing tuple of positive parts, stored
/// without trailing zeros. The empty tuple is the zero partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::uint32_t> parts);
    Partition(std::initializer_list<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::uint32_t weight() const;
    /// i-th part, 0-based; zero past the end.
    std::uint32_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    /// True when every part of the conjugate is even.
    bool conjugate_is_even() const;

    std::string to_string() const;  // "3+1"; "0" for the zero partition

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> parts_;
};

/// All partitions of the given weight with at most max_parts parts, in a
/// fixed order: first part descending, then recursively.
std::vector<Partition> enumerate_partitions(std::uint32_t weight, std::size_t max_parts);

}  // namespace extsq
