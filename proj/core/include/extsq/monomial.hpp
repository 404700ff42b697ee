#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace extsq {

/// Power product a1^e1 * ... * an^en in the Satake variables.
///
/// Exponents are packed one byte per variable into a 128-bit key with a1
/// in the most significant used byte, so unsigned comparison of keys is
/// lexicographic comparison of exponent tuples. Multiplication is a plain
/// key addition; a guard rejects per-variable exponents above 127.
class Monomial {
public:
    using Key = unsigned __int128;

    static constexpr std::size_t max_vars = 16;
    static constexpr std::uint32_t max_exponent = 127;

    explicit Monomial(std::size_t nvars);
    Monomial(std::size_t nvars, std::initializer_list<std::uint32_t> exponents);
    Monomial(std::size_t nvars, const std::vector<std::uint32_t>& exponents);

    /// a_{var+1} raised to exp, all other exponents zero.
    static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t exp = 1);
    static Monomial from_key(std::size_t nvars, Key key);

    std::size_t nvars() const { return nvars_; }
    std::uint32_t exponent(std::size_t var) const;
    std::vector<std::uint32_t> exponents() const;
    std::uint32_t degree() const;
    std::uint32_t min_exponent() const;

    bool is_constant() const { return key_ == 0; }
    bool is_normal() const { return min_exponent() == 0; }

    /// Exponentwise sum; throws std::overflow_error past max_exponent.
    Monomial times(const Monomial& other) const;
    /// Quotient-normal representative: divide by (a1...an)^min_exponent.
    Monomial normalized() const;

    Key key() const { return key_; }

    std::string to_string() const;  // "a1^2*a3"; "1" for the constant

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.nvars_ == b.nvars_ && a.key_ == b.key_;
    }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (a.nvars_ != b.nvars_) return a.nvars_ <=> b.nvars_;
        if (a.key_ < b.key_) return std::strong_ordering::less;
        if (a.key_ > b.key_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Packed key of the product of two same-width keys, with the overflow guard.
    static Key checked_key_product(Key a, Key b, std::size_t nvars);
    static Key ones_mask(std::size_t nvars);  // exponent 1 on every variable

private:
    Key key_ = 0;
    std::size_t nvars_ = 0;
};

}  // namespace extsq
