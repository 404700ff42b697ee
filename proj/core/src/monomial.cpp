#include "extsq/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace extsq {

namespace {

void check_nvars(std::size_t nvars) {
    if (nvars < 1 || nvars > Monomial::max_vars)
        throw std::invalid_argument("Monomial: variable count must be in 1.." +
                                    std::to_string(Monomial::max_vars));
}

// Byte position of variable `var`: a1 occupies the most significant used byte.
int shift_of(std::size_t nvars, std::size_t var) {
    return static_cast<int>(8 * (nvars - 1 - var));
}

// High bit of every used byte; set bits after an addition mean some
// exponent passed max_exponent.
Monomial::Key guard_mask(std::size_t nvars) {
    Monomial::Key mask = 0;
    for (std::size_t i = 0; i < nvars; ++i)
        mask |= static_cast<Monomial::Key>(0x80) << shift_of(nvars, i);
    return mask;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(nvars) { check_nvars(nvars); }

Monomial::Monomial(std::size_t nvars, std::initializer_list<std::uint32_t> exponents)
    : Monomial(nvars, std::vector<std::uint32_t>(exponents)) {}

Monomial::Monomial(std::size_t nvars, const std::vector<std::uint32_t>& exponents)
    : nvars_(nvars) {
    check_nvars(nvars);
    if (exponents.size() != nvars)
        throw std::invalid_argument("Monomial: exponent tuple length must equal nvars");
    for (std::size_t i = 0; i < nvars; ++i) {
        if (exponents[i] > max_exponent)
            throw std::overflow_error("Monomial: exponent exceeds " +
                                      std::to_string(max_exponent));
        key_ |= static_cast<Key>(exponents[i]) << shift_of(nvars, i);
    }
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, std::uint32_t exp) {
    check_nvars(nvars);
    if (var >= nvars) throw std::invalid_argument("Monomial::unit: variable out of range");
    if (exp > max_exponent)
        throw std::overflow_error("Monomial: exponent exceeds " + std::to_string(max_exponent));
    Monomial m(nvars);
    m.key_ = static_cast<Key>(exp) << shift_of(nvars, var);
    return m;
}

Monomial Monomial::from_key(std::size_t nvars, Key key) {
    check_nvars(nvars);
    Monomial m(nvars);
    m.key_ = key;
    return m;
}

std::uint32_t Monomial::exponent(std::size_t var) const {
    if (var >= nvars_) throw std::invalid_argument("Monomial::exponent: variable out of range");
    return static_cast<std::uint32_t>((key_ >> shift_of(nvars_, var)) & 0xFF);
}

std::vector<std::uint32_t> Monomial::exponents() const {
    std::vector<std::uint32_t> out(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) out[i] = exponent(i);
    return out;
}

std::uint32_t Monomial::degree() const {
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < nvars_; ++i) total += exponent(i);
    return total;
}

std::uint32_t Monomial::min_exponent() const {
    std::uint32_t m = exponent(0);
    for (std::size_t i = 1; i < nvars_ && m > 0; ++i) m = std::min(m, exponent(i));
    return m;
}

Monomial::Key Monomial::ones_mask(std::size_t nvars) {
    Key mask = 0;
    for (std::size_t i = 0; i < nvars; ++i) mask |= static_cast<Key>(1) << shift_of(nvars, i);
    return mask;
}

Monomial::Key Monomial::checked_key_product(Key a, Key b, std::size_t nvars) {
    Key sum = a + b;
    if (sum & guard_mask(nvars))
        throw std::overflow_error("Monomial: exponent exceeds " + std::to_string(max_exponent) +
                                  " in a product");
    return sum;
}

Monomial Monomial::times(const Monomial& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("Monomial::times: mismatched variable counts");
    Monomial out(nvars_);
    out.key_ = checked_key_product(key_, other.key_, nvars_);
    return out;
}

Monomial Monomial::normalized() const {
    std::uint32_t m = min_exponent();
    if (m == 0) return *this;
    Monomial out(nvars_);
    out.key_ = key_ - static_cast<Key>(m) * ones_mask(nvars_);
    return out;
}

std::string Monomial::to_string() const {
    if (is_constant()) return "1";
    std::string out;
    for (std::size_t i = 0; i < nvars_; ++i) {
        std::uint32_t e = exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'a' + std::to_string(i + 1);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

}  // namespace extsq
