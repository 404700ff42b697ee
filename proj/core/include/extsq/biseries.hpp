#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extsq/sympoly.hpp"

namespace extsq {

/// Bivariate power series in the markers X, Y with SymPoly coefficients,
/// truncated independently at cap_x and cap_y.
///
/// When the quotient flag is set every stored coefficient is kept in
/// quotient-normal form and products propagate the flag.
class BiSeries {
public:
    BiSeries(std::size_t nvars, std::uint32_t cap_x, std::uint32_t cap_y,
             bool quotient = false);

    static BiSeries one(std::size_t nvars, std::uint32_t cap_x, std::uint32_t cap_y,
                        bool quotient = false);

    std::size_t nvars() const { return nvars_; }
    std::uint32_t cap_x() const { return cap_x_; }
    std::uint32_t cap_y() const { return cap_y_; }
    bool quotient() const { return quotient_; }

    const SymPoly& at(std::uint32_t a, std::uint32_t b) const;
    void set(std::uint32_t a, std::uint32_t b, SymPoly value);
    void add_at(std::uint32_t a, std::uint32_t b, const SymPoly& value);

    bool is_zero() const;

    /// Inverse up to the caps; the constant coefficient must be 1.
    BiSeries inverse() const;

    std::string to_string() const;

    friend BiSeries operator+(const BiSeries& f, const BiSeries& g);
    friend BiSeries operator-(const BiSeries& f, const BiSeries& g);
    /// Truncated convolution product; caps and nvars must match.
    friend BiSeries operator*(const BiSeries& f, const BiSeries& g);

    friend bool operator==(const BiSeries& f, const BiSeries& g) {
        return f.nvars_ == g.nvars_ && f.cap_x_ == g.cap_x_ && f.cap_y_ == g.cap_y_ &&
               f.cells_ == g.cells_;
    }

private:
    std::size_t index(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::size_t>(a) * (cap_y_ + 1) + b;
    }
    void require_compatible(const BiSeries& other) const;

    std::size_t nvars_;
    std::uint32_t cap_x_;
    std::uint32_t cap_y_;
    bool quotient_;
    std::vector<SymPoly> cells_;
};

}  // namespace extsq
