#include "extsq/biseries.hpp"

#include <stdexcept>
#include <utility>

namespace extsq {

BiSeries::BiSeries(std::size_t nvars, std::uint32_t cap_x, std::uint32_t cap_y, bool quotient)
    : nvars_(nvars),
      cap_x_(cap_x),
      cap_y_(cap_y),
      quotient_(quotient),
      cells_(static_cast<std::size_t>(cap_x + 1) * (cap_y + 1), SymPoly::zero(nvars)) {}

BiSeries BiSeries::one(std::size_t nvars, std::uint32_t cap_x, std::uint32_t cap_y,
                       bool quotient) {
    BiSeries f(nvars, cap_x, cap_y, quotient);
    f.cells_[0] = SymPoly::one(nvars);
    return f;
}

const SymPoly& BiSeries::at(std::uint32_t a, std::uint32_t b) const {
    if (a > cap_x_ || b > cap_y_)
        throw std::out_of_range("BiSeries::at: degree beyond the caps");
    return cells_[index(a, b)];
}

void BiSeries::set(std::uint32_t a, std::uint32_t b, SymPoly value) {
    if (a > cap_x_ || b > cap_y_)
        throw std::out_of_range("BiSeries::set: degree beyond the caps");
    if (value.nvars() != nvars_)
        throw std::invalid_argument("BiSeries::set: mismatched variable counts");
    cells_[index(a, b)] = quotient_ ? value.quotient_normalized() : std::move(value);
}

void BiSeries::add_at(std::uint32_t a, std::uint32_t b, const SymPoly& value) {
    if (a > cap_x_ || b > cap_y_)
        throw std::out_of_range("BiSeries::add_at: degree beyond the caps");
    SymPoly sum = cells_[index(a, b)] + value;
    cells_[index(a, b)] = quotient_ ? sum.quotient_normalized() : std::move(sum);
}

bool BiSeries::is_zero() const {
    for (const SymPoly& cell : cells_)
        if (!cell.is_zero()) return false;
    return true;
}

void BiSeries::require_compatible(const BiSeries& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("BiSeries: mismatched variable counts");
    if (cap_x_ != other.cap_x_ || cap_y_ != other.cap_y_)
        throw std::invalid_argument("BiSeries: mismatched truncation caps");
}

BiSeries operator+(const BiSeries& f, const BiSeries& g) {
    f.require_compatible(g);
    BiSeries out(f.nvars_, f.cap_x_, f.cap_y_, f.quotient_ || g.quotient_);
    for (std::size_t i = 0; i < out.cells_.size(); ++i) {
        SymPoly sum = f.cells_[i] + g.cells_[i];
        out.cells_[i] = out.quotient_ ? sum.quotient_normalized() : std::move(sum);
    }
    return out;
}

BiSeries operator-(const BiSeries& f, const BiSeries& g) {
    f.require_compatible(g);
    BiSeries out(f.nvars_, f.cap_x_, f.cap_y_, f.quotient_ || g.quotient_);
    for (std::size_t i = 0; i < out.cells_.size(); ++i) {
        SymPoly diff = f.cells_[i] - g.cells_[i];
        out.cells_[i] = out.quotient_ ? diff.quotient_normalized() : std::move(diff);
    }
    return out;
}

BiSeries operator*(const BiSeries& f, const BiSeries& g) {
    f.require_compatible(g);
    const bool quotient = f.quotient_ || g.quotient_;
    BiSeries out(f.nvars_, f.cap_x_, f.cap_y_, false);
    for (std::uint32_t a1 = 0; a1 <= f.cap_x_; ++a1)
        for (std::uint32_t b1 = 0; b1 <= f.cap_y_; ++b1) {
            const SymPoly& left = f.cells_[f.index(a1, b1)];
            if (left.is_zero()) continue;
            for (std::uint32_t a2 = 0; a1 + a2 <= f.cap_x_; ++a2)
                for (std::uint32_t b2 = 0; b1 + b2 <= f.cap_y_; ++b2) {
                    const SymPoly& right = g.cells_[g.index(a2, b2)];
                    if (right.is_zero()) continue;
                    out.cells_[out.index(a1 + a2, b1 + b2)] += left * right;
                }
        }
    out.quotient_ = quotient;
    if (quotient)
        for (SymPoly& cell : out.cells_) cell = cell.quotient_normalized();
    return out;
}

BiSeries BiSeries::inverse() const {
    if (!cells_[0].is_one())
        throw std::invalid_argument("BiSeries::inverse: constant coefficient must be 1");
    BiSeries out(nvars_, cap_x_, cap_y_, false);
    out.cells_[0] = SymPoly::one(nvars_);
    // degreewise recursion: g_{a,b} = -sum_{(c,d) <= (a,b), (c,d) != 0} f_{c,d} g_{a-c,b-d}
    for (std::uint32_t s = 1; s <= cap_x_ + cap_y_; ++s)
        for (std::uint32_t a = 0; a <= std::min(s, cap_x_); ++a) {
            if (s - a > cap_y_) continue;
            std::uint32_t b = s - a;
            SymPoly acc = SymPoly::zero(nvars_);
            for (std::uint32_t c = 0; c <= a; ++c)
                for (std::uint32_t d = 0; d <= b; ++d) {
                    if (c == 0 && d == 0) continue;
                    const SymPoly& fc = cells_[index(c, d)];
                    if (fc.is_zero()) continue;
                    acc += fc * out.cells_[out.index(a - c, b - d)];
                }
            out.cells_[out.index(a, b)] = -acc;
        }
    out.quotient_ = quotient_;
    if (quotient_)
        for (SymPoly& cell : out.cells_) cell = cell.quotient_normalized();
    return out;
}

std::string BiSeries::to_string() const {
    std::string out;
    for (std::uint32_t a = 0; a <= cap_x_; ++a)
        for (std::uint32_t b = 0; b <= cap_y_; ++b) {
            const SymPoly& cell = cells_[index(a, b)];
            if (cell.is_zero()) continue;
            if (!out.empty()) out += '\n';
            out += "X^" + std::to_string(a) + "*Y^" + std::to_string(b) + ": " +
                   cell.to_string();
        }
    return out.empty() ? "0" : out;
}

}  // namespace extsq
