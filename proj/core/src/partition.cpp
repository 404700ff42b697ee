#include "extsq/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace extsq {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("Partition: interior zero part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<std::uint32_t> parts)
    : Partition(std::vector<std::uint32_t>(parts)) {}

std::uint32_t Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint32_t{0});
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<std::uint32_t> conj(parts_[0]);
    for (std::uint32_t i = 0; i < parts_[0]; ++i) {
        std::uint32_t count = 0;
        for (std::uint32_t part : parts_)
            if (part >= i + 1) ++count;
        conj[i] = count;
    }
    return Partition(std::move(conj));
}

bool Partition::conjugate_is_even() const {
    const Partition conj = conjugate();
    for (std::uint32_t part : conj.parts())
        if (part % 2 != 0) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void enumerate_rec(std::uint32_t remaining, std::uint32_t max_part, std::size_t slots_left,
                   std::vector<std::uint32_t>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    if (slots_left == 0) return;
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        enumerate_rec(remaining - part, part, slots_left - 1, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::uint32_t weight, std::size_t max_parts) {
    std::vector<Partition> out;
    std::vector<std::uint32_t> stack;
    enumerate_rec(weight, weight, max_parts, stack, out);
    return out;
}

}  // namespace extsq
