#include "extsq/fourier.hpp"

namespace extsq {

std::string FourierIndex::to_string() const {
    std::string out = "k=(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(k[i]);
    }
    return out + ")";
}

Partition lambda_of_index(const FourierIndex& index, IndexConvention convention) {
    const auto& k = index.k;
    std::vector<std::uint32_t> lambda(k.size(), 0);
    std::uint32_t suffix = 0;
    // Suffix sums from the right; the paper_literal convention excludes k_j itself.
    for (std::size_t j = k.size(); j-- > 0;) {
        if (convention == IndexConvention::paper_literal)
            lambda[j] = suffix;
        suffix += k[j];
        if (convention == IndexConvention::inclusive_suffix)
            lambda[j] = suffix;
    }
    return Partition(std::move(lambda));
}

std::uint32_t x_exponent(const FourierIndex& index) {
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < index.k.size(); ++i)
        if ((i + 1) % 2 == 1) total += index.k[i];
    return total;
}

std::uint32_t y_exponent(const FourierIndex& index) {
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < index.k.size(); ++i)
        total += static_cast<std::uint32_t>((i + 1) / 2) * index.k[i];
    return total;
}

}  // namespace extsq
