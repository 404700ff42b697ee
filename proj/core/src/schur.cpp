#include "extsq/schur.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace extsq {

namespace {

// Emits all degree-k exponent tuples in ascending lexicographic order.
void fill_homogeneous(std::size_t var, std::uint32_t remaining, std::size_t nvars,
                      Monomial::Key prefix,
                      std::vector<std::pair<Monomial::Key, mpz_class>>& out) {
    if (var + 1 == nvars) {
        Monomial::Key key = prefix | static_cast<Monomial::Key>(remaining);
        out.emplace_back(key, 1);
        return;
    }
    int shift = static_cast<int>(8 * (nvars - 1 - var));
    for (std::uint32_t e = 0; e <= remaining; ++e)
        fill_homogeneous(var + 1, remaining - e, nvars,
                         prefix | (static_cast<Monomial::Key>(e) << shift), out);
}

void fill_elementary(std::size_t var, std::uint32_t remaining, std::size_t nvars,
                     Monomial::Key prefix,
                     std::vector<std::pair<Monomial::Key, mpz_class>>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix, 1);
        return;
    }
    if (nvars - var < remaining) return;
    int shift = static_cast<int>(8 * (nvars - 1 - var));
    // skip this variable, or include it with exponent 1
    fill_elementary(var + 1, remaining, nvars, prefix, out);
    fill_elementary(var + 1, remaining - 1, nvars,
                    prefix | (static_cast<Monomial::Key>(1) << shift), out);
}

// Shared append-only cache; std::map nodes give stable references.
class HCache {
public:
    const SymPoly& get(std::uint32_t k, std::size_t nvars) {
        if (k > Monomial::max_exponent)
            throw std::overflow_error("homogeneous_h: degree exceeds the exponent limit " +
                                      std::to_string(Monomial::max_exponent));
        const auto key = std::make_pair(nvars, k);
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        SymPoly value = compute(k, nvars);
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(key, std::move(value)).first->second;
    }

private:
    static SymPoly compute(std::uint32_t k, std::size_t nvars) {
        std::vector<std::pair<Monomial::Key, mpz_class>> raw;
        fill_homogeneous(0, k, nvars, 0, raw);
        return SymPoly::from_raw_terms(nvars, std::move(raw));
    }

    std::shared_mutex mutex_;
    std::map<std::pair<std::size_t, std::uint32_t>, SymPoly> cache_;
};

HCache& h_cache() {
    static HCache cache;
    return cache;
}

class SchurCache {
public:
    const SymPoly& get(const Partition& lambda, std::size_t nvars) {
        const auto key = std::make_pair(nvars, lambda.parts());
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        SymPoly value = jacobi_trudi(lambda, nvars);
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(key, std::move(value)).first->second;
    }

private:
    // det(h_{lambda_i - i + j})_{1<=i,j<=l} by cofactor expansion along the
    // first remaining row, minors memoized by column mask.
    static SymPoly jacobi_trudi(const Partition& lambda, std::size_t nvars) {
        const std::size_t len = lambda.length();
        const std::uint32_t full_mask = (1u << len) - 1;
        std::vector<SymPoly> memo(full_mask + 1, SymPoly::zero(nvars));
        std::vector<bool> known(full_mask + 1, false);
        memo[0] = SymPoly::one(nvars);
        known[0] = true;
        return minor_det(lambda, nvars, full_mask, memo, known);
    }

    static const SymPoly& minor_det(const Partition& lambda, std::size_t nvars,
                                    std::uint32_t mask, std::vector<SymPoly>& memo,
                                    std::vector<bool>& known) {
        if (known[mask]) return memo[mask];
        const std::size_t len = lambda.length();
        const std::size_t row = len - static_cast<std::size_t>(__builtin_popcount(mask));
        SymPoly det = SymPoly::zero(nvars);
        int position = 0;
        for (std::size_t col = 0; col < len; ++col) {
            if (!(mask & (1u << col))) continue;
            // entry index lambda_row - row + col in 0-based rows/columns
            std::int64_t h_index = static_cast<std::int64_t>(lambda.part(row)) -
                                   static_cast<std::int64_t>(row) +
                                   static_cast<std::int64_t>(col);
            if (h_index >= 0) {
                const SymPoly& entry = h_cache().get(static_cast<std::uint32_t>(h_index), nvars);
                const SymPoly& sub = minor_det(lambda, nvars, mask & ~(1u << col), memo, known);
                SymPoly term = entry * sub;
                if (position % 2 == 0)
                    det += term;
                else
                    det -= term;
            }
            ++position;
        }
        memo[mask] = std::move(det);
        known[mask] = true;
        return memo[mask];
    }

    std::shared_mutex mutex_;
    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, SymPoly> cache_;
};

SchurCache& schur_cache() {
    static SchurCache cache;
    return cache;
}

// Row-major semistandard fill: rows weakly increase, columns strictly increase.
void fill_tableaux(const std::vector<std::uint32_t>& shape, std::size_t nvars,
                   std::vector<std::vector<std::uint32_t>>& entries, std::size_t row,
                   std::size_t col, Monomial::Key content,
                   std::vector<std::pair<Monomial::Key, mpz_class>>& out) {
    if (row == shape.size()) {
        out.emplace_back(content, 1);
        return;
    }
    if (col == shape[row]) {
        fill_tableaux(shape, nvars, entries, row + 1, 0, content, out);
        return;
    }
    std::uint32_t lo = 1;
    if (col > 0) lo = std::max(lo, entries[row][col - 1]);
    if (row > 0) lo = std::max(lo, entries[row - 1][col] + 1);
    for (std::uint32_t v = lo; v <= nvars; ++v) {
        entries[row][col] = v;
        Monomial::Key bumped =
            content + (static_cast<Monomial::Key>(1) << (8 * (nvars - v)));
        fill_tableaux(shape, nvars, entries, row, col + 1, bumped, out);
    }
}

}  // namespace

SymPoly homogeneous_h(std::uint32_t k, std::size_t nvars) {
    return h_cache().get(k, nvars);
}

SymPoly elementary_e(std::uint32_t k, std::size_t nvars) {
    if (k > nvars) return SymPoly::zero(nvars);
    std::vector<std::pair<Monomial::Key, mpz_class>> raw;
    fill_elementary(0, k, nvars, 0, raw);
    return SymPoly::from_raw_terms(nvars, std::move(raw));
}

SymPoly schur(const Partition& lambda, std::size_t nvars) {
    if (lambda.length() > nvars) return SymPoly::zero(nvars);
    if (lambda.empty()) return SymPoly::one(nvars);
    return schur_cache().get(lambda, nvars);
}

SymPoly schur_oracle(const Partition& lambda, std::size_t nvars) {
    if (lambda.weight() > schur_oracle_max_weight)
        throw std::invalid_argument("schur_oracle: weight above the enumeration guard " +
                                    std::to_string(schur_oracle_max_weight));
    if (lambda.empty()) return SymPoly::one(nvars);
    if (lambda.length() > nvars) return SymPoly::zero(nvars);
    std::vector<std::vector<std::uint32_t>> entries;
    for (std::uint32_t part : lambda.parts()) entries.emplace_back(part, 0);
    std::vector<std::pair<Monomial::Key, mpz_class>> raw;
    fill_tableaux(lambda.parts(), nvars, entries, 0, 0, 0, raw);
    return SymPoly::from_raw_terms(nvars, std::move(raw));
}

}  // namespace extsq
