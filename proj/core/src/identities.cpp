#include "extsq/identities.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "extsq/parallel.hpp"
#include "extsq/schur.hpp"

namespace extsq {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

void require_n(std::uint32_t n, std::uint32_t minimum, const char* who) {
    if (n < minimum)
        throw std::invalid_argument(std::string(who) + ": n must be at least " +
                                    std::to_string(minimum));
}

// All Fourier indices of rank n-1 whose marker exponents respect the caps.
std::vector<FourierIndex> indices_within_caps(std::uint32_t n, std::uint32_t cap_x,
                                              std::uint32_t cap_y) {
    std::vector<FourierIndex> out;
    std::vector<std::uint32_t> k(n - 1, 0);
    // slot weights: X gets 1 on odd slots, Y gets floor(i/2) on slot i
    auto rec = [&](auto&& self, std::size_t slot, std::uint32_t used_x,
                   std::uint32_t used_y) -> void {
        if (slot == k.size()) {
            out.emplace_back(k);
            return;
        }
        const std::uint32_t i = static_cast<std::uint32_t>(slot + 1);
        const std::uint32_t wx = (i % 2 == 1) ? 1 : 0;
        const std::uint32_t wy = i / 2;
        for (std::uint32_t v = 0;; ++v) {
            const std::uint32_t x = used_x + wx * v;
            const std::uint32_t y = used_y + wy * v;
            if (x > cap_x || y > cap_y) break;
            k[slot] = v;
            self(self, slot + 1, x, y);
            if (wx == 0 && wy == 0) break;  // unweighted slot cannot repeat
        }
        k[slot] = 0;
    };
    rec(rec, 0, 0, 0);
    return out;
}

// Accumulates normalized Schur terms of the given indices into a series,
// computing the Schur values in parallel and summing in a fixed order.
BiSeries schur_marker_sum(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                          const std::vector<FourierIndex>& indices,
                          const VerifyOptions& opts) {
    struct Entry {
        std::uint32_t x = 0, y = 0;
        SymPoly value{1};
    };
    std::vector<Entry> entries(indices.size());
    parallel_for(indices.size(), opts.jobs, [&](std::size_t i) {
        const FourierIndex& k = indices[i];
        SymPoly s = schur(lambda_of_index(k, opts.convention), n);
        entries[i] = {x_exponent(k), y_exponent(k),
                      opts.use_quotient ? s.quotient_normalized() : std::move(s)};
    });
    BiSeries sum(n, cap_x, cap_y, opts.use_quotient);
    for (Entry& entry : entries) sum.add_at(entry.x, entry.y, entry.value);
    return sum;
}

struct Comparison {
    bool pass = true;
    std::optional<SymbolicDiscrepancy> first;
    std::int64_t cells = 0;
};

// Coefficientwise comparison in the fixed (X,Y) degree order; optionally
// restricted to cells with a + 2b <= weight_bound.
Comparison compare_series(const BiSeries& lhs, const BiSeries& rhs,
                          std::int64_t weight_bound = -1) {
    Comparison result;
    for (std::uint32_t a = 0; a <= lhs.cap_x(); ++a)
        for (std::uint32_t b = 0; b <= lhs.cap_y(); ++b) {
            if (weight_bound >= 0 && a + 2 * b > static_cast<std::uint32_t>(weight_bound))
                continue;
            ++result.cells;
            SymPoly diff = lhs.at(a, b) - rhs.at(a, b);
            if (!diff.is_zero() && result.pass) {
                result.pass = false;
                result.first = SymbolicDiscrepancy{a, b, std::move(diff)};
            }
        }
    return result;
}

VerificationReport make_report(std::string identity,
                               std::vector<std::pair<std::string, std::int64_t>> params,
                               Comparison comparison, Clock::time_point start) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.params = std::move(params);
    report.pass = comparison.pass;
    if (comparison.first) report.discrepancy = std::move(*comparison.first);
    report.terms_checked = comparison.cells;
    report.elapsed = since(start);
    return report;
}

std::int64_t convention_param(const VerifyOptions& opts) {
    return opts.convention == IndexConvention::paper_literal ? 1 : 0;
}

}  // namespace

BiSeries l0_factor(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y) {
    require_n(n, 2, "l0_factor");
    BiSeries f = BiSeries::one(n, cap_x, cap_y);
    if (n % 2 == 0) {
        const std::uint32_t pow = n / 2;
        if (pow <= cap_y) f.set(0, pow, SymPoly::constant(n, -1));
    } else {
        const std::uint32_t pow = (n - 1) / 2;
        if (1 <= cap_x && pow <= cap_y) f.set(1, pow, SymPoly::constant(n, -1));
    }
    return f;
}

BiSeries euler_factor_x(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                        bool quotient) {
    BiSeries product = BiSeries::one(n, cap_x, cap_y, quotient);
    for (std::size_t i = 0; i < n; ++i) {
        BiSeries factor = BiSeries::one(n, cap_x, cap_y);
        if (cap_x >= 1)
            factor.set(1, 0, SymPoly::from_monomial(Monomial::unit(n, i), -1));
        product = product * factor.inverse();
    }
    return product;
}

BiSeries wedge_factor_y(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                        bool quotient) {
    BiSeries product = BiSeries::one(n, cap_x, cap_y, quotient);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            BiSeries factor = BiSeries::one(n, cap_x, cap_y);
            if (cap_y >= 1) {
                Monomial pair = Monomial::unit(n, i).times(Monomial::unit(n, j));
                factor.set(0, 1, SymPoly::from_monomial(pair, -1));
            }
            product = product * factor.inverse();
        }
    return product;
}

BiSeries bf_sum_side(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                     const VerifyOptions& opts) {
    require_n(n, 2, "bf_sum_side");
    return schur_marker_sum(n, cap_x, cap_y, indices_within_caps(n, cap_x, cap_y), opts);
}

BiSeries bf_product_side(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                         bool quotient) {
    require_n(n, 2, "bf_product_side");
    return l0_factor(n, cap_x, cap_y) * euler_factor_x(n, cap_x, cap_y, quotient) *
           wedge_factor_y(n, cap_x, cap_y, quotient);
}

VerificationReport verify_bf(std::uint32_t n, std::uint32_t cap_x, std::uint32_t cap_y,
                             const VerifyOptions& opts) {
    const auto start = Clock::now();
    BiSeries lhs = bf_sum_side(n, cap_x, cap_y, opts);
    BiSeries rhs = bf_product_side(n, cap_x, cap_y, opts.use_quotient);
    return make_report("bf",
                       {{"n", n},
                        {"capX", cap_x},
                        {"capY", cap_y},
                        {"quotient", opts.use_quotient ? 1 : 0},
                        {"convention_literal", convention_param(opts)}},
                       compare_series(lhs, rhs), start);
}

VerificationReport verify_bf_unconstrained(std::uint32_t n, std::uint32_t max_weight,
                                           const VerifyOptions& opts) {
    require_n(n, 2, "verify_bf_unconstrained");
    const auto start = Clock::now();
    const std::uint32_t cap_x = max_weight;
    const std::uint32_t cap_y = max_weight / 2;

    std::vector<Partition> lambdas;
    for (std::uint32_t w = 0; w <= max_weight; ++w)
        for (Partition& lambda : enumerate_partitions(w, n))
            lambdas.push_back(std::move(lambda));

    std::vector<SymPoly> values(lambdas.size(), SymPoly::one(n));
    parallel_for(lambdas.size(), opts.jobs,
                 [&](std::size_t i) { values[i] = schur(lambdas[i], n); });

    BiSeries lhs(n, cap_x, cap_y, false);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const Partition conj = lambdas[i].conjugate();
        std::uint32_t odd_columns = 0;
        for (std::uint32_t height : conj.parts())
            if (height % 2 == 1) ++odd_columns;
        lhs.add_at(odd_columns, (lambdas[i].weight() - odd_columns) / 2, values[i]);
    }

    BiSeries rhs = euler_factor_x(n, cap_x, cap_y, false) *
                   wedge_factor_y(n, cap_x, cap_y, false);
    return make_report("bf-unconstrained", {{"n", n}, {"maxWeight", max_weight}},
                       compare_series(lhs, rhs, max_weight), start);
}

BiSeries middle_sum(std::uint32_t n, std::uint32_t cap_y, const VerifyOptions& opts) {
    require_n(n, 2, "middle_sum");
    // even slots 2,4,...: n-1 slots total hold (n-1)/2 (odd n) or (n-2)/2
    // (even n) free exponents; odd slots stay zero.
    std::vector<FourierIndex> indices;
    std::vector<std::uint32_t> k(n - 1, 0);
    const std::size_t even_slots = (n - 1) / 2;
    auto rec = [&](auto&& self, std::size_t t, std::uint32_t used_y) -> void {
        if (t == even_slots) {
            indices.emplace_back(k);
            return;
        }
        const std::uint32_t weight = static_cast<std::uint32_t>(t + 1);
        for (std::uint32_t v = 0; used_y + weight * v <= cap_y; ++v) {
            k[2 * t + 1] = v;  // slot index 2(t+1) in 1-based labels
            self(self, t + 1, used_y + weight * v);
        }
        k[2 * t + 1] = 0;
    };
    rec(rec, 0, 0);
    return schur_marker_sum(n, 0, cap_y, indices, opts);
}

BiSeries theorem1_sum_side(std::uint32_t n, std::uint32_t cap_y, const VerifyOptions& opts) {
    require_n(n, 2, "theorem1_sum_side");
    BiSeries sum = middle_sum(n, cap_y, opts);
    if (n % 2 == 0) {
        // local zeta(ns/2): geometric series in Y^{n/2}
        BiSeries zeta(n, 0, cap_y);
        for (std::uint32_t j = 0; j * (n / 2) <= cap_y; ++j)
            zeta.set(0, j * (n / 2), SymPoly::one(n));
        sum = sum * zeta;
    }
    return sum;
}

VerificationReport verify_theorem1(std::uint32_t n, std::uint32_t cap_y,
                                   const VerifyOptions& opts) {
    const auto start = Clock::now();
    BiSeries lhs = theorem1_sum_side(n, cap_y, opts);
    BiSeries rhs = wedge_factor_y(n, 0, cap_y, opts.use_quotient);
    return make_report("theorem1",
                       {{"n", n},
                        {"capY", cap_y},
                        {"quotient", opts.use_quotient ? 1 : 0},
                        {"convention_literal", convention_param(opts)}},
                       compare_series(lhs, rhs), start);
}

namespace {

// Slot layout of the divisor-system sum: position 1 holds gamma_n, even
// positions 2t hold e_t - gamma_t, odd positions 2t+1 hold gamma_t; for odd
// n the trailing gamma is dropped, for even n it is kept.
FourierIndex interleaved_index(std::uint32_t n, std::uint32_t gamma_n,
                               const std::vector<std::uint32_t>& e,
                               const std::vector<std::uint32_t>& gamma) {
    std::vector<std::uint32_t> k(n - 1, 0);
    k[0] = gamma_n;
    const std::size_t s = e.size();
    for (std::size_t t = 0; t < s; ++t) {
        k[2 * t + 1] = e[t] - gamma[t];
        if (2 * t + 2 < k.size()) k[2 * t + 2] = gamma[t];
    }
    return FourierIndex(std::move(k));
}

}  // namespace

VerificationReport verify_hecke(std::uint32_t n, std::uint32_t k,
                                std::vector<std::uint32_t> even_exponents,
                                const VerifyOptions& opts) {
    require_n(n, 3, "verify_hecke");
    const auto start = Clock::now();
    const std::size_t even_slots = (n - 1) / 2;
    if (even_exponents.size() > even_slots)
        throw std::invalid_argument("verify_hecke: more even-slot exponents than slots");
    even_exponents.resize(even_slots, 0);

    std::vector<std::pair<std::string, std::int64_t>> params{{"n", n}, {"k", k}};
    for (std::size_t t = 0; t < even_slots; ++t)
        params.emplace_back("e" + std::to_string(2 * (t + 1)), even_exponents[t]);
    params.emplace_back("convention_literal", convention_param(opts));

    // LHS: A(p^k,1,...,1) * A(1,p^{e2},1,p^{e4},...)
    std::vector<std::uint32_t> row_index(n - 1, 0);
    row_index[0] = k;
    std::vector<std::uint32_t> even_index(n - 1, 0);
    for (std::size_t t = 0; t < even_slots; ++t) even_index[2 * t + 1] = even_exponents[t];
    SymPoly lhs = mul(schur(lambda_of_index(FourierIndex(row_index), opts.convention), n),
                      schur(lambda_of_index(FourierIndex(even_index), opts.convention), n),
                      true);

    // RHS: sum over gamma_2 + gamma_4 + ... + gamma_n = k with gamma_t <= e_t
    SymPoly rhs = SymPoly::zero(n);
    std::int64_t summands = 0;
    std::vector<std::uint32_t> gamma(even_slots, 0);
    auto rec = [&](auto&& self, std::size_t t, std::uint32_t used) -> void {
        if (t == even_slots) {
            const std::uint32_t gamma_n = k - used;
            rhs += schur(
                lambda_of_index(interleaved_index(n, gamma_n, even_exponents, gamma),
                                opts.convention),
                n);
            ++summands;
            return;
        }
        for (std::uint32_t v = 0; v <= std::min(even_exponents[t], k - used); ++v) {
            gamma[t] = v;
            self(self, t + 1, used + v);
        }
        gamma[t] = 0;
    };
    rec(rec, 0, 0);
    rhs = rhs.quotient_normalized();

    Comparison comparison;
    comparison.cells = summands;
    SymPoly diff = lhs - rhs;
    if (!diff.is_zero()) {
        comparison.pass = false;
        comparison.first = SymbolicDiscrepancy{0, 0, std::move(diff)};
    }
    return make_report("hecke", std::move(params), std::move(comparison), start);
}

VerificationReport verify_littlewood(std::uint32_t n, std::uint32_t d,
                                     const VerifyOptions& opts) {
    require_n(n, 2, "verify_littlewood");
    const auto start = Clock::now();

    std::vector<Partition> lambdas;
    for (Partition& lambda : enumerate_partitions(2 * d, n))
        if (lambda.conjugate_is_even()) lambdas.push_back(std::move(lambda));

    std::vector<SymPoly> values(lambdas.size(), SymPoly::one(n));
    parallel_for(lambdas.size(), opts.jobs,
                 [&](std::size_t i) { values[i] = schur(lambdas[i], n); });
    SymPoly lhs = SymPoly::zero(n);
    for (const SymPoly& value : values) lhs += value;

    SymPoly rhs = wedge_factor_y(n, 0, d, false).at(0, d);

    Comparison comparison;
    comparison.cells = static_cast<std::int64_t>(lambdas.size());
    SymPoly diff = lhs - rhs;
    if (!diff.is_zero()) {
        comparison.pass = false;
        comparison.first = SymbolicDiscrepancy{0, d, std::move(diff)};
    }
    return make_report("littlewood", {{"n", n}, {"d", d}}, std::move(comparison), start);
}

VerificationReport verify_reindexing(std::uint32_t n, std::uint32_t cap_x,
                                     std::uint32_t cap_y, const VerifyOptions& opts) {
    require_n(n, 3, "verify_reindexing");
    const auto start = Clock::now();

    // Local standard L-series as a sum of row Schur values.
    std::vector<FourierIndex> row_indices;
    for (std::uint32_t k = 0; k <= cap_x; ++k) {
        std::vector<std::uint32_t> index(n - 1, 0);
        index[0] = k;
        row_indices.emplace_back(std::move(index));
    }
    BiSeries l_series = schur_marker_sum(n, cap_x, cap_y, row_indices, opts);

    // middle_sum lives on a (0, capY) grid; pad it onto the working grid
    BiSeries middle = middle_sum(n, cap_y, opts);
    BiSeries middle_padded(n, cap_x, cap_y, opts.use_quotient);
    for (std::uint32_t b = 0; b <= cap_y; ++b) middle_padded.set(0, b, middle.at(0, b));

    BiSeries zcal = l_series * middle_padded;

    BiSeries frak = bf_sum_side(n, cap_x, cap_y, opts);
    BiSeries expected = frak;
    if (n % 2 == 1) {
        // extra divisor sum: geometric factor in X*Y^{(n-1)/2}
        BiSeries geometric(n, cap_x, cap_y);
        const std::uint32_t wy = (n - 1) / 2;
        for (std::uint32_t j = 0; j <= cap_x && j * wy <= cap_y; ++j)
            geometric.set(j, j * wy, SymPoly::one(n));
        expected = geometric * frak;
    }

    return make_report("hecke-reindexing",
                       {{"n", n},
                        {"capX", cap_x},
                        {"capY", cap_y},
                        {"convention_literal", convention_param(opts)}},
                       compare_series(zcal, expected), start);
}

}  // namespace extsq
