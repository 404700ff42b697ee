#include "extsq/dirichlet.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "extsq/schur.hpp"

namespace extsq {

namespace {

using Clock = std::chrono::steady_clock;

// v^w if it stays <= bound, otherwise nothing.
std::optional<std::uint64_t> pow_within(std::uint64_t v, std::uint32_t w, std::uint64_t bound) {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < w; ++i) {
        if (v != 0 && out > bound / v) return std::nullopt;
        out *= v;
        if (out > bound) return std::nullopt;
    }
    return out;
}

// All integers <= bound supported on the listed primes, ascending.
std::vector<std::uint64_t> smooth_numbers(const std::vector<std::uint64_t>& primes,
                                          std::uint64_t bound) {
    std::vector<std::uint64_t> out{1};
    for (std::uint64_t p : primes) {
        const std::size_t existing = out.size();
        for (std::size_t i = 0; i < existing; ++i) {
            std::uint64_t v = out[i];
            while (v <= bound / p) {
                v *= p;
                out.push_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<bool> sieve(bound + 1, true);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

}  // namespace

std::complex<double> local_coefficient(const FourierIndex& index, std::uint64_t p,
                                       const SatakeData& data, IndexConvention convention) {
    const auto& alphas = data.alphas(p);
    if (index.rank() + 1 != data.n)
        throw std::invalid_argument("local_coefficient: index rank must be n-1");
    SymPoly s = schur(lambda_of_index(index, convention), data.n);
    return s.evaluate(alphas);
}

std::complex<double> global_coefficient(const std::vector<std::uint64_t>& m,
                                        const SatakeData& data, IndexConvention convention) {
    if (m.size() + 1 != data.n)
        throw std::invalid_argument("global_coefficient: tuple length must be n-1");
    for (std::uint64_t v : m)
        if (v == 0) throw std::invalid_argument("global_coefficient: slots must be positive");

    // slotwise p-adic valuations over the listed primes
    std::vector<std::uint64_t> residual = m;
    std::complex<double> product = 1.0;
    for (std::uint64_t p : data.primes()) {
        std::vector<std::uint32_t> k(m.size(), 0);
        bool seen = false;
        for (std::size_t i = 0; i < residual.size(); ++i) {
            while (residual[i] % p == 0) {
                residual[i] /= p;
                ++k[i];
                seen = true;
            }
        }
        if (seen) product *= local_coefficient(FourierIndex(k), p, data, convention);
    }
    for (std::uint64_t v : residual) {
        if (v == 1) continue;
        std::uint64_t q = 2;
        while (v % q != 0) ++q;
        throw std::runtime_error("global_coefficient: missing prime " + std::to_string(q));
    }
    return product;
}

DirichletSlice exterior_square_dirichlet_side(const SatakeData& data, std::uint64_t bound,
                                              IndexConvention convention) {
    DirichletSlice slice;
    slice.bound = bound;
    const std::uint32_t n = data.n;
    const std::size_t even_slots = (n - 1) / 2;
    const std::vector<std::uint64_t> support = smooth_numbers(data.primes(), bound);

    // inner sum over the even-slot tuple (m2, m4, ...) with m2 * m4^2 * ... <= bound
    std::map<std::uint64_t, std::complex<double>> inner;
    std::vector<std::uint64_t> tuple(n >= 2 ? n - 1 : 0, 1);
    auto rec = [&](auto&& self, std::size_t t, std::uint64_t product) -> void {
        if (t == even_slots) {
            inner[product] += global_coefficient(tuple, data, convention);
            return;
        }
        const std::uint32_t weight = static_cast<std::uint32_t>(t + 1);
        for (std::uint64_t v : support) {
            auto powed = pow_within(v, weight, bound / product);
            if (!powed) break;  // support ascending, later v only larger
            tuple[2 * t + 1] = v;
            self(self, t + 1, product * *powed);
        }
        tuple[2 * t + 1] = 1;
    };
    rec(rec, 0, 1);

    if (n % 2 == 1) {
        slice.coeffs = std::move(inner);
    } else {
        // convolve with the local zeta factor: indicator of (n/2)-th powers
        const std::uint32_t power = n / 2;
        for (const auto& [m, value] : inner) {
            for (std::uint64_t t = 1;; ++t) {
                auto q = pow_within(t, power, bound / m);
                if (!q) break;
                slice.coeffs[m * *q] += value;
            }
        }
    }
    return slice;
}

DirichletSlice exterior_square_euler_side(const SatakeData& data, std::uint64_t bound) {
    DirichletSlice slice;
    slice.bound = bound;
    slice.coeffs[1] = 1.0;
    const std::uint32_t n = data.n;

    for (std::uint64_t p : data.primes()) {
        if (p > bound) continue;
        std::uint32_t depth = 0;
        std::uint64_t q = 1;
        while (q <= bound / p) {
            q *= p;
            ++depth;
        }
        // local factor prod_{i<j} (1 - a_i a_j Y)^-1 to Y^depth, numerically
        std::vector<std::complex<double>> local(depth + 1, 0.0);
        local[0] = 1.0;
        const auto& alphas = data.alphas(p);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) {
                const std::complex<double> ratio = alphas[i] * alphas[j];
                std::vector<std::complex<double>> next(depth + 1, 0.0);
                for (std::uint32_t t = 0; t <= depth; ++t) {
                    std::complex<double> r_pow = 1.0;
                    for (std::uint32_t u = t;; --u) {
                        next[t] += local[u] * r_pow;
                        r_pow *= ratio;
                        if (u == 0) break;
                    }
                }
                local = std::move(next);
            }

        // graft the p-power coefficients onto the p-free products built so far
        std::vector<std::pair<std::uint64_t, std::complex<double>>> snapshot(
            slice.coeffs.begin(), slice.coeffs.end());
        for (const auto& [m, value] : snapshot) {
            std::uint64_t mp = m;
            for (std::uint32_t j = 1; j <= depth; ++j) {
                if (mp > bound / p) break;
                mp *= p;
                slice.coeffs[mp] += value * local[j];
            }
        }
    }
    return slice;
}

VerificationReport numeric_verify_theorem1(const SatakeData& data, std::uint64_t bound,
                                           double tol, bool strict,
                                           IndexConvention convention) {
    const auto start = Clock::now();
    if (tol <= 0) throw std::invalid_argument("numeric_verify_theorem1: tol must be positive");
    if (data.n < 2) throw std::invalid_argument("numeric_verify_theorem1: n must be at least 2");
    if (strict) {
        for (std::uint64_t p : primes_up_to(bound))
            if (!data.has_prime(p))
                throw std::runtime_error("numeric_verify_theorem1: missing prime " +
                                         std::to_string(p));
    }

    const DirichletSlice fourier = exterior_square_dirichlet_side(data, bound, convention);
    const DirichletSlice euler = exterior_square_euler_side(data, bound);

    VerificationReport report;
    report.identity = "theorem1-numeric";
    report.params = {{"n", data.n},
                     {"M", static_cast<std::int64_t>(bound)},
                     {"strict", strict ? 1 : 0},
                     {"primes", static_cast<std::int64_t>(data.entries.size())}};
    report.pass = true;
    report.terms_checked = static_cast<std::int64_t>(bound);
    for (std::uint64_t m = 1; m <= bound; ++m) {
        const std::complex<double> d = fourier.at(m);
        const std::complex<double> e = euler.at(m);
        const double scale = std::max({1.0, std::abs(d), std::abs(e)});
        const double rel = std::abs(d - e) / scale;
        if (rel > tol) {
            report.pass = false;
            report.discrepancy = NumericDiscrepancy{m, rel};
            break;
        }
    }
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return report;
}

}  // namespace extsq
