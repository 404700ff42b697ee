// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "extsq/dirichlet.hpp"
#include "extsq/identities.hpp"
#include "extsq/parallel.hpp"
#include "extsq/partition.hpp"
#include "extsq/satake.hpp"
#include "extsq/schur.hpp"

using namespace extsq;

namespace {

int failures = 0;

void outcome(bool pass, const std::string& label) {
    std::cout << (pass ? "PASS  " : "FAIL  ") << label << std::endl;
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VerifyOptions options() {
    VerifyOptions opts;
    opts.jobs = resolve_jobs(0);
    return opts;
}

void criterion_bf_constrained() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    for (std::uint32_t n = 2; n <= 6; ++n) pass = pass && verify_bf(n, 4, 4, options()).pass;
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 60.0;
    outcome(pass, "bf identity, constrained: n in {2..6}, capX=capY=4, zero difference (" +
                      std::to_string(elapsed) + "s < 60s)");
}

void criterion_bf_unconstrained() {
    bool pass = true;
    for (std::uint32_t n = 2; n <= 5; ++n)
        pass = pass && verify_bf_unconstrained(n, 8, options()).pass;
    outcome(pass, "bf identity, unconstrained: n in {2..5}, all |lambda| <= 8");
}

void criterion_theorem1() {
    bool pass = true;
    for (std::uint32_t n = 2; n <= 6; ++n) pass = pass && verify_theorem1(n, 5, options()).pass;

    // GL(2): every wedge coefficient collapses to 1, the local zeta factor
    BiSeries gl2 = wedge_factor_y(2, 0, 5, true);
    for (std::uint32_t b = 0; b <= 5; ++b) pass = pass && gl2.at(0, b).is_one();

    // GL(3): Y^k coefficient is the dual-form coefficient A(1,p^k) = S_(k,k)
    BiSeries gl3 = wedge_factor_y(3, 0, 5, true);
    for (std::uint32_t k = 0; k <= 5; ++k) {
        Partition dual = k == 0 ? Partition{} : Partition{k, k};
        pass = pass && (gl3.at(0, k) == schur(dual, 3).quotient_normalized());
    }

    // GL(4): the zeta(2s) factor is doing real work: the middle sum alone fails
    BiSeries gl4 = wedge_factor_y(4, 0, 5, true);
    BiSeries middle = middle_sum(4, 5, options());
    pass = pass && (middle.at(0, 2) != gl4.at(0, 2));
    pass = pass && (theorem1_sum_side(4, 5, options()).at(0, 2) == gl4.at(0, 2));

    outcome(pass,
            "theorem1 per prime: n in {2..6}, capY=5; GL(2) zeta, GL(3) dual form, "
            "GL(4) zeta times middle");
}

void criterion_hecke() {
    bool pass = true;
    int cases = 0;
    std::int64_t summands = 0;
    for (std::uint32_t n : {3u, 4u, 5u}) {
        const std::size_t slots = (n - 1) / 2;
        std::vector<std::vector<std::uint32_t>> evecs;
        std::vector<std::uint32_t> e(slots, 0);
        auto enumerate = [&](auto&& self, std::size_t t) -> void {
            if (t == slots) {
                evecs.push_back(e);
                return;
            }
            for (std::uint32_t v = 0; v <= 2; ++v) {
                e[t] = v;
                self(self, t + 1);
            }
            e[t] = 0;
        };
        enumerate(enumerate, 0);
        for (std::uint32_t k = 0; k <= 2; ++k)
            for (const auto& evec : evecs) {
                VerificationReport report = verify_hecke(n, k, evec, options());
                pass = pass && report.pass;
                ++cases;
                summands += report.terms_checked;
            }
    }
    outcome(pass, "hecke relations: n in {3,4,5}, k <= 2, even-slot exponents <= 2 (" +
                      std::to_string(cases) + " cases, " + std::to_string(summands) +
                      " divisor terms, exact modulo the quotient)");
}

void criterion_littlewood() {
    bool pass = true;
    for (std::uint32_t n = 2; n <= 6; ++n)
        for (std::uint32_t d = 0; d <= 5; ++d)
            pass = pass && verify_littlewood(n, d, options()).pass;
    outcome(pass, "littlewood identity: n <= 6, d <= 5 (even-conjugate partitions up to weight 10)");
}

void criterion_oracle_equivalence() {
    std::vector<std::pair<Partition, std::size_t>> jobs;
    for (std::uint32_t w = 0; w <= 6; ++w)
        for (const Partition& lambda : enumerate_partitions(w, w))
            for (std::size_t n = 1; n <= 5; ++n) jobs.emplace_back(lambda, n);
    std::vector<char> ok(jobs.size(), 0);
    parallel_for(jobs.size(), resolve_jobs(0), [&](std::size_t i) {
        ok[i] = schur(jobs[i].first, jobs[i].second) ==
                schur_oracle(jobs[i].first, jobs[i].second);
    });
    int mismatches = 0;
    for (char flag : ok)
        if (!flag) ++mismatches;
    outcome(mismatches == 0, "oracle equivalence: Jacobi-Trudi vs tableau sum, |lambda| <= 6, "
                             "n <= 5 (" +
                                 std::to_string(jobs.size()) + " pairs, " +
                                 std::to_string(mismatches) + " mismatches)");
}

void criterion_negative_controls() {
    VerifyOptions no_quotient = options();
    no_quotient.use_quotient = false;
    VerificationReport symbolic = verify_bf(2, 4, 4, no_quotient);
    bool symbolic_fails = !symbolic.pass && symbolic.discrepancy.has_value();
    if (symbolic_fails) {
        const auto& d = std::get<SymbolicDiscrepancy>(*symbolic.discrepancy);
        symbolic_fails = d.x_degree == 0 && d.y_degree == 1 && !d.difference.is_zero() &&
                         d.difference.quotient_normalized().is_zero();
    }

    SatakeData scaled = random_unimodular_satake(4, {2, 3, 5, 7}, 2026);
    for (auto& alpha : scaled.entries.at(2)) alpha *= 1.01;
    VerificationReport numeric = numeric_verify_theorem1(scaled, 100, 1e-9, /*strict=*/false);
    bool numeric_fails = !numeric.pass;

    outcome(symbolic_fails && numeric_fails,
            "negative controls: no-quotient bf fails at (X^0,Y^1) with difference in "
            "(a1*a2 - 1); scaled Satake tuple fails the numeric check");
}

void criterion_numeric_end_to_end() {
    const auto start = std::chrono::steady_clock::now();
    SatakeData data = random_unimodular_satake(4, {2, 3, 5, 7}, 424242);
    VerificationReport report = numeric_verify_theorem1(data, 100, 1e-9, /*strict=*/false);
    const double elapsed = seconds_since(start);
    outcome(report.pass && elapsed < 5.0,
            "numeric end to end: n=4, primes {2,3,5,7}, M=100, relative tolerance 1e-9 (" +
                std::to_string(elapsed) + "s < 5s)");
}

}  // namespace

int main() {
    criterion_bf_constrained();
    criterion_bf_unconstrained();
    criterion_theorem1();
    criterion_hecke();
    criterion_littlewood();
    criterion_oracle_equivalence();
    criterion_negative_controls();
    criterion_numeric_end_to_end();
    if (failures == 0)
        std::cout << "all criteria passed" << std::endl;
    else
        std::cout << failures << " criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
