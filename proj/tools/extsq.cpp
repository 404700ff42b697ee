// extsq: exact verification of exterior-square L-function identities at a
// prime, plus a numeric mode over supplied Satake parameters.

#include <complex>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "extsq/dirichlet.hpp"
#include "extsq/identities.hpp"
#include "extsq/parallel.hpp"
#include "extsq/partition.hpp"
#include "extsq/satake.hpp"
#include "extsq/schur.hpp"

namespace {

using namespace extsq;

enum class Format { table, json };

struct CommandContext {
    Format format = Format::table;
    VerifyOptions verify;
};

void emit(const VerificationReport& report, Format format) {
    if (format == Format::json)
        std::cout << report.to_json() << '\n';
    else
        std::cout << report.to_table() << '\n';
}

int finish(const std::vector<VerificationReport>& reports) {
    for (const auto& report : reports)
        if (!report.pass) return 1;
    return 0;
}

// shared flags for every verification subcommand
void add_common(CLI::App* cmd, CommandContext& ctx, std::string& convention,
                unsigned& jobs, bool* no_quotient = nullptr) {
    cmd->add_option("--format", [&ctx](const std::vector<std::string>& values) {
           ctx.format = values.front() == "json" ? Format::json : Format::table;
           return true;
       },
       "Output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->expected(1);
    cmd->add_option("--convention", convention,
                    "Index-to-partition convention: geq or paper-literal")
        ->check(CLI::IsMember({"geq", "paper-literal"}))
        ->capture_default_str();
    cmd->add_option("--jobs,-j", jobs, "Worker threads (0 = hardware)")
        ->envname("EXTSQ_JOBS")
        ->capture_default_str();
    if (no_quotient)
        cmd->add_flag("--no-quotient", *no_quotient,
                      "Disable the PGL quotient normalization (negative control)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact and numeric verification of the exterior-square L-function "
        "Dirichlet-series identities (Schur-coefficient model)"};
    app.require_subcommand(1);

    CommandContext ctx;
    std::string convention = "geq";
    unsigned jobs = 0;
    bool no_quotient = false;

    // verify-bf
    auto* bf = app.add_subcommand("verify-bf",
                                  "Check the Dirichlet/Euler product identity (eq. bf)");
    std::uint32_t bf_n = 0, bf_cap_x = 4, bf_cap_y = 4, bf_max_weight = 8;
    bool bf_unconstrained = false;
    bf->add_option("--n", bf_n, "Rank of the group GL(n)")->required();
    bf->add_option("--capX", bf_cap_x, "X-degree truncation")->capture_default_str();
    bf->add_option("--capY", bf_cap_y, "Y-degree truncation")->capture_default_str();
    bf->add_flag("--unconstrained", bf_unconstrained,
                 "Verify the underlying full-partition identity (no L0, no quotient)");
    bf->add_option("--max-weight", bf_max_weight,
                   "Partition weight bound in unconstrained mode")
        ->capture_default_str();
    add_common(bf, ctx, convention, jobs, &no_quotient);

    // verify-thm1
    auto* thm1 = app.add_subcommand(
        "verify-thm1", "Check the exterior-square factorization theorem per prime");
    std::uint32_t thm1_n = 0, thm1_cap_y = 5;
    thm1->add_option("--n", thm1_n, "Rank of the group GL(n)")->required();
    thm1->add_option("--capY", thm1_cap_y, "Y-degree truncation")->capture_default_str();
    add_common(thm1, ctx, convention, jobs, &no_quotient);

    // verify-hecke
    auto* hecke = app.add_subcommand("verify-hecke",
                                     "Check the Hecke multiplication relations at a prime");
    std::uint32_t hecke_n = 0, hecke_max_k = 2, hecke_max_e = 2;
    std::int64_t hecke_k = -1;
    std::vector<std::uint32_t> hecke_e;
    hecke->add_option("--n", hecke_n, "Rank of the group GL(n)")->required();
    auto* hecke_k_opt =
        hecke->add_option("--k", hecke_k, "Exponent of the first coefficient A(p^k,1,...)")
            ->check(CLI::NonNegativeNumber);
    hecke->add_option("--e", hecke_e, "Even-slot exponents e2,e4,...")
        ->delimiter(',')
        ->needs(hecke_k_opt);
    hecke->add_option("--max-k", hecke_max_k, "Sweep bound for k when --k is absent")
        ->capture_default_str();
    hecke->add_option("--max-e", hecke_max_e, "Sweep bound for e entries when --e is absent")
        ->capture_default_str();
    add_common(hecke, ctx, convention, jobs);

    // verify-littlewood
    auto* lw = app.add_subcommand("verify-littlewood",
                                  "Check the even-conjugate Schur expansion of the wedge product");
    std::uint32_t lw_n = 0, lw_max_d = 5;
    std::int64_t lw_d = -1;
    lw->add_option("--n", lw_n, "Number of variables")->required();
    lw->add_option("--d", lw_d, "Y-degree to check (sweeps 0..max-d when absent)")
        ->check(CLI::NonNegativeNumber);
    lw->add_option("--max-d", lw_max_d, "Sweep bound when --d is absent")->capture_default_str();
    add_common(lw, ctx, convention, jobs);

    // schur
    auto* sch = app.add_subcommand("schur", "Print a Schur polynomial");
    std::vector<std::uint32_t> sch_lambda;
    std::uint32_t sch_n = 0;
    sch->add_option("--lambda", sch_lambda, "Partition parts, e.g. 2,1")
        ->required()
        ->delimiter(',');
    sch->add_option("--n", sch_n, "Number of variables")->required();
    add_common(sch, ctx, convention, jobs);

    // coeffs
    auto* co = app.add_subcommand("coeffs",
                                  "Inspect a prime-power Fourier coefficient A(p^k1,...)");
    std::uint32_t co_n = 0;
    std::vector<std::uint32_t> co_k;
    std::string co_input;
    co->add_option("--n", co_n, "Rank of the group GL(n)")->required();
    co->add_option("--k", co_k, "Fourier index k1,...,k_{n-1}")->required()->delimiter(',');
    co->add_option("--input", co_input, "Satake JSON file for numeric values per prime")
        ->check(CLI::ExistingFile);
    add_common(co, ctx, convention, jobs);

    // numeric-check
    auto* num = app.add_subcommand("numeric-check",
                                   "Numeric verification of the factorization theorem");
    std::string num_input;
    std::uint64_t num_max_m = 100;
    double num_tol = 1e-9;
    bool num_strict = false;
    num->add_option("--input", num_input, "Satake JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    num->add_option("--max-m", num_max_m, "Dirichlet depth M")->capture_default_str();
    num->add_option("--tol", num_tol, "Relative tolerance")->capture_default_str();
    num->add_flag("--strict", num_strict, "Require every prime up to M in the data");
    add_common(num, ctx, convention, jobs);

    // gen-satake
    auto* gen = app.add_subcommand("gen-satake",
                                   "Generate random unit-product Satake test data");
    std::uint32_t gen_n = 0;
    std::vector<std::uint64_t> gen_primes{2, 3, 5, 7};
    std::uint64_t gen_seed = 1;
    std::string gen_output;
    gen->add_option("--n", gen_n, "Rank of the group GL(n)")->required();
    gen->add_option("--primes", gen_primes, "Primes to include")
        ->delimiter(',')
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    gen->add_option("--output,-o", gen_output, "Output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    ctx.verify.convention = (convention == "paper-literal") ? IndexConvention::paper_literal
                                                            : IndexConvention::inclusive_suffix;
    ctx.verify.use_quotient = !no_quotient;
    ctx.verify.jobs = resolve_jobs(jobs);

    try {
        std::vector<VerificationReport> reports;

        if (bf->parsed()) {
            reports.push_back(bf_unconstrained
                                  ? verify_bf_unconstrained(bf_n, bf_max_weight, ctx.verify)
                                  : verify_bf(bf_n, bf_cap_x, bf_cap_y, ctx.verify));
        } else if (thm1->parsed()) {
            reports.push_back(verify_theorem1(thm1_n, thm1_cap_y, ctx.verify));
        } else if (hecke->parsed()) {
            if (hecke_k >= 0) {
                reports.push_back(verify_hecke(hecke_n, static_cast<std::uint32_t>(hecke_k),
                                               hecke_e, ctx.verify));
            } else {
                // full sweep: k ascending, then e lexicographically
                const std::size_t slots = (hecke_n - 1) / 2;
                std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> cases;
                std::vector<std::uint32_t> e(slots, 0);
                auto enumerate = [&](auto&& self, std::size_t t) -> void {
                    if (t == slots) {
                        for (std::uint32_t k = 0; k <= hecke_max_k; ++k) cases.emplace_back(k, e);
                        return;
                    }
                    for (std::uint32_t v = 0; v <= hecke_max_e; ++v) {
                        e[t] = v;
                        self(self, t + 1);
                    }
                    e[t] = 0;
                };
                enumerate(enumerate, 0);
                std::sort(cases.begin(), cases.end());
                reports.resize(cases.size());
                VerifyOptions per_case = ctx.verify;
                per_case.jobs = 1;
                parallel_for(cases.size(), ctx.verify.jobs, [&](std::size_t i) {
                    reports[i] = verify_hecke(hecke_n, cases[i].first, cases[i].second, per_case);
                });
            }
        } else if (lw->parsed()) {
            if (lw_d >= 0) {
                reports.push_back(
                    verify_littlewood(lw_n, static_cast<std::uint32_t>(lw_d), ctx.verify));
            } else {
                for (std::uint32_t d = 0; d <= lw_max_d; ++d)
                    reports.push_back(verify_littlewood(lw_n, d, ctx.verify));
            }
        } else if (sch->parsed()) {
            Partition lambda(sch_lambda);
            SymPoly value = schur(lambda, sch_n);
            if (ctx.format == Format::json) {
                nlohmann::json out;
                out["lambda"] = lambda.to_string();
                out["n"] = sch_n;
                out["terms"] = value.term_count();
                out["schur"] = value.to_string();
                std::cout << out.dump() << '\n';
            } else {
                std::cout << "S_(" << lambda.to_string() << ") in " << sch_n
                          << " variables (" << value.term_count() << " terms):\n"
                          << value.to_string() << '\n';
            }
            return 0;
        } else if (co->parsed()) {
            FourierIndex index(co_k);
            if (index.rank() + 1 != co_n)
                throw std::invalid_argument("coeffs: --k must have n-1 entries");
            Partition lambda = lambda_of_index(index, ctx.verify.convention);
            SymPoly value = schur(lambda, co_n);
            nlohmann::json values = nlohmann::json::array();
            std::string numeric_table;
            if (!co_input.empty()) {
                SatakeData data = load_satake(co_input);
                if (data.n != co_n)
                    throw std::invalid_argument("coeffs: file rank differs from --n");
                for (std::uint64_t p : data.primes()) {
                    std::complex<double> v =
                        local_coefficient(index, p, data, ctx.verify.convention);
                    values.push_back({{"p", p}, {"re", v.real()}, {"im", v.imag()}});
                    numeric_table += "  A at p=" + std::to_string(p) + ": " +
                                     std::to_string(v.real()) + (v.imag() < 0 ? " - " : " + ") +
                                     std::to_string(std::abs(v.imag())) + "i\n";
                }
            }
            if (ctx.format == Format::json) {
                nlohmann::json out;
                out["k"] = index.to_string();
                out["lambda"] = lambda.to_string();
                out["n"] = co_n;
                out["terms"] = value.term_count();
                out["poly"] = value.to_string();
                if (!values.empty()) out["values"] = values;
                std::cout << out.dump() << '\n';
            } else {
                std::cout << index.to_string() << "  lambda=" << lambda.to_string() << "\n"
                          << "A(p^k) = " << value.to_string() << "  (" << value.term_count()
                          << " terms)\n"
                          << numeric_table;
            }
            return 0;
        } else if (num->parsed()) {
            SatakeData data = load_satake(num_input);
            reports.push_back(numeric_verify_theorem1(data, num_max_m, num_tol, num_strict,
                                                      ctx.verify.convention));
        } else if (gen->parsed()) {
            SatakeData data = random_unimodular_satake(gen_n, gen_primes, gen_seed,
                                                       "random-seed-" + std::to_string(gen_seed));
            save_satake(data, gen_output);
            std::cout << "wrote " << gen_output << " (n=" << gen_n << ", "
                      << gen_primes.size() << " primes)\n";
            return 0;
        }

        for (const auto& report : reports) emit(report, ctx.format);
        return finish(reports);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
