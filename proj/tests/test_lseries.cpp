#include <doctest.h>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "extsq/dirichlet.hpp"
#include "extsq/partition.hpp"
#include "extsq/satake.hpp"
#include "extsq/schur.hpp"

using namespace extsq;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_SUITE_BEGIN("lseries");

TEST_CASE("loading a trivial valid Satake file") {
    auto path = write_temp("satake_trivial.json",
                           R"({"n": 2, "label": "trivial",
                               "primes": [{"p": 2, "alpha": [[1, 0], [1, 0]]}]})");
    SatakeData data = load_satake(path);
    CHECK(data.n == 2);
    CHECK(data.label == "trivial");
    CHECK(data.has_prime(2));
    CHECK(data.alphas(2).size() == 2);
}

TEST_CASE("rejecting a non-unimodular product names the prime") {
    auto path = write_temp("satake_bad_product.json",
                           R"({"n": 3, "label": "bad",
                               "primes": [{"p": 5, "alpha": [[1.5, 0], [1, 0], [1, 0]]}]})");
    CHECK_THROWS_WITH_AS(load_satake(path), doctest::Contains("prime 5"), std::runtime_error);
}

TEST_CASE("rejecting malformed files and wrong tuple lengths") {
    CHECK_THROWS_AS(load_satake(write_temp("satake_garbage.json", "not json")),
                    std::runtime_error);
    auto path = write_temp("satake_short.json",
                           R"({"n": 3, "primes": [{"p": 2, "alpha": [[1, 0], [1, 0]]}]})");
    CHECK_THROWS_WITH_AS(load_satake(path), doctest::Contains("length"), std::runtime_error);
    CHECK_THROWS_AS(load_satake("/nonexistent/satake.json"), std::runtime_error);
}

TEST_CASE("random generator emits product-1 tuples that round-trip") {
    SatakeData data = random_unimodular_satake(3, {2, 3, 5}, 99);
    CHECK(data.entries.size() == 3);
    for (std::uint64_t p : data.primes()) {
        std::complex<double> product = 1.0;
        for (auto alpha : data.alphas(p)) product *= alpha;
        CHECK(std::abs(product - 1.0) <= satake_product_tolerance);
    }
    auto path = std::filesystem::temp_directory_path() / "satake_roundtrip.json";
    save_satake(data, path);
    SatakeData reloaded = load_satake(path);
    CHECK(reloaded.n == data.n);
    CHECK(reloaded.primes() == data.primes());
}

TEST_CASE("local coefficients at the all-ones point count tableaux") {
    SatakeData data;
    data.n = 3;
    data.entries[2] = {1.0, 1.0, 1.0};

    CHECK(local_coefficient(FourierIndex({0, 0}), 2, data) == std::complex<double>(1.0));
    CHECK(local_coefficient(FourierIndex({1, 0}), 2, data) == std::complex<double>(3.0));
    CHECK(local_coefficient(FourierIndex({1, 1}), 2, data) == std::complex<double>(8.0));
    CHECK_THROWS_AS(local_coefficient(FourierIndex({1, 0}), 7, data), std::runtime_error);
}

TEST_CASE("local coefficients agree with the tableau oracle numerically") {
    SatakeData data = random_unimodular_satake(4, {2}, 5);
    const auto& alphas = data.alphas(2);
    for (std::uint32_t w = 0; w <= 6; ++w)
        for (const Partition& lambda : enumerate_partitions(w, 4)) {
            std::vector<std::uint32_t> k(3, 0);
            // encode lambda as a Fourier index: k_j = lambda_j - lambda_{j+1}
            for (std::size_t j = 0; j < 3; ++j) k[j] = lambda.part(j) - lambda.part(j + 1);
            if (lambda.part(3) != 0) continue;
            std::complex<double> via_schur = local_coefficient(FourierIndex(k), 2, data);
            std::complex<double> via_oracle = schur_oracle(lambda, 4).evaluate(alphas);
            CHECK(std::abs(via_schur - via_oracle) <= 1e-12 * std::max(1.0, std::abs(via_oracle)));
        }
}

TEST_CASE("global coefficients multiply over primes") {
    SatakeData data = random_unimodular_satake(3, {2, 3, 5}, 7);
    CHECK(global_coefficient({1, 1}, data) == std::complex<double>(1.0));

    std::complex<double> local = local_coefficient(FourierIndex({2, 0}), 3, data);
    CHECK(std::abs(global_coefficient({9, 1}, data) - local) <= 1e-15);

    std::complex<double> at_2 = local_coefficient(FourierIndex({1, 0}), 2, data);
    std::complex<double> at_3 = local_coefficient(FourierIndex({0, 1}), 3, data);
    CHECK(std::abs(global_coefficient({2, 3}, data) - at_2 * at_3) <= 1e-15);

    CHECK_THROWS_WITH_AS(global_coefficient({7, 1}, data), doctest::Contains("prime 7"),
                         std::runtime_error);
    CHECK_THROWS_AS(global_coefficient({0, 1}, data), std::invalid_argument);
}

TEST_CASE("multiplicativity on coprime arguments") {
    SatakeData data = random_unimodular_satake(4, {2, 3, 5}, 11);
    const std::vector<std::vector<std::uint64_t>> left = {{2, 1, 4}, {8, 2, 1}, {1, 1, 2}};
    const std::vector<std::vector<std::uint64_t>> right = {{3, 5, 1}, {15, 1, 9}, {5, 27, 25}};
    for (const auto& a : left)
        for (const auto& b : right) {
            std::vector<std::uint64_t> product(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) product[i] = a[i] * b[i];
            std::complex<double> lhs = global_coefficient(product, data);
            std::complex<double> rhs = global_coefficient(a, data) * global_coefficient(b, data);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
}

TEST_CASE("GL(2): the exterior square slice is the zeta slice") {
    SatakeData data = random_unimodular_satake(2, {2, 3, 5, 7}, 3);
    DirichletSlice side = exterior_square_dirichlet_side(data, 10);
    CHECK(std::abs(side.at(1) - 1.0) <= 1e-12);
    for (std::uint64_t m : {2, 3, 4, 5, 6, 7, 8, 9, 10})
        CHECK(std::abs(side.at(m) - 1.0) <= 1e-12);

    VerificationReport report = numeric_verify_theorem1(data, 10, 1e-12, /*strict=*/false);
    CHECK(report.pass);
}

TEST_CASE("both slices normalize to 1 at m=1") {
    SatakeData data = random_unimodular_satake(5, {2, 3}, 21);
    CHECK(std::abs(exterior_square_dirichlet_side(data, 20).at(1) - 1.0) <= 1e-15);
    CHECK(std::abs(exterior_square_euler_side(data, 20).at(1) - 1.0) <= 1e-15);
}

TEST_CASE("numeric theorem1 passes for odd and even rank") {
    for (std::uint32_t n : {3, 4, 5}) {
        SatakeData data = random_unimodular_satake(n, {2, 3, 5}, 100 + n);
        VerificationReport report = numeric_verify_theorem1(data, 30, 1e-9, /*strict=*/false);
        CHECK(report.pass);
        CHECK(report.terms_checked == 30);
    }
}

TEST_CASE("strict mode requires every prime up to the bound") {
    SatakeData data = random_unimodular_satake(3, {2}, 1);
    CHECK_THROWS_WITH_AS(numeric_verify_theorem1(data, 3, 1e-9, /*strict=*/true),
                         doctest::Contains("missing prime 3"), std::runtime_error);
    CHECK_THROWS_AS(numeric_verify_theorem1(data, 3, 0.0, false), std::invalid_argument);
}

TEST_CASE("negative control: a scaled tuple breaks the numeric identity") {
    SatakeData data = random_unimodular_satake(4, {2, 3, 5, 7}, 17);
    for (auto& alpha : data.entries.at(2)) alpha *= 1.01;
    VerificationReport report = numeric_verify_theorem1(data, 50, 1e-9, /*strict=*/false);
    REQUIRE_FALSE(report.pass);
    REQUIRE(report.discrepancy.has_value());
    const auto& d = std::get<NumericDiscrepancy>(*report.discrepancy);
    CHECK(d.relative_error > 1e-9);
}

TEST_SUITE_END();
