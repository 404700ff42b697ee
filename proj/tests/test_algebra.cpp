#include <doctest.h>

#include <random>

#include "extsq/biseries.hpp"
#include "extsq/schur.hpp"
#include "extsq/sympoly.hpp"
#include "test_util.hpp"

using namespace extsq;
using testutil::poly;
using testutil::random_poly;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("quotient normalization subtracts the minimum exponent") {
    SymPoly p = poly(3, {{{2, 1, 1}, 1}});
    CHECK(p.quotient_normalized() == poly(3, {{{1, 0, 0}, 1}}));
}

TEST_CASE("a1*a2 - 1 collapses to zero in two variables") {
    SymPoly p = poly(2, {{{1, 1}, 1}, {{0, 0}, -1}});
    CHECK(p.quotient_normalized().is_zero());
}

TEST_CASE("e1*e2 normalizes to the quotient class of S_(2,1) + 1") {
    // tableau oracle supplies the independent Pieri expansion
    SymPoly product = mul(elementary_e(1, 3), elementary_e(2, 3), true);
    SymPoly expected = (schur_oracle(Partition{2, 1}, 3) + SymPoly::one(3)).quotient_normalized();
    CHECK(product == expected);
}

TEST_CASE("quotient normalization is idempotent and a ring map") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t nvars = 1 + trial % 4;
        SymPoly p = random_poly(rng, nvars);
        SymPoly q = random_poly(rng, nvars);
        SymPoly np = p.quotient_normalized();
        CHECK(np.quotient_normalized() == np);
        CHECK(mul(p, q, true) == mul(np, q.quotient_normalized(), true));
    }
}

TEST_CASE("polynomial addition") {
    SymPoly a1 = SymPoly::variable(3, 0);
    CHECK((a1 + (-a1)).is_zero());

    SymPoly lhs = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}) + poly(2, {{{0, 1}, 1}});
    CHECK(lhs == poly(2, {{{1, 0}, 1}, {{0, 1}, 2}}));

    for (std::size_t n = 1; n <= 4; ++n) {
        SymPoly twice = homogeneous_h(1, n) + elementary_e(1, n);
        CHECK(twice == elementary_e(1, n) * mpz_class(2));
    }
}

TEST_CASE("addition and multiplication reject mismatched variable counts") {
    CHECK_THROWS_AS(SymPoly::one(2) + SymPoly::one(3), std::invalid_argument);
    CHECK_THROWS_AS(mul(SymPoly::one(2), SymPoly::one(3), false), std::invalid_argument);
}

TEST_CASE("polynomial multiplication") {
    SymPoly diff_of_squares = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}) *
                              poly(2, {{{1, 0}, 1}, {{0, 1}, -1}});
    CHECK(diff_of_squares == poly(2, {{{2, 0}, 1}, {{0, 2}, -1}}));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        SymPoly p = random_poly(rng, 3);
        CHECK(p * SymPoly::one(3) == p);
    }
}

TEST_CASE("ring laws on randomized inputs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t nvars = 1 + trial % 3;
        SymPoly p = random_poly(rng, nvars);
        SymPoly q = random_poly(rng, nvars);
        SymPoly r = random_poly(rng, nvars);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("serialization is deterministic and sign-explicit") {
    SymPoly p = poly(3, {{{0, 0, 0}, 1}, {{2, 0, 0}, -1}, {{1, 1, 0}, 2}});
    CHECK(p.to_string() == p.to_string());
    CHECK(p.to_string() == "+1 +2*a1*a2 -a1^2");

    // same polynomial assembled in a different term order serializes identically
    SymPoly q = poly(3, {{{1, 1, 0}, 2}, {{0, 0, 0}, 1}, {{2, 0, 0}, -1}});
    CHECK(p.to_string() == q.to_string());
    CHECK(SymPoly::zero(2).to_string() == "0");
}

TEST_CASE("series multiplication identity and telescoping") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        BiSeries f(2, 3, 3);
        for (std::uint32_t a = 0; a <= 3; ++a)
            for (std::uint32_t b = 0; b <= 3; ++b) f.set(a, b, random_poly(rng, 2));
        CHECK(f * BiSeries::one(2, 3, 3) == f);
    }

    // (1 - a1 X) * sum_k a1^k X^k telescopes to 1
    const std::uint32_t cap = 4;
    BiSeries factor = BiSeries::one(2, cap, 0);
    factor.set(1, 0, SymPoly::from_monomial(Monomial::unit(2, 0), -1));
    BiSeries geometric(2, cap, 0);
    for (std::uint32_t k = 0; k <= cap; ++k)
        geometric.set(k, 0, SymPoly::from_monomial(Monomial::unit(2, 0, k)));
    CHECK(factor * geometric == BiSeries::one(2, cap, 0));
}

TEST_CASE("series multiplication is associative and commutative") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        BiSeries f(2, 2, 2), g(2, 2, 2), h(2, 2, 2);
        for (std::uint32_t a = 0; a <= 2; ++a)
            for (std::uint32_t b = 0; b <= 2; ++b) {
                f.set(a, b, random_poly(rng, 2, 3, 2));
                g.set(a, b, random_poly(rng, 2, 3, 2));
                h.set(a, b, random_poly(rng, 2, 3, 2));
            }
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("series multiplication rejects mismatched caps and nvars") {
    CHECK_THROWS_AS(BiSeries::one(2, 2, 2) * BiSeries::one(2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(BiSeries::one(2, 2, 2) * BiSeries::one(3, 2, 2), std::invalid_argument);
}

TEST_CASE("series inverse of 1 - Y is the geometric series") {
    BiSeries f = BiSeries::one(2, 0, 5);
    f.set(0, 1, SymPoly::constant(2, -1));
    BiSeries inv = f.inverse();
    for (std::uint32_t b = 0; b <= 5; ++b) CHECK(inv.at(0, b).is_one());
}

TEST_CASE("series inverse of 1 - a1 X is the geometric series in a1") {
    BiSeries f = BiSeries::one(2, 5, 0);
    f.set(1, 0, SymPoly::from_monomial(Monomial::unit(2, 0), -1));
    BiSeries inv = f.inverse();
    for (std::uint32_t a = 0; a <= 5; ++a)
        CHECK(inv.at(a, 0) == SymPoly::from_monomial(Monomial::unit(2, 0, a)));
}

TEST_CASE("product of the two linear-factor inverses yields h_2 at X^2") {
    BiSeries f = BiSeries::one(2, 3, 0);
    f.set(1, 0, SymPoly::from_monomial(Monomial::unit(2, 0), -1));
    BiSeries g = BiSeries::one(2, 3, 0);
    g.set(1, 0, SymPoly::from_monomial(Monomial::unit(2, 1), -1));
    BiSeries product = f.inverse() * g.inverse();
    CHECK(product.at(2, 0) == homogeneous_h(2, 2));
}

TEST_CASE("inverse times the original is 1 for unit-constant series") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        BiSeries f = BiSeries::one(2, 2, 2);
        for (std::uint32_t a = 0; a <= 2; ++a)
            for (std::uint32_t b = 0; b <= 2; ++b)
                if (a + b > 0) f.set(a, b, random_poly(rng, 2, 2, 2));
        CHECK(f * f.inverse() == BiSeries::one(2, 2, 2));
    }
}

TEST_CASE("inverse requires a unit constant coefficient") {
    BiSeries f(2, 2, 2);
    CHECK_THROWS_AS(f.inverse(), std::invalid_argument);
    f.set(0, 0, SymPoly::constant(2, 2));
    CHECK_THROWS_AS(f.inverse(), std::invalid_argument);
}

TEST_SUITE_END();
