#include "aksbench/number_theory.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

using namespace aksbench;

TEST_CASE("perfect power: pinned values") {
    auto w = is_perfect_power(1024);
    REQUIRE(w.has_value());
    CHECK(w->base == 2);
    CHECK(w->exponent == 10);

    CHECK_FALSE(is_perfect_power(7).has_value());

    w = is_perfect_power(36);
    REQUIRE(w.has_value());
    CHECK(w->base == 6);
    CHECK(w->exponent == 2);

    // canonical form prefers the maximal exponent
    w = is_perfect_power(64);
    REQUIRE(w.has_value());
    CHECK(w->base == 2);
    CHECK(w->exponent == 6);
}

TEST_CASE("perfect power: agrees with the brute-force scan on [2, 10000]") {
    for (int n = 2; n <= 10000; ++n) {
        auto got = is_perfect_power(n);
        auto expected = oracles::perfect_power_scan(n);
        REQUIRE(got.has_value() == expected.has_value());
        if (got) {
            CHECK(got->base == expected->first);
            CHECK(got->exponent == expected->second);
            CHECK(boost::multiprecision::pow(got->base,
                                             got->exponent.convert_to<unsigned>()) == n);
        }
    }
}

TEST_CASE("perfect power: domain errors") {
    CHECK_THROWS_AS(is_perfect_power(0), std::domain_error);
    CHECK_THROWS_AS(is_perfect_power(1), std::domain_error);
}

TEST_CASE("gcd") {
    CHECK(gcd(12, 8) == 4);
    CHECK(gcd(7, 1024) == 1);
    CHECK(gcd(parse_natural("100000000000031"), 1024) == 1);
    CHECK(gcd(42, 0) == 42);
    CHECK(gcd(0, 42) == 42);
    CHECK_THROWS_AS(gcd(0, 0), std::domain_error);
}

TEST_CASE("multiplicative order: pinned values") {
    CHECK(*multiplicative_order(2, 7) == 3);
    CHECK(*multiplicative_order(parse_natural("100000000000031"), 1024) == 32);
    CHECK_FALSE(multiplicative_order(6, 4).has_value());
    CHECK_THROWS_AS(multiplicative_order(5, 1), std::domain_error);
    CHECK_THROWS_AS(multiplicative_order(5, 0), std::domain_error);
}

TEST_CASE("multiplicative order: brute-force agreement and minimality") {
    for (std::uint64_t r = 2; r <= 200; ++r) {
        for (std::uint64_t n = 2; n <= 200; ++n) {
            auto got = multiplicative_order(n, r);
            if (oracles::gcd_u64(n, r) != 1) {
                CHECK_FALSE(got.has_value());
                continue;
            }
            REQUIRE(got.has_value());
            const std::uint64_t k = got->convert_to<std::uint64_t>();
            CHECK(k == oracles::order_brute(n, r));
            // direct definition: n^k == 1 and no smaller j works
            CHECK(oracles::powmod_linear(n, k, r) == 1);
            for (std::uint64_t j = 1; j < k; ++j) {
                CHECK(oracles::powmod_linear(n, j, r) != 1);
            }
        }
    }
}

TEST_CASE("multiplicative order divides euler_phi (Lagrange)") {
    for (std::uint64_t r = 2; r <= 200; ++r) {
        const Natural phi = euler_phi(r);
        for (std::uint64_t n = 2; n <= 200; ++n) {
            auto k = multiplicative_order(n, r);
            if (k) {
                CHECK(phi % *k == 0);
            }
        }
    }
}

TEST_CASE("euler phi: pinned values and counting oracle") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(1024) == 512);
    CHECK(euler_phi(10) == 4);
    CHECK_THROWS_AS(euler_phi(0), std::domain_error);

    for (std::uint64_t r = 1; r <= 5000; ++r) {
        CHECK(euler_phi(r) == oracles::phi_count(r));
    }
}

TEST_CASE("bit length") {
    CHECK(bit_length(1) == 1);
    CHECK(bit_length(2) == 2);
    CHECK(bit_length(1024) == 11);
    CHECK(bit_length(parse_natural("100000000000031")) == 47);
    CHECK_THROWS_AS(bit_length(0), std::domain_error);
}

TEST_CASE("integer sqrt") {
    CHECK(integer_sqrt(0) == 0);
    CHECK(integer_sqrt(512) == 22);
    CHECK(integer_sqrt(2209) == 47);

    for (std::uint64_t n = 0; n <= 20000; ++n) {
        const Natural s = integer_sqrt(n);
        CHECK(s * s <= n);
        CHECK((s + 1) * (s + 1) > n);
    }
    // a value far past 64 bits
    const Natural big = parse_natural("0x1_0000_0000_0000_0000_0000_0000");
    const Natural s = integer_sqrt(big);
    CHECK(s * s <= big);
    CHECK((s + 1) * (s + 1) > big);
}

TEST_CASE("witness bound: pinned values") {
    // (integer_sqrt(phi(2)) + 1) * bit_length(2) = (1 + 1) * 2
    CHECK(witness_bound(2, 2) == 4);
    CHECK(witness_bound(1024, parse_natural("100000000000031")) == 1081);
    CHECK(witness_bound(10, 3) == 6);
    CHECK_THROWS_AS(witness_bound(1, 5), std::domain_error);
    CHECK_THROWS_AS(witness_bound(5, 1), std::domain_error);
}

TEST_CASE("witness bound over-approximates floor(sqrt(phi(r)) * log2 n)") {
    for (std::uint64_t r = 2; r <= 64; ++r) {
        for (std::uint64_t n : {2ull, 3ull, 7ull, 10ull, 97ull, 561ull, 4999ull, 1000003ull}) {
            const long double exact =
                std::sqrt(static_cast<long double>(oracles::phi_count(r))) *
                std::log2(static_cast<long double>(n));
            const Natural bound = witness_bound(r, n);
            CHECK(bound >= Natural(static_cast<std::uint64_t>(exact)));
        }
    }
}
