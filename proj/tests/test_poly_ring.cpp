#include "aksbench/poly_ring.hpp"

#include "aksbench/number_theory.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>
#include <stdexcept>

using namespace aksbench;

namespace {

RingElement element(const Natural& n, std::vector<int> coeffs) {
    std::vector<Natural> c(coeffs.begin(), coeffs.end());
    return RingElement(n, std::move(c));
}

RingElement random_element(std::mt19937& rng, const Natural& n, std::size_t r) {
    std::uniform_int_distribution<std::uint64_t> dist(0, to_uint64(n) - 1);
    std::vector<Natural> c(r);
    for (auto& v : c) v = dist(rng);
    return RingElement(n, std::move(c));
}

void check_invariants(const RingElement& e, std::size_t r) {
    REQUIRE(e.ring_degree() == r);
    for (std::size_t i = 0; i < r; ++i) {
        CHECK(e.coefficient(i) >= 0);
        CHECK(e.coefficient(i) < e.modulus());
    }
}

}  // namespace

TEST_CASE("make_linear") {
    CHECK(make_linear(1, 3, 2) == element(3, {1, 1}));
    CHECK(make_linear(5, 3, 4) == element(3, {2, 1, 0, 0}));
    CHECK(make_linear(0, 7, 3) == element(7, {0, 1, 0}));
    // degenerate ring: X == 1
    CHECK(make_linear(4, 7, 1) == element(7, {5}));
    CHECK_THROWS_AS(make_linear(1, 1, 4), std::domain_error);
    CHECK_THROWS_AS(make_linear(1, 5, 0), std::domain_error);
}

TEST_CASE("multiply: pinned values") {
    const RingElement x_plus_1 = element(3, {1, 1});
    CHECK(multiply(x_plus_1, element(3, {1, 0})) == x_plus_1);
    CHECK(multiply(x_plus_1, x_plus_1) == element(3, {2, 2}));
    CHECK(multiply(element(5, {0, 1}), element(5, {0, 1})) == element(5, {1, 0}));
}

TEST_CASE("multiply: mismatched rings rejected") {
    CHECK_THROWS_AS(multiply(element(3, {1, 1}), element(5, {1, 1})), std::domain_error);
    CHECK_THROWS_AS(multiply(element(3, {1, 1}), element(3, {1, 1, 0})), std::domain_error);
}

TEST_CASE("multiply matches the expand-then-fold oracle") {
    std::mt19937 rng(421);
    std::uniform_int_distribution<std::uint64_t> pick_n(2, 97);
    std::uniform_int_distribution<std::size_t> pick_r(1, 16);
    for (int trial = 0; trial < 300; ++trial) {
        const Natural n = pick_n(rng);
        const std::size_t r = pick_r(rng);
        const RingElement p = random_element(rng, n, r);
        const RingElement q = random_element(rng, n, r);
        const RingElement got = multiply(p, q);
        CHECK(got == oracles::multiply_expand_fold(p, q));
        check_invariants(got, r);
    }
}

TEST_CASE("multiply: wide-modulus path agrees with the oracle") {
    const Natural n = parse_natural("340282366920938463463374607431768211507");  // > 2^128
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Natural> pc, qc;
        const std::size_t r = 1 + trial % 8;
        for (std::size_t i = 0; i < r; ++i) {
            pc.push_back(n - 1 - (rng() % 1000));
            qc.push_back(n - 1 - (rng() % 1000));
        }
        const RingElement p(n, pc), q(n, qc);
        const RingElement got = multiply(p, q);
        CHECK(got == oracles::multiply_expand_fold(p, q));
        check_invariants(got, r);
    }
}

TEST_CASE("ring laws on random small elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick_n(2, 97);
    std::uniform_int_distribution<std::size_t> pick_r(1, 16);
    for (int trial = 0; trial < 100; ++trial) {
        const Natural n = pick_n(rng);
        const std::size_t r = pick_r(rng);
        const RingElement a = random_element(rng, n, r);
        const RingElement b = random_element(rng, n, r);
        const RingElement c = random_element(rng, n, r);

        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, oracles::add_elements(b, c)) ==
              oracles::add_elements(multiply(a, b), multiply(a, c)));

        std::vector<Natural> one(r, Natural(0));
        one[0] = 1;
        CHECK(multiply(a, RingElement(n, std::move(one))) == a);
    }
}

TEST_CASE("power: pinned values") {
    const RingElement x_plus_1 = element(3, {1, 1});
    std::vector<Natural> one = {1, 0};
    CHECK(power(x_plus_1, 0) == RingElement(3, one));
    CHECK(power(x_plus_1, 3) == element(3, {1, 1}));
    CHECK(power(make_linear(1, 4, 3), 4) == element(4, {1, 1, 2}));
}

TEST_CASE("power equals repeated multiplication") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<std::uint64_t> pick_n(2, 31);
    std::uniform_int_distribution<std::size_t> pick_r(1, 8);
    for (int trial = 0; trial < 12; ++trial) {
        const Natural n = pick_n(rng);
        const std::size_t r = pick_r(rng);
        const RingElement base = random_element(rng, n, r);
        RingElement expected = oracles::power_by_repeated_multiply(base, 0);
        for (std::uint64_t e = 0; e <= 64; ++e) {
            CHECK(power(base, e) == expected);
            expected = multiply(expected, base);
        }
    }
}

TEST_CASE("rhs_reference: pinned values") {
    CHECK(rhs_reference(1, 3, 2) == element(3, {1, 1}));
    CHECK(rhs_reference(1, 4, 3) == element(4, {1, 1, 0}));
    CHECK(rhs_reference(2, 6, 3) == element(6, {3, 0, 0}));
}

TEST_CASE("congruence_holds: pinned values") {
    CHECK(congruence_holds(1, 3, 2));
    CHECK_FALSE(congruence_holds(1, 4, 3));
    CHECK(congruence_holds(1, 7, 3));
    CHECK_THROWS_AS(congruence_holds(1, 7, 1), std::domain_error);
    CHECK_THROWS_AS(congruence_holds(1, 1, 3), std::domain_error);
}

TEST_CASE("freshman's dream holds for primes (spot range)") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 13ull, 31ull, 61ull}) {
        for (Natural r = 2; r <= 12; ++r) {
            for (Natural a = 0; a <= p; ++a) {
                CAPTURE(p);
                CAPTURE(r);
                CAPTURE(a);
                CHECK(congruence_holds(a, p, r));
            }
        }
    }
}

TEST_CASE("congruence fails for a composite") {
    // 91 = 7 * 13; a = 1 already breaks the congruence in either ring
    CHECK_FALSE(congruence_holds(1, 91, 4));
    CHECK_FALSE(congruence_holds(1, 91, 59));
}
