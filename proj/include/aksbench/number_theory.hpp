#pragma once

#include "aksbench/natural.hpp"

#include <optional>

namespace aksbench {

/// Certificate that a tested number equals base^exponent.
struct PerfectPowerWitness {
    Natural base;      // >= 2
    Natural exponent;  // >= 2, maximal over all valid representations

    bool operator==(const PerfectPowerWitness&) const = default;
};

/// Detects whether n (>= 2) is a^b with a >= 2, b >= 2. The returned witness
/// is canonical: the exponent is the largest possible, so 1024 reports (2, 10)
/// rather than (32, 2). Returns nullopt for non-powers.
std::optional<PerfectPowerWitness> is_perfect_power(const Natural& n);

/// Greatest common divisor; gcd(a, 0) == a. gcd(0, 0) is a domain error.
Natural gcd(const Natural& a, const Natural& b);

/// Least k >= 1 with n^k == 1 (mod r), or nullopt when gcd(n, r) > 1 and the
/// order is undefined. Requires r >= 2. Runs the plain iterative scan, which
/// is O(r) worst case; r stays polynomial in log n everywhere this is used.
std::optional<Natural> multiplicative_order(const Natural& n, const Natural& r);

/// Euler totient of r >= 1: the count of k in [1, r] with gcd(k, r) = 1.
/// Trial-division factorization; exact.
Natural euler_phi(const Natural& r);

/// Number of binary digits of n >= 1, i.e. floor(log2 n) + 1.
Natural bit_length(const Natural& n);

/// floor(sqrt(n)), exact.
Natural integer_sqrt(const Natural& n);

/// Upper bound of the witness loop: (integer_sqrt(euler_phi(r)) + 1) *
/// bit_length(n). This is a pure-integer over-approximation of
/// floor(sqrt(phi(r)) * log2 n); checking extra witnesses can only reject
/// composites, never misclassify a prime. Requires r >= 2 and n >= 2.
Natural witness_bound(const Natural& r, const Natural& n);

}  // namespace aksbench
