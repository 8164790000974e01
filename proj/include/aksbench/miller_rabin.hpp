#pragma once

#include "aksbench/natural.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace aksbench {

/// n - 1 = 2^s * t with t odd.
struct MrDecomposition {
    Natural s;
    Natural t;

    bool operator==(const MrDecomposition&) const = default;
};

enum class MrOutcome { ProbablyPrime, Composite };

/// Splits n - 1 into 2^s * t, t odd. Requires n >= 3 and n odd.
MrDecomposition decompose(const Natural& n);

/// One squaring-chain round: computes base^t mod n, then up to s - 1
/// squarings. PROBABLY_PRIME iff base^t is 1 or n-1, or some squaring hits
/// n-1 before reaching 1. Requires n >= 3 odd and 2 <= base <= n - 2.
MrOutcome mr_round(const Natural& n, const Natural& base);

/// Full test over a base set: COMPOSITE iff any usable round reports
/// COMPOSITE. n = 2 is PROBABLY_PRIME and even n > 2 COMPOSITE outright.
/// Bases are reduced mod n first; a base reducing to 0, 1 or n-1 carries no
/// information and is skipped. An empty base sequence with odd n >= 3 is a
/// domain error. With default_bases() the answer is deterministic and
/// correct for all n below 3.3e14.
MrOutcome mr_test(const Natural& n, std::span<const Natural> bases);

/// The first twelve primes; a fixed base set that keeps runs reproducible.
const std::vector<Natural>& default_bases();

/// Uniformly random bases in [2, n - 2], seeded for reproducibility.
/// Requires n >= 5.
std::vector<Natural> random_bases(const Natural& n, std::size_t count, std::uint64_t seed);

}  // namespace aksbench
