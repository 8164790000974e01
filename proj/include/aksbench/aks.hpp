#pragma once

#include "aksbench/natural.hpp"
#include "aksbench/number_theory.hpp"

#include <functional>
#include <optional>
#include <variant>

namespace aksbench {

enum class Outcome { Prime, Composite };

/// Step-3 evidence: gcd(probe, n) = divisor with 1 < divisor < n.
struct SharedFactor {
    Natural probe;
    Natural divisor;

    bool operator==(const SharedFactor&) const = default;
};

/// Step-5 evidence: the smallest a for which the ring congruence fails.
struct CongruenceWitness {
    Natural a;

    bool operator==(const CongruenceWitness&) const = default;
};

using CompositeDetail = std::variant<PerfectPowerWitness, SharedFactor, CongruenceWitness>;

/// The test's outcome together with which step decided it and, for
/// composites, a re-checkable piece of evidence. COMPOSITE always comes from
/// step 1, 3 or 5 with detail populated; PRIME from step 4 or 6 with none.
struct Verdict {
    Outcome outcome;
    int deciding_step;  // 1..6
    std::optional<CompositeDetail> detail;
};

/// Execution record: the selected ring size and how much of the witness loop
/// ran. chosen_r is absent when step 1 decided before r was ever selected.
struct AksTrace {
    std::optional<Natural> chosen_r;
    Natural witness_count;      // upper bound of the step-5 loop (0 if unreached)
    Natural witnesses_checked;  // <= witness_count
};

struct AksResult {
    Verdict verdict;
    AksTrace trace;
};

/// Smallest r >= 2 with gcd(n, r) = 1 and ord_r(n) > bit_length(n)^2.
/// Values of r sharing a factor with n are skipped (the order is undefined
/// there; the step-3 gcd sweep catches any shared factor). Requires n >= 2.
Natural find_r(const Natural& n);

/// The six-step deterministic test, executed strictly in printed order:
///   1. perfect-power check            -> COMPOSITE
///   2. select r
///   3. gcd(a, n) sweep for a in [2,r] -> COMPOSITE on a nontrivial factor
///   4. n <= r                         -> PRIME
///   5. congruence loop, a = 1 .. witness_bound(r, n)
///                                     -> COMPOSITE on the first failing a
///   6.                                -> PRIME
/// Requires n >= 2. The verdict matches the ground-truth primality of n.
AksResult aks_test(const Natural& n);

/// Progress callback: (step, a, total) once per step-5 witness, before that
/// witness is evaluated.
using ProgressSink = std::function<void(int step, const Natural& a, const Natural& total)>;

/// Same contract as aks_test, with progress events for the witness loop.
/// An exception thrown by the sink aborts the run and propagates.
AksResult aks_test_verbose(const Natural& n, const ProgressSink& progress);

}  // namespace aksbench
