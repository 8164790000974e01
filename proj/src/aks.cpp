#include "aksbench/aks.hpp"

#include "aksbench/poly_ring.hpp"

#include <stdexcept>
#include <utility>

namespace aksbench {

Natural find_r(const Natural& n) {
    if (n < 2) {
        throw std::domain_error("find_r requires n >= 2");
    }
    const Natural threshold = bit_length(n) * bit_length(n);
    for (Natural r = 2;; ++r) {
        if (gcd(n, r) != 1) {
            continue;  // order undefined; a shared factor is step 3's job
        }
        const auto order = multiplicative_order(n, r);
        if (*order > threshold) {
            return r;
        }
    }
}

namespace {

AksResult run_aks(const Natural& n, const ProgressSink* progress) {
    if (n < 2) {
        throw std::domain_error("aks_test requires n >= 2");
    }

    // Step 1: perfect-power check.
    if (auto witness = is_perfect_power(n)) {
        return {Verdict{Outcome::Composite, 1, CompositeDetail(std::move(*witness))},
                AksTrace{std::nullopt, 0, 0}};
    }

    // Step 2: smallest r with ord_r(n) > bit_length(n)^2.
    const Natural r = find_r(n);

    // Step 3: gcd sweep over a in [2, r].
    for (Natural a = 2; a <= r; ++a) {
        const Natural g = gcd(a, n);
        if (g > 1 && g < n) {
            return {Verdict{Outcome::Composite, 3, CompositeDetail(SharedFactor{a, g})},
                    AksTrace{r, 0, 0}};
        }
    }

    // Step 4: small n is prime outright once the sweep found no factor.
    if (n <= r) {
        return {Verdict{Outcome::Prime, 4, std::nullopt}, AksTrace{r, 0, 0}};
    }

    // Step 5: congruence loop.
    const Natural total = witness_bound(r, n);
    for (Natural a = 1; a <= total; ++a) {
        if (progress != nullptr) {
            (*progress)(5, a, total);
        }
        if (!congruence_holds(a, n, r)) {
            return {Verdict{Outcome::Composite, 5, CompositeDetail(CongruenceWitness{a})},
                    AksTrace{r, total, a}};
        }
    }

    // Step 6.
    return {Verdict{Outcome::Prime, 6, std::nullopt}, AksTrace{r, total, total}};
}

}  // namespace

AksResult aks_test(const Natural& n) {
    return run_aks(n, nullptr);
}

AksResult aks_test_verbose(const Natural& n, const ProgressSink& progress) {
    return run_aks(n, progress ? &progress : nullptr);
}

}  // namespace aksbench
