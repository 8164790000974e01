#pragma once

#include "aksbench/natural.hpp"

#include <string>
#include <vector>

namespace aksbench {

enum class ScenarioKind { AksUnconditional, AksArtin, MillerRabin };

const char* scenario_name(ScenarioKind kind);

/// One storage-model scenario. The AKS scenarios pick the ring size as
/// r = input_bits^r_exponent * k (exponent 5 unconditionally, 2 under the
/// Artin-conjecture regime); Miller-Rabin has no ring at all.
struct Scenario {
    ScenarioKind kind;
    unsigned r_exponent;  // 5 or 2 for AKS kinds, 0 otherwise
    Natural k;            // multiplier on r, default 1

    static Scenario aks_unconditional(Natural k = 1);
    static Scenario aks_artin(Natural k = 1);
    static Scenario miller_rabin();
};

/// Storage figures for one scenario at one input bit-length. All integer
/// fields are exact; human_readable renders storage_bytes in binary units
/// (KiB/MiB/GiB/...) together with a decimal-GB figure.
struct ResourceEstimate {
    ScenarioKind scenario;
    Natural input_bits;
    Natural r_value;  // 0 when not applicable (Miller-Rabin)
    Natural storage_bits;
    Natural storage_bytes;  // ceil(storage_bits / 8)
    std::string human_readable;
};

/// Working-set size of a Miller-Rabin run, in residues of input_bits bits
/// each (base, accumulator, modulus, t and scratch).
inline constexpr unsigned kMillerRabinResidues = 8;

/// The pessimistic storage model for one repeated-squaring step: all 2r - 1
/// coefficients of the unreduced double-length product, each held at full
/// input width. (2r - 1) * input_bits, exact.
Natural aks_storage_bits(const Natural& input_bits, const Natural& r);

ResourceEstimate estimate(const Scenario& scenario, const Natural& input_bits,
                          unsigned mr_residues = kMillerRabinResidues);

/// All three scenarios in fixed order: AKS unconditional, AKS Artin,
/// Miller-Rabin.
std::vector<ResourceEstimate> compare_table(const Natural& input_bits, const Natural& k = 1);

/// "256.00 PiB (2.88e+08 GB)"-style rendering of a byte count. Built with
/// integer arithmetic only.
std::string format_storage(const Natural& storage_bytes);

}  // namespace aksbench
