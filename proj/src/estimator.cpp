#include "aksbench/estimator.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace aksbench {

namespace mp = boost::multiprecision;

namespace {

const Natural kGigabyte = Natural(1000000000);

// Floor of num/den with two fraction digits, e.g. fixed2(2560, 1024) = "2.50".
std::string fixed2(const Natural& num, const Natural& den) {
    const Natural whole = num / den;
    const Natural frac = (num % den) * 100 / den;
    std::string f = frac.str();
    if (f.size() < 2) f.insert(0, 2 - f.size(), '0');
    return whole.str() + "." + f;
}

// Scientific rendering of value * 10^-9 from the decimal digits of value.
std::string scientific_gb(const Natural& bytes) {
    const std::string digits = bytes.str();
    const long long exp10 = static_cast<long long>(digits.size()) - 1 - 9;
    std::string mantissa = digits.substr(0, 1) + ".";
    mantissa += digits.size() > 1 ? digits.substr(1, 2) : std::string();
    while (mantissa.size() < 4) mantissa.push_back('0');
    char sign = exp10 < 0 ? '-' : '+';
    long long mag = exp10 < 0 ? -exp10 : exp10;
    std::string e = std::to_string(mag);
    if (e.size() < 2) e.insert(0, "0");
    return mantissa + "e" + sign + e;
}

std::string decimal_gb(const Natural& bytes) {
    if (bytes == 0) {
        return "0.00";
    }
    // Fixed notation while it stays readable, scientific outside [0.01, 10^7) GB.
    if (bytes >= 10000000 && bytes < Natural("10000000000000000")) {
        return fixed2(bytes, kGigabyte);
    }
    return scientific_gb(bytes);
}

}  // namespace

const char* scenario_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::AksUnconditional: return "AKS_UNCONDITIONAL";
        case ScenarioKind::AksArtin: return "AKS_ARTIN";
        case ScenarioKind::MillerRabin: return "MILLER_RABIN";
    }
    return "UNKNOWN";
}

Scenario Scenario::aks_unconditional(Natural k) {
    return Scenario{ScenarioKind::AksUnconditional, 5, std::move(k)};
}

Scenario Scenario::aks_artin(Natural k) {
    return Scenario{ScenarioKind::AksArtin, 2, std::move(k)};
}

Scenario Scenario::miller_rabin() {
    return Scenario{ScenarioKind::MillerRabin, 0, 1};
}

Natural aks_storage_bits(const Natural& input_bits, const Natural& r) {
    if (input_bits < 1) {
        throw std::domain_error("aks_storage_bits requires input_bits >= 1");
    }
    if (r < 1) {
        throw std::domain_error("aks_storage_bits requires r >= 1");
    }
    return (2 * r - 1) * input_bits;
}

ResourceEstimate estimate(const Scenario& scenario, const Natural& input_bits,
                          unsigned mr_residues) {
    if (input_bits < 1) {
        throw std::domain_error("estimate requires input_bits >= 1");
    }
    Natural r = 0;
    Natural bits;
    if (scenario.kind == ScenarioKind::MillerRabin) {
        bits = Natural(mr_residues) * input_bits;
    } else {
        r = mp::pow(input_bits, scenario.r_exponent) * scenario.k;
        bits = aks_storage_bits(input_bits, r);
    }
    Natural bytes = (bits + 7) / 8;
    std::string human = format_storage(bytes);
    return ResourceEstimate{scenario.kind, input_bits,        std::move(r),
                            std::move(bits), std::move(bytes), std::move(human)};
}

std::vector<ResourceEstimate> compare_table(const Natural& input_bits, const Natural& k) {
    return {
        estimate(Scenario::aks_unconditional(k), input_bits),
        estimate(Scenario::aks_artin(k), input_bits),
        estimate(Scenario::miller_rabin(), input_bits),
    };
}

std::string format_storage(const Natural& storage_bytes) {
    static const std::array<const char*, 9> units = {"B",   "KiB", "MiB", "GiB", "TiB",
                                                     "PiB", "EiB", "ZiB", "YiB"};
    Natural unit = 1;
    std::size_t index = 0;
    while (index + 1 < units.size() && storage_bytes >= unit * 1024) {
        unit *= 1024;
        ++index;
    }
    return fixed2(storage_bytes, unit) + " " + units[index] + " (" + decimal_gb(storage_bytes) +
           " GB)";
}

}  // namespace aksbench
