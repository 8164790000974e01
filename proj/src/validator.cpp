#include "aksbench/validator.hpp"

#include "aksbench/number_theory.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace aksbench {

ValidationReport validate(const Natural& n, const Natural& r) {
    if (n < 2) {
        throw std::domain_error("validate requires n >= 2");
    }
    if (r < 2) {
        throw std::domain_error("validate requires r >= 2");
    }
    ValidationReport report;
    report.n = n;
    report.r = r;
    report.n_bit_length = bit_length(n);
    report.required_threshold = report.n_bit_length * report.n_bit_length;
    report.order = multiplicative_order(n, r);

    if (!report.order) {
        report.valid = false;
        report.reason =
            "ord_r(n) undefined: n and r share the factor " + gcd(n, r).str();
    } else if (*report.order > report.required_threshold) {
        report.valid = true;
        report.reason = "ord_r(n) = " + report.order->str() + " exceeds bit_length(n)^2 = " +
                        report.required_threshold.str();
    } else {
        report.valid = false;
        report.reason = "ord_r(n) = " + report.order->str() +
                        " does not exceed bit_length(n)^2 = " + report.required_threshold.str() +
                        "; this r cannot certify n";
    }
    return report;
}

std::vector<ValidationReport> audit_batch(std::span<const std::pair<Natural, Natural>> pairs) {
    std::vector<ValidationReport> reports;
    reports.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        try {
            reports.push_back(validate(pairs[i].first, pairs[i].second));
        } catch (const std::domain_error& e) {
            throw std::domain_error("pair " + std::to_string(i) + ": " + e.what());
        }
    }
    return reports;
}

std::vector<std::pair<Natural, Natural>> read_batch_file(std::istream& in) {
    std::vector<std::pair<Natural, Natural>> pairs;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string first, second, extra;
        if (!(fields >> first)) {
            continue;  // blank or comment-only line
        }
        if (!(fields >> second) || (fields >> extra)) {
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": expected exactly two integers \"n r\"");
        }
        try {
            pairs.emplace_back(parse_natural(first), parse_natural(second));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return pairs;
}

}  // namespace aksbench
