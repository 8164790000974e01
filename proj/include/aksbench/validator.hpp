#pragma once

#include "aksbench/natural.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aksbench {

/// Outcome of auditing an (n, r) pair against the order condition
/// ord_r(n) > bit_length(n)^2 that a correct r selection must satisfy.
struct ValidationReport {
    Natural n;
    Natural r;
    Natural n_bit_length;
    std::optional<Natural> order;  // empty when gcd(n, r) > 1
    Natural required_threshold;    // n_bit_length^2
    bool valid;                    // order present and order > required_threshold
    std::string reason;
};

/// Audits one pair. Unsuitability is the finding, not an error: this only
/// throws when n < 2 or r < 2.
ValidationReport validate(const Natural& n, const Natural& r);

/// One report per pair, input order preserved. The first pair violating the
/// validate preconditions aborts the batch with a domain error naming its
/// zero-based index.
std::vector<ValidationReport> audit_batch(std::span<const std::pair<Natural, Natural>> pairs);

/// Reads the batch file format: one decimal pair "n r" per line, blank lines
/// skipped, "#" starts a comment. Throws std::runtime_error naming the line
/// number on malformed input.
std::vector<std::pair<Natural, Natural>> read_batch_file(std::istream& in);

}  // namespace aksbench
