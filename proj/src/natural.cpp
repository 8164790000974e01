#include "aksbench/natural.hpp"

#include <cstdint>
#include <stdexcept>

namespace aksbench {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

Natural parse_natural(std::string_view text) {
    std::string digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c != '_') digits.push_back(c);
    }
    if (digits.empty()) {
        throw std::invalid_argument("empty number literal");
    }

    Natural value = 0;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
        for (std::size_t i = 2; i < digits.size(); ++i) {
            int d = hex_digit(digits[i]);
            if (d < 0) {
                throw std::invalid_argument("invalid hex digit in number literal: '" +
                                            std::string(1, digits[i]) + "'");
            }
            value = value * 16 + d;
        }
    } else {
        for (char c : digits) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("invalid decimal digit in number literal: '" +
                                            std::string(1, c) + "'");
            }
            value = value * 10 + (c - '0');
        }
    }
    return value;
}

bool fits_uint64(const Natural& value) {
    return value >= 0 && value <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t to_uint64(const Natural& value) {
    return value.convert_to<std::uint64_t>();
}

}  // namespace aksbench
