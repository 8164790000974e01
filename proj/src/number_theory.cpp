#include "aksbench/number_theory.hpp"

#include <limits>
#include <stdexcept>

namespace aksbench {

namespace mp = boost::multiprecision;

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Largest a with a^b <= n, by binary search on the exact power.
Natural nth_root_floor(const Natural& n, unsigned b) {
    const std::uint64_t bits = to_uint64(bit_length(n));
    Natural lo = 1;
    Natural hi = Natural(1) << (bits / b + 1);
    while (lo < hi) {
        Natural mid = (lo + hi + 1) >> 1;
        if (mp::pow(mid, b) <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace

std::optional<PerfectPowerWitness> is_perfect_power(const Natural& n) {
    if (n < 2) {
        throw std::domain_error("is_perfect_power requires n >= 2");
    }
    // a^b = n with a >= 2 forces b <= floor(log2 n) = bit_length(n) - 1.
    // Scanning exponents downward makes the first hit the maximal one.
    const std::uint64_t max_exponent = to_uint64(bit_length(n)) - 1;
    for (std::uint64_t b = max_exponent; b >= 2; --b) {
        Natural a = nth_root_floor(n, static_cast<unsigned>(b));
        if (a >= 2 && mp::pow(a, static_cast<unsigned>(b)) == n) {
            return PerfectPowerWitness{a, Natural(b)};
        }
    }
    return std::nullopt;
}

Natural gcd(const Natural& a, const Natural& b) {
    if (a == 0 && b == 0) {
        throw std::domain_error("gcd(0, 0) is undefined");
    }
    return mp::gcd(a, b);
}

std::optional<Natural> multiplicative_order(const Natural& n, const Natural& r) {
    if (r < 2) {
        throw std::domain_error("multiplicative_order requires r >= 2");
    }
    if (mp::gcd(n, r) != 1) {
        return std::nullopt;
    }
    if (fits_uint64(r)) {
        const std::uint64_t m = to_uint64(r);
        const std::uint64_t base = to_uint64(n % r);
        std::uint64_t acc = base;
        std::uint64_t k = 1;
        while (acc != 1) {
            acc = mulmod_u64(acc, base, m);
            ++k;
        }
        return Natural(k);
    }
    const Natural base = n % r;
    Natural acc = base;
    Natural k = 1;
    while (acc != 1) {
        acc = acc * base % r;
        ++k;
    }
    return k;
}

Natural euler_phi(const Natural& r) {
    if (r == 0) {
        throw std::domain_error("euler_phi requires r >= 1");
    }
    if (fits_uint64(r)) {
        std::uint64_t m = to_uint64(r);
        std::uint64_t phi = m;
        for (std::uint64_t p = 2; p <= m / p; ++p) {
            if (m % p == 0) {
                phi -= phi / p;
                while (m % p == 0) m /= p;
            }
        }
        if (m > 1) phi -= phi / m;
        return Natural(phi);
    }
    Natural m = r;
    Natural phi = r;
    for (Natural p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            phi -= phi / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) phi -= phi / m;
    return phi;
}

Natural bit_length(const Natural& n) {
    if (n == 0) {
        throw std::domain_error("bit_length requires n >= 1");
    }
    return Natural(mp::msb(n)) + 1;
}

Natural integer_sqrt(const Natural& n) {
    return mp::sqrt(n);
}

Natural witness_bound(const Natural& r, const Natural& n) {
    if (r < 2) {
        throw std::domain_error("witness_bound requires r >= 2");
    }
    if (n < 2) {
        throw std::domain_error("witness_bound requires n >= 2");
    }
    return (integer_sqrt(euler_phi(r)) + 1) * bit_length(n);
}

}  // namespace aksbench
