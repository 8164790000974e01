#include "aksbench/miller_rabin.hpp"

#include <random>
#include <stdexcept>

namespace aksbench {

namespace mp = boost::multiprecision;

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

MrOutcome mr_round_u64(std::uint64_t n, std::uint64_t base) {
    std::uint64_t t = n - 1;
    unsigned s = 0;
    while ((t & 1) == 0) {
        t >>= 1;
        ++s;
    }
    std::uint64_t x = powmod_u64(base, t, n);
    if (x == 1 || x == n - 1) {
        return MrOutcome::ProbablyPrime;
    }
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return MrOutcome::ProbablyPrime;
        if (x == 1) return MrOutcome::Composite;  // nontrivial square root of 1
    }
    return MrOutcome::Composite;
}

}  // namespace

MrDecomposition decompose(const Natural& n) {
    if (n < 3 || n % 2 == 0) {
        throw std::domain_error("decompose requires odd n >= 3");
    }
    const Natural m = n - 1;
    const unsigned s = mp::lsb(m);
    return MrDecomposition{Natural(s), m >> s};
}

MrOutcome mr_round(const Natural& n, const Natural& base) {
    if (n < 3 || n % 2 == 0) {
        throw std::domain_error("mr_round requires odd n >= 3");
    }
    if (base < 2 || base > n - 2) {
        throw std::domain_error("mr_round requires 2 <= base <= n - 2");
    }
    if (fits_uint64(n)) {
        return mr_round_u64(to_uint64(n), to_uint64(base));
    }

    const auto [s, t] = decompose(n);
    Natural x = mp::powm(base, t, n);
    const Natural minus_one = n - 1;
    if (x == 1 || x == minus_one) {
        return MrOutcome::ProbablyPrime;
    }
    for (Natural i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == minus_one) return MrOutcome::ProbablyPrime;
        if (x == 1) return MrOutcome::Composite;
    }
    return MrOutcome::Composite;
}

MrOutcome mr_test(const Natural& n, std::span<const Natural> bases) {
    if (n < 2) {
        throw std::domain_error("mr_test requires n >= 2");
    }
    if (n == 2) {
        return MrOutcome::ProbablyPrime;
    }
    if (n % 2 == 0) {
        return MrOutcome::Composite;
    }
    if (bases.empty()) {
        throw std::domain_error("mr_test requires at least one base");
    }
    for (const Natural& raw : bases) {
        const Natural b = raw % n;
        if (b == 0 || b == 1 || b == n - 1) {
            continue;  // carries no information about n
        }
        if (mr_round(n, b) == MrOutcome::Composite) {
            return MrOutcome::Composite;
        }
    }
    return MrOutcome::ProbablyPrime;
}

const std::vector<Natural>& default_bases() {
    static const std::vector<Natural> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    return bases;
}

std::vector<Natural> random_bases(const Natural& n, std::size_t count, std::uint64_t seed) {
    if (n < 5) {
        throw std::domain_error("random_bases requires n >= 5");
    }
    std::mt19937_64 rng(seed);
    const Natural span = n - 3;  // bases land in [2, n - 2]
    const unsigned bits = mp::msb(span) + 1;
    std::vector<Natural> out;
    out.reserve(count);
    while (out.size() < count) {
        Natural draw = 0;
        for (unsigned produced = 0; produced < bits; produced += 64) {
            draw = (draw << 64) | rng();
        }
        draw >>= (64 - bits % 64) % 64;
        if (draw < span) {
            out.push_back(draw + 2);
        }
    }
    return out;
}

}  // namespace aksbench
