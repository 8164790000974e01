#include "aksbench/poly_ring.hpp"

#include "aksbench/number_theory.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace aksbench {

namespace mp = boost::multiprecision;

namespace {

std::size_t degree_from_natural(const Natural& r) {
    if (r < 1) {
        throw std::domain_error("ring degree must be >= 1");
    }
    if (!fits_uint64(r) || to_uint64(r) > std::numeric_limits<std::size_t>::max()) {
        throw std::length_error("ring degree too large to materialize");
    }
    return static_cast<std::size_t>(to_uint64(r));
}

void require_same_ring(const RingElement& p, const RingElement& q) {
    if (p.modulus() != q.modulus() || p.ring_degree() != q.ring_degree()) {
        throw std::domain_error("ring mismatch: operands must share modulus and degree");
    }
}

// Coefficient arithmetic fits native words once the modulus is below 2^32:
// products stay under 2^64 and a 128-bit slot absorbs r of them without
// overflow for any realizable r.
constexpr std::uint64_t kNarrowModulusMax = 0xFFFFFFFFull;

std::vector<std::uint64_t> narrow_coefficients(const RingElement& e) {
    std::vector<std::uint64_t> out(e.ring_degree());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = to_uint64(e.coefficient(i));
    }
    return out;
}

std::size_t nonzero_count(const std::vector<std::uint64_t>& v) {
    std::size_t count = 0;
    for (auto c : v) count += (c != 0);
    return count;
}

RingElement multiply_narrow(const RingElement& p, const RingElement& q) {
    const std::size_t r = p.ring_degree();
    const std::uint64_t n = to_uint64(p.modulus());

    std::vector<std::uint64_t> a = narrow_coefficients(p);
    std::vector<std::uint64_t> b = narrow_coefficients(q);
    // Iterate the sparser operand on the outside; multiplying by X + a then
    // costs O(r) instead of O(r^2).
    if (nonzero_count(a) > nonzero_count(b)) a.swap(b);

    std::vector<unsigned __int128> acc(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0) continue;
        const std::size_t split = r - i;  // i + j wraps past r from here on
        for (std::size_t j = 0; j < split; ++j) {
            acc[i + j] += static_cast<unsigned __int128>(ai) * b[j];
        }
        for (std::size_t j = split; j < r; ++j) {
            acc[i + j - r] += static_cast<unsigned __int128>(ai) * b[j];
        }
    }

    std::vector<Natural> out(r);
    for (std::size_t k = 0; k < r; ++k) {
        out[k] = static_cast<std::uint64_t>(acc[k] % n);
    }
    return RingElement(p.modulus(), std::move(out));
}

RingElement multiply_wide(const RingElement& p, const RingElement& q) {
    const std::size_t r = p.ring_degree();
    const Natural& n = p.modulus();

    std::vector<Natural> acc(r, Natural(0));
    for (std::size_t i = 0; i < r; ++i) {
        const Natural& pi = p.coefficient(i);
        if (pi == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            const Natural& qj = q.coefficient(j);
            if (qj == 0) continue;
            std::size_t k = i + j;
            if (k >= r) k -= r;
            acc[k] += pi * qj;
        }
    }
    for (auto& c : acc) c %= n;
    return RingElement(n, std::move(acc));
}

}  // namespace

RingElement::RingElement(Natural modulus, std::size_t ring_degree)
    : modulus_(std::move(modulus)), coefficients_(ring_degree, Natural(0)) {
    if (modulus_ < 2) {
        throw std::domain_error("ring modulus must be >= 2");
    }
    if (ring_degree == 0) {
        throw std::domain_error("ring degree must be >= 1");
    }
}

RingElement::RingElement(Natural modulus, std::vector<Natural> coefficients)
    : modulus_(std::move(modulus)), coefficients_(std::move(coefficients)) {
    if (modulus_ < 2) {
        throw std::domain_error("ring modulus must be >= 2");
    }
    if (coefficients_.empty()) {
        throw std::domain_error("ring degree must be >= 1");
    }
    for (auto& c : coefficients_) {
        c %= modulus_;
    }
}

RingElement make_linear(const Natural& a, const Natural& n, const Natural& r) {
    if (n < 2) {
        throw std::domain_error("make_linear requires n >= 2");
    }
    const std::size_t degree = degree_from_natural(r);
    std::vector<Natural> coeffs(degree, Natural(0));
    if (degree == 1) {
        coeffs[0] = (1 + a) % n;  // X == 1 in the degenerate ring
    } else {
        coeffs[0] = a % n;
        coeffs[1] = 1;
    }
    return RingElement(n, std::move(coeffs));
}

RingElement multiply(const RingElement& p, const RingElement& q) {
    require_same_ring(p, q);
    if (p.modulus() <= kNarrowModulusMax) {
        return multiply_narrow(p, q);
    }
    return multiply_wide(p, q);
}

RingElement power(const RingElement& base, const Natural& exponent) {
    if (exponent == 0) {
        std::vector<Natural> one(base.ring_degree(), Natural(0));
        one[0] = 1;
        return RingElement(base.modulus(), std::move(one));
    }
    // Most-significant bit first: square, then multiply when the bit is set.
    const unsigned top = mp::msb(exponent);
    RingElement result = base;
    for (unsigned i = top; i-- > 0;) {
        result = multiply(result, result);
        if (mp::bit_test(exponent, i)) {
            result = multiply(result, base);
        }
    }
    return result;
}

RingElement rhs_reference(const Natural& a, const Natural& n, const Natural& r) {
    if (n < 2) {
        throw std::domain_error("rhs_reference requires n >= 2");
    }
    const std::size_t degree = degree_from_natural(r);
    std::vector<Natural> coeffs(degree, Natural(0));
    const std::size_t slot = static_cast<std::size_t>(to_uint64(n % r));
    coeffs[slot] += 1;
    coeffs[0] = (coeffs[0] + a) % n;
    return RingElement(n, std::move(coeffs));
}

bool congruence_holds(const Natural& a, const Natural& n, const Natural& r) {
    if (n < 2) {
        throw std::domain_error("congruence_holds requires n >= 2");
    }
    if (r < 2) {
        throw std::domain_error("congruence_holds requires r >= 2");
    }
    RingElement lhs = power(make_linear(a, n, r), n);
    return lhs == rhs_reference(a, n, r);
}

Natural peak_intermediate_coefficients(const Natural& r) {
    if (r < 1) {
        throw std::domain_error("peak_intermediate_coefficients requires r >= 1");
    }
    return 2 * r - 1;
}

}  // namespace aksbench
