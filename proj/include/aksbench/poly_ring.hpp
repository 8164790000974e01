#pragma once

#include "aksbench/natural.hpp"

#include <cstddef>
#include <vector>

namespace aksbench {

/// An element of Z_n[X]/(X^r - 1), stored densely: coefficients()[i] is the
/// coefficient of X^i, always reduced into [0, n). Elements are immutable
/// after construction.
class RingElement {
public:
    /// The zero polynomial in Z_modulus[X]/(X^degree - 1).
    /// Requires modulus >= 2 and degree >= 1.
    RingElement(Natural modulus, std::size_t ring_degree);

    /// Builds an element from raw coefficients (length = ring degree); each
    /// entry is reduced modulo the modulus.
    RingElement(Natural modulus, std::vector<Natural> coefficients);

    const Natural& modulus() const { return modulus_; }
    std::size_t ring_degree() const { return coefficients_.size(); }
    const Natural& coefficient(std::size_t i) const { return coefficients_[i]; }
    const std::vector<Natural>& coefficients() const { return coefficients_; }

    bool operator==(const RingElement&) const = default;

private:
    Natural modulus_;
    std::vector<Natural> coefficients_;
};

/// The polynomial X + a in Z_n[X]/(X^r - 1). Requires n >= 2, r >= 1.
/// In the degenerate r = 1 ring X is identified with 1, so the single
/// coefficient is (1 + a) mod n.
RingElement make_linear(const Natural& a, const Natural& n, const Natural& r);

/// Exact product with index wraparound (X^r == 1) and coefficients mod n.
/// Schoolbook; the product coefficient for slot (i+j) mod r is accumulated
/// on the fly rather than materializing the degree-(2r-2) intermediate.
/// Operands must live in the same ring.
RingElement multiply(const RingElement& p, const RingElement& q);

/// base^exponent by left-to-right binary exponentiation (square, then
/// conditionally multiply). exponent 0 yields the constant 1.
RingElement power(const RingElement& base, const Natural& exponent);

/// The reference right-hand side X^n + a reduced in Z_n[X]/(X^r - 1):
/// slot n mod r gets 1, slot 0 gets a (summed when n mod r == 0).
RingElement rhs_reference(const Natural& a, const Natural& n, const Natural& r);

/// Whether (X + a)^n == X^n + a holds in Z_n[X]/(X^r - 1). This is the
/// congruence the AKS witness loop evaluates. Requires n >= 2, r >= 2.
bool congruence_holds(const Natural& a, const Natural& n, const Natural& r);

/// Coefficient count, 2r - 1, of the widest intermediate a repeated-squaring
/// step would hold before wraparound reduction if the full double-length
/// product were materialized. Consumed by the storage estimator; the
/// arithmetic above folds eagerly and never allocates it.
Natural peak_intermediate_coefficients(const Natural& r);

}  // namespace aksbench
