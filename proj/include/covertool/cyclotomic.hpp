#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "covertool/rational.hpp"

namespace covertool {

// Element of Z[zeta_N] represented in the group ring Z[x]/(x^N - 1): the
// coefficient vector of sum_j coeffs[j] * zeta_N^j. Sums of roots of unity
// append in O(1); the zero test reduces modulo Phi_N, which is exact.
class CyclotomicElement {
public:
    explicit CyclotomicElement(Int order = 1);
    static CyclotomicElement from_integer(Int order, BigInt value);

    Int order() const { return order_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    void add_term(Int exponent, const BigInt& c);  // coeffs[exponent mod N] += c

    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    CyclotomicElement operator*(const CyclotomicElement& o) const;
    CyclotomicElement operator-() const;
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) {
        return a += b;
    }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) {
        return a -= b;
    }

    // Zero in Z[zeta_N], i.e. the coefficient polynomial is divisible by Phi_N.
    bool is_zero() const;
    bool equals(const CyclotomicElement& o) const;

    // Product of all Galois conjugates sigma_r (r coprime to N); a rational
    // integer for every element. Throws NormNotRationalInteger only on an
    // internal inconsistency.
    BigInt galois_norm() const;

    std::string str() const;  // nonzero terms as "c*z^j" combinations

private:
    Int order_;
    std::vector<BigInt> coeffs_;
};

CyclotomicElement root_of_unity(Int order, Int exponent);  // zeta_N^(exponent mod N)

// Phi_n as an exact integer polynomial; coeffs[i] is the x^i coefficient.
struct CyclotomicPolynomial {
    Int n = 1;
    std::vector<BigInt> coeffs;
    Int degree() const { return static_cast<Int>(coeffs.size()) - 1; }
};

// Cached; safe to call concurrently. Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
const CyclotomicPolynomial& cyclotomic_poly(Int n);

// Whether sum over l-subsets J of [1,n) of zeta_n^(sum of J) equals (-1)^l.
bool lemma_3_2_check(Int n, Int l);

// Exact vanishing test for sum_j coeffs[j] * zeta_N^j with machine-int
// coefficients; used by the sweep-heavy checks. Same criterion as
// CyclotomicElement::is_zero.
bool vanishes_in_cyclotomic(std::span<const std::int64_t> coeffs, Int order);

}  // namespace covertool
