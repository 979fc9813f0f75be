#pragma once

#include <optional>
#include <vector>

#include "covertool/subset_sums.hpp"

namespace covertool {

// The numerical semigroup D(n) of nonnegative integer combinations of the
// prime divisors of n (n >= 2). 0 is a member, 1 never is.
class SemigroupD {
public:
    explicit SemigroupD(Int n);

    Int n() const { return n_; }
    const std::vector<Int>& prime_divisors() const { return primes_; }
    bool contains(const BigInt& t, const Limits& limits = {});
    bool contains(Int t, const Limits& limits = {}) { return contains(to_big(t), limits); }

private:
    Int n_;
    std::vector<Int> primes_;
    std::vector<char> member_;  // DP cache over [0, cached_to_]
    Int cached_to_ = -1;
};

bool d_membership(Int n, const BigInt& t, const Limits& limits = {});
inline bool d_membership(Int n, Int t, const Limits& limits = {}) {
    return d_membership(n, to_big(t), limits);
}

struct Theorem12Result {
    bool bound_holds = false;    // sum 1/n_s <= m - 1/2^(k-m+1)
    bool equality = false;
    bool extremal_form = false;  // n_s = 2^max(s-m+1, 0) for all s
    Rational sum;
    Rational bound;
};

// Extremal bound for an m-system with k >= m, sum != m, moduli sorted
// ascending. equality <=> extremal_form is asserted (TheoremViolated).
Theorem12Result theorem_1_2_check(const System& system, int m, const Limits& limits = {});

// Dual variant for an m-system with the tail block pattern: either
// sum 1/n_s <= m - r/n_k or binom(l+r-1, r) in D(n_k). The claim is tested
// empirically; a violation raises TheoremViolated for investigation.
Alternatives dual_variant_check(const System& system, int m, long long r,
                                const Limits& limits = {});

// For an exact m-cover: the multiplicity l of the largest modulus is at least
// the least prime divisor of n_k. All-equal moduli count as l = k.
bool newman_znam_check(const System& system, const Limits& limits = {});

struct ClassicalChecks {
    // Disjoint cover with n_1 > 1: the two largest moduli coincide.
    std::optional<bool> dmnr;
    // Disjoint with 1 < n_1 < ... < n_k strict: sum 1/n_s <= 1 - 1/2^k.
    std::optional<bool> erdos62;
};

// Throws PreconditionFailed when the input is not disjoint or neither
// pattern applies.
ClassicalChecks classical_disjoint_checks(const System& system, const Limits& limits = {});

// The equality family of the extremal bound: m-1 copies of 0(1) followed by
// 2^(j-1) (mod 2^j) for j = 1..k-m+1. An m-system with sum = m - 1/2^(k-m+1).
System extremal_m_system(int k, int m);

}  // namespace covertool
