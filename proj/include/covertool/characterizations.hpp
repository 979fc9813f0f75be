#pragma once

#include <cstdint>
#include <vector>

#include "covertool/subset_sums.hpp"

namespace covertool {

struct Lemma21Certificate {
    bool divides = false;                      // min_r M_r >= m
    std::vector<std::int32_t> multiplicities;  // M_r for r in [0, N)
    bool weights_coprime = false;              // converse direction applies
};

// Root-multiplicity certificate for divisibility of
// prod_s (1 - z^(N*m_s/n_s) e^(2*pi*i*a_s*m_s/n_s)) by (1 - z^N)^m, where
// M_r = |{s : n_s | m_s(r + a_s)}|. When all gcd(m_s, n_s) = 1 the verdict is
// checked against the m-cover scan (CharacterizationMismatch on a mismatch).
Lemma21Certificate lemma_2_1_certificate(const WeightedSystem& ws, int m,
                                         const Limits& limits = {});

// Literal route for small N (<= 48): multiply the factors over Z[zeta_N] and
// divide by (1 - z^N) m times, checking exactness.
bool lemma_2_1_division_crosscheck(const WeightedSystem& ws, int m, const Limits& limits = {});

// The signed binomial exponential sum over tuples m_1..m_k >= 1 with
// sum m_s/n_s - alpha a nonnegative integer j: terms (-1)^j binom(n, j)
// e^(2*pi*i*sum a_s*m_s/n_s). For alpha in [0,1) this is the S(n, alpha) of
// the m-system characterization; alpha >= 1 is accepted (the shifted sums
// appear in the recurrence S(n, alpha+1) = S(n, alpha) - S(n+1, alpha)).
struct SAlphaSum {
    long long n = 0;
    Rational alpha;
    CyclotomicElement value;
};

SAlphaSum s_alpha(const System& system, long long n, const Rational& alpha,
                  const Limits& limits = {});

// m-system iff S(n, 0) = (-1)^k and S(n, alpha) = 0 for 0 < alpha < 1, for all
// n in [m, k). Returns whether the identities hold; disagreement with the
// direct scan throws CharacterizationMismatch.
bool theorem_1_3_check(const System& system, int m, const Limits& limits = {});

// m-cover identities: for all achievable theta and n in [0, m-1], the signed
// binomial subset sum vanishes. Equivalence with the direct scan is asserted
// when all weights are coprime to their moduli.
bool lemma_3_1_check(const WeightedSystem& ws, int m, const Limits& limits = {});

// m-system identities over tuples x_s in [0, n_s): for all achievable theta
// and n in [0, k-m), the binomial tuple sum vanishes. Always asserted against
// the direct scan.
bool theorem_3_1_check(const System& system, int m, const Limits& limits = {});

// Disjoint-system identity: sum over tuples with sum m_s/n_s = 1 of
// e^(2*pi*i*sum a_s*m_s/n_s) equals (-1)^(k-1).
bool corollary_1_5_check(const System& system, const Limits& limits = {});

// m-system identity with generalized binomials: sum over tuples m_s in [1,n_s]
// with m - sum m_s/n_s in N of binom(k-1-sum, m-sum) e^(2*pi*i*...) equals
// (-1)^(k-m).
bool corollary_3_1_check(const System& system, int m, const Limits& limits = {});

}  // namespace covertool
