#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "covertool/covering.hpp"
#include "covertool/cyclotomic.hpp"
#include "covertool/system.hpp"

namespace covertool {

// A system together with positive integer weights m_1..m_k on its regular
// classes. The quantity m = floor(sum m_s/n_s) is always derived on demand.
struct WeightedSystem {
    System system;
    std::vector<Int> weights;

    WeightedSystem(System sys, std::vector<Int> w);
    static WeightedSystem unit(System sys);  // all weights 1

    int k() const { return system.k(); }
    Rational weight_sum() const;  // sum of m_s/n_s
    int m_floor() const;          // floor(weight_sum)
    bool weights_coprime() const;  // gcd(m_s, n_s) = 1 for every s
};

// One distinct subset-sum value: how many subsets I of [1,k] hit it, which
// ones (bitmask bit s-1 <-> index s, capped list), and the signed exponential
// sum over those subsets as an exact element of Z[zeta_N].
struct SumValueEntry {
    BigInt count;
    std::vector<std::uint32_t> witnesses;
    CyclotomicElement csum;
};

struct SumClassTable {
    Int order = 1;  // N = lcm of all moduli (head included when present)
    std::size_t witness_cap = 1024;
    std::map<Rational, SumValueEntry> values;
};

// Exhaustive over all 2^k subsets, visited in ascending bitmask order.
// Throws TooManySubsets for k > 30.
SumClassTable build_sum_table(const WeightedSystem& ws, std::size_t witness_cap = 1024,
                              const Limits& limits = {});

enum class Theorem11Branch { Vanishing, Counting };

struct Theorem11Row {
    long long a = 0;
    Rational value;              // (alpha + a)/n_0
    BigInt count;                // subsets I with sum = value
    BigInt required;             // binom(m, floor(a/n_0))
    bool csum_zero = false;      // signed exponential sum over the class vanishes
    std::vector<std::uint32_t> witnesses;
};

struct Theorem11Report {
    Theorem11Branch branch = Theorem11Branch::Vanishing;
    int m = 0;
    Rational alpha;
    bool vanishing_holds = false;
    bool counting_holds = false;
    std::vector<Theorem11Row> rows;
};

// The dichotomy for a distinguished system: either every class's signed
// exponential sum vanishes, or every class is at least binomially large.
// Preconditions: distinguished head, 0 <= alpha < 1, and min multiplicity of
// the full system exceeds m = floor(sum m_s/n_s). Throws TheoremViolated if
// neither branch holds (that would falsify the dichotomy).
Theorem11Report theorem_1_1_report(const WeightedSystem& ws, const Rational& alpha,
                                   const Limits& limits = {});

struct CountingBoundResult {
    bool ok = true;
    std::optional<long long> first_violation;  // the offending a, when !ok
    std::vector<Theorem11Row> rows;
};

// Unit-weight counting bound at alpha = 0 for a distinguished system whose
// covering function everywhere exceeds m = floor(sum 1/n_s).
CountingBoundResult corollary_1_1_check(const System& script_a, const Limits& limits = {});

struct TupleCountRow {
    int n = 0;
    BigInt count;     // tuples (m_1..m_k), m_s in [1, n_s], with sum m_s/n_s = n
    BigInt required;  // binom(k - m, n - m)
};

struct Corollary12Result {
    bool ok = true;
    int m = 0;  // ceil(sum 1/n_s)
    std::vector<TupleCountRow> rows;
};

// Tuple counting bound for an m-system with m = ceil(sum 1/n_s).
Corollary12Result corollary_1_2_check(const System& system, const Limits& limits = {});

struct Corollary13Result {
    bool unique = false;   // no other subset shares J's sum
    bool ineq_1_9 = false;   // {n_0*sum_J} + {n_0*sum_Jbar} < 1
    bool ineq_1_10 = false;  // sum_J >= m or sum_Jbar >= m
    Rational j_sum;
};

// J is a set of 1-based regular indices. The inequalities are required only
// when J's sum is unique; they are reported either way.
Corollary13Result corollary_1_3_check(const WeightedSystem& ws, const std::vector<int>& J,
                                      const Limits& limits = {});

struct Alternatives {
    bool alt1 = false;
    bool alt2 = false;
};

// For an m-cover sorted by modulus with tail block n_{k-l} < n_{k-l+1} = ... = n_k:
// either the first k-r reciprocals already sum to >= m, or binom(l, r) lies in
// the semigroup D(n_k). Throws TheoremViolated if both fail.
Alternatives corollary_1_4_check(const System& system, int m, long long r,
                                 const Limits& limits = {});

struct RepresentableResult {
    std::set<Int> representable;        // n in [1,k] hit by some tuple sum
    std::vector<Int> non_representable;
};

// Integers n in [1,k] expressible as sum m_s/n_s with m_s in [1, n_s]. When
// the system is an m-system (m = max multiplicity), at most m-1 integers may
// be missing; a larger gap throws TheoremViolated.
RepresentableResult representable_integers(const System& system, const Limits& limits = {});

}  // namespace covertool
