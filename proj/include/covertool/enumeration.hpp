#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "covertool/covering.hpp"

namespace covertool {

// Exhaustive generation of k-class systems with moduli <= max_modulus, in
// canonical order (classes sorted by (n, a), repeats allowed), duplicate-free.
struct SearchSpace {
    int k = 0;
    Int max_modulus = 1;
    bool disjoint = false;
    bool cover = false;
    bool exact_cover = false;
    std::optional<int> m_system;
    bool distinct_moduli = false;
    bool sorted_moduli = true;  // canonical order is always sorted; kept for parity
};

// Calls yield for every matching system; stop early by returning false.
// Disjointness (and the m-system constraint generally) prunes on partial
// prefixes via pairwise compatibility: a(m), b(n) intersect iff gcd(m,n) | a-b.
// Every visited prefix counts against limits.work_ceiling.
void enumerate(const SearchSpace& space, const std::function<bool(const System&)>& yield,
               const Limits& limits = {});

std::vector<System> enumerate_all(const SearchSpace& space, const Limits& limits = {});

// Exact m-system test without a sieve: some point has multiplicity > m iff
// some (m+1)-subset of classes is pairwise compatible (pairwise-compatible
// congruences always have a common solution).
bool is_m_system_by_compatibility(std::span<const ResidueClass> classes, int m);

// Picks the cheaper of the clique test and the sieve; exact either way.
bool is_m_system_checked(const System& system, int m, const Limits& limits = {});

struct ConjectureScanResult {
    bool verified = true;
    std::vector<System> counterexamples;
    long long systems_checked = 0;
    int k = 0;
    Int max_modulus = 0;  // the desk-scale restriction, reported honestly
};

// Every disjoint k-class system with moduli <= max_modulus must contain a
// pair with gcd(n_s, n_t) >= k.
ConjectureScanResult conjecture_1_1_scan(int k, Int max_modulus, const Limits& limits = {});

// Some m_1..m_k with m_s in [1, m*n_s] and sum m_s/n_s = m, for an m-system.
// Existence is guaranteed; exhausting the search throws TheoremViolated.
std::vector<Int> find_unit_weight_representation(const System& system, int m,
                                                 const Limits& limits = {});

}  // namespace covertool
