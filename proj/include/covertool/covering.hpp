#pragma once

#include <cstdint>
#include <vector>

#include "covertool/system.hpp"

namespace covertool {

// The covering function w_A over one period [0, N), N = lcm of the moduli.
struct CoveringProfile {
    Int period = 1;
    std::vector<std::int32_t> counts;  // counts[x] = w_A(x), length = period
    std::int32_t min_multiplicity = 0;
    std::int32_t max_multiplicity = 0;
    Rational average;  // (sum of counts)/period = sum of 1/n_s over all classes
};

// Sieve over one period: each class steps through its residues, total cost
// sum_s N/n_s. Throws SieveTooLarge when lcm exceeds limits.sieve_ceiling.
CoveringProfile covering_profile(const System& system, const Limits& limits = {});

struct Classification {
    bool is_m_cover = false;        // w_A(x) >= m everywhere
    bool is_exact_m_cover = false;  // w_A(x) == m everywhere
    bool is_m_system = false;       // w_A(x) <= m everywhere
};

Classification classify(const System& system, int m, const Limits& limits = {});

// Dual system: all shifted classes a_s + r (mod n_s), 1 <= r < n_s, ordered by
// (s, r). Treats every class of the input (head included) as a member; the
// result carries no distinguished class.
System dual(const System& system);

// w_A(x) + w_{A*}(x) = k for all x, k = number of classes dualized.
bool check_duality(const System& system, const Limits& limits = {});

}  // namespace covertool
