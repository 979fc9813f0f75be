#include "covertool/covering.hpp"

#include <algorithm>

namespace covertool {

CoveringProfile covering_profile(const System& system, const Limits& limits) {
    BigInt big_n = system.modulus_lcm();
    if (cmp(big_n, static_cast<long>(limits.sieve_ceiling)) > 0)
        throw SieveTooLarge("lcm of moduli " + big_n.get_str() + " exceeds sieve ceiling " +
                            std::to_string(limits.sieve_ceiling));
    Int n = static_cast<Int>(big_n.get_si());

    CoveringProfile p;
    p.period = n;
    p.counts.assign(static_cast<std::size_t>(n), 0);
    for (const auto& c : system.all())
        for (Int x = c.a; x < n; x += c.n) p.counts[static_cast<std::size_t>(x)]++;

    auto [lo, hi] = std::minmax_element(p.counts.begin(), p.counts.end());
    p.min_multiplicity = *lo;
    p.max_multiplicity = *hi;

    long long total = 0;
    for (auto c : p.counts) total += c;
    p.average = Rational(total, n);
    return p;
}

Classification classify(const System& system, int m, const Limits& limits) {
    if (m < 0) throw Error("classify: m must be nonnegative");
    CoveringProfile p = covering_profile(system, limits);
    return Classification{
        .is_m_cover = p.min_multiplicity >= m,
        .is_exact_m_cover = p.min_multiplicity == m && p.max_multiplicity == m,
        .is_m_system = p.max_multiplicity <= m,
    };
}

System dual(const System& system) {
    std::vector<ResidueClass> shifted;
    for (const auto& c : system.all())
        for (Int r = 1; r < c.n; ++r) shifted.emplace_back(c.a + r, c.n);
    return System(std::move(shifted), false);
}

bool check_duality(const System& system, const Limits& limits) {
    CoveringProfile pa = covering_profile(system, limits);
    CoveringProfile pd = covering_profile(dual(system), limits);
    // The dual's period divides the original's (it loses only moduli = 1).
    auto total = static_cast<std::int32_t>(system.size());
    for (Int x = 0; x < pa.period; ++x) {
        auto wd = pd.counts[static_cast<std::size_t>(x % pd.period)];
        if (pa.counts[static_cast<std::size_t>(x)] + wd != total) return false;
    }
    return true;
}

}  // namespace covertool
