#include "covertool/enumeration.hpp"

#include <algorithm>
#include <numeric>

namespace covertool {

namespace {

// Grows a pairwise-compatible clique of the given size among classes[idx...].
bool grow_clique(std::span<const ResidueClass> classes, std::vector<std::size_t>& chosen,
                 std::size_t start, int want) {
    if (static_cast<int>(chosen.size()) == want) return true;
    for (std::size_t i = start; i < classes.size(); ++i) {
        bool ok = true;
        for (std::size_t j : chosen)
            if (!classes[i].intersects(classes[j])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(i);
        if (grow_clique(classes, chosen, i + 1, want)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool is_m_system_by_compatibility(std::span<const ResidueClass> classes, int m) {
    if (m < 0) return false;
    if (static_cast<int>(classes.size()) <= m) return true;
    std::vector<std::size_t> chosen;
    return !grow_clique(classes, chosen, 0, m + 1);
}

bool is_m_system_checked(const System& system, int m, const Limits& limits) {
    // The clique search is exact but exponential in m; hand large cases to the sieve.
    const int k = system.k();
    if (m >= k) return true;
    BigInt combos = binomial(static_cast<long long>(k), static_cast<long long>(m) + 1);
    if (cmp(combos, 200'000) <= 0)
        return is_m_system_by_compatibility(system.regulars(), m);
    return classify(system, m, limits).is_m_system;
}

void enumerate(const SearchSpace& space, const std::function<bool(const System&)>& yield,
               const Limits& limits) {
    if (space.k < 0) throw Error("k must be nonnegative");
    if (space.max_modulus < 1) throw Error("max_modulus must be positive");

    std::vector<ResidueClass> pool;
    for (Int n = 1; n <= space.max_modulus; ++n)
        for (Int a = 0; a < n; ++a) pool.emplace_back(a, n);

    const int msys = space.disjoint ? std::min(space.m_system.value_or(1), 1)
                                    : space.m_system.value_or(-1);

    std::vector<ResidueClass> chosen;
    chosen.reserve(static_cast<std::size_t>(space.k));
    long long visited = 0;
    bool keep_going = true;

    auto leaf_ok = [&]() -> bool {
        if (!space.cover && !space.exact_cover) return true;
        if (msys == 1) {
            // A disjoint system covers iff the reciprocals sum to exactly 1.
            Rational sum;
            for (const auto& c : chosen) sum += Rational(1, c.n);
            return sum == Rational(1);
        }
        CoveringProfile prof = covering_profile(System(chosen), limits);
        if (space.exact_cover)
            return prof.min_multiplicity >= 1 && prof.min_multiplicity == prof.max_multiplicity;
        return prof.min_multiplicity >= 1;
    };

    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!keep_going) return;
        if (++visited > limits.work_ceiling)
            throw WorkCeilingExceeded("enumeration exceeded the work ceiling of " +
                                      std::to_string(limits.work_ceiling) + " prefixes");
        if (static_cast<int>(chosen.size()) == space.k) {
            if (leaf_ok()) keep_going = yield(System(chosen));
            return;
        }
        for (std::size_t i = start; i < pool.size() && keep_going; ++i) {
            const ResidueClass& c = pool[i];
            if (space.distinct_moduli && !chosen.empty() && c.n == chosen.back().n) continue;
            chosen.push_back(c);
            if (msys >= 0 && !is_m_system_by_compatibility(chosen, msys)) {
                chosen.pop_back();
                continue;
            }
            self(self, i);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<System> enumerate_all(const SearchSpace& space, const Limits& limits) {
    std::vector<System> out;
    enumerate(space, [&](const System& s) {
        out.push_back(s);
        return true;
    }, limits);
    return out;
}

ConjectureScanResult conjecture_1_1_scan(int k, Int max_modulus, const Limits& limits) {
    if (k < 2) throw PreconditionFailed("the conjecture concerns k >= 2");
    ConjectureScanResult result;
    result.k = k;
    result.max_modulus = max_modulus;

    SearchSpace space;
    space.k = k;
    space.max_modulus = max_modulus;
    space.disjoint = true;
    enumerate(space, [&](const System& s) {
        result.systems_checked++;
        bool found = false;
        for (int i = 1; i <= k && !found; ++i)
            for (int j = i + 1; j <= k && !found; ++j)
                found = std::gcd(s.regular(i).n, s.regular(j).n) >= k;
        if (!found) {
            result.verified = false;
            result.counterexamples.push_back(s);
        }
        return true;
    }, limits);
    return result;
}

std::vector<Int> find_unit_weight_representation(const System& system, int m,
                                                 const Limits& limits) {
    if (system.distinguished())
        throw PreconditionFailed("expects a plain system without a distinguished class");
    if (m < 1) throw PreconditionFailed("m must be positive");
    if (!is_m_system_checked(system, m, limits))
        throw PreconditionFailed("not an m-system for m = " + std::to_string(m));
    const int k = system.k();

    BigInt big_n = system.modulus_lcm();
    if (cmp(big_n, static_cast<long>(limits.sieve_ceiling)) > 0)
        throw SieveTooLarge("lcm of moduli exceeds the ceiling");
    const Int order = big_n.get_si();
    std::vector<Int> step(static_cast<std::size_t>(k));
    std::vector<Int> min_rest(static_cast<std::size_t>(k) + 1, 0);
    for (int s = 1; s <= k; ++s) step[static_cast<std::size_t>(s - 1)] = order / system.regular(s).n;
    for (int s = k; s-- > 0;)
        min_rest[static_cast<std::size_t>(s)] =
            min_rest[static_cast<std::size_t>(s) + 1] + step[static_cast<std::size_t>(s)];

    const Int target = static_cast<Int>(m) * order;
    std::vector<Int> tuple(static_cast<std::size_t>(k), 0);
    long long nodes = 0;
    // Lexicographically first solution; search space m_s in [1, m*n_s], each
    // tail class can contribute at most m*order to the scaled sum.
    auto rec = [&](auto&& self, int s, Int t) -> bool {
        if (++nodes > limits.tuple_ceiling)
            throw EnumerationTooLarge("tuple search exceeded the ceiling");
        if (s == k) return t == target;
        const auto i = static_cast<std::size_t>(s);
        const Int max_rest = static_cast<Int>(k - s - 1) * target;
        for (Int ms = 1; ms <= static_cast<Int>(m) * system.regular(s + 1).n; ++ms) {
            Int tt = t + ms * step[i];
            if (tt + min_rest[i + 1] > target) break;
            if (tt + max_rest < target) continue;
            tuple[i] = ms;
            if (self(self, s + 1, tt)) return true;
        }
        return false;
    };
    if (!rec(rec, 0, 0))
        throw TheoremViolated("no tuple with sum m_s/n_s = m was found for an m-system");
    return tuple;
}

}  // namespace covertool
