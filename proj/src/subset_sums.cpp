#include "covertool/subset_sums.hpp"

#include <algorithm>
#include <numeric>

#include "covertool/extremal.hpp"

namespace covertool {

WeightedSystem::WeightedSystem(System sys, std::vector<Int> w)
    : system(std::move(sys)), weights(std::move(w)) {
    if (weights.size() != static_cast<std::size_t>(system.k()))
        throw Error("need one weight per regular class");
    for (Int m : weights)
        if (m < 1) throw Error("weights must be positive");
}

WeightedSystem WeightedSystem::unit(System sys) {
    std::vector<Int> w(static_cast<std::size_t>(sys.k()), 1);
    return WeightedSystem(std::move(sys), std::move(w));
}

Rational WeightedSystem::weight_sum() const {
    Rational s;
    for (int i = 1; i <= k(); ++i) s += Rational(weights[static_cast<std::size_t>(i - 1)],
                                                 system.regular(i).n);
    return s;
}

int WeightedSystem::m_floor() const {
    BigInt f = weight_sum().floor();
    if (!f.fits_sint_p()) throw Error("floor(sum m_s/n_s) out of range");
    return static_cast<int>(f.get_si());
}

bool WeightedSystem::weights_coprime() const {
    for (int s = 1; s <= k(); ++s)
        if (std::gcd(weights[static_cast<std::size_t>(s - 1)], system.regular(s).n) != 1)
            return false;
    return true;
}

namespace {

// Scaled view of the regular classes over N = lcm of all moduli: index s
// contributes value m_s*(N/n_s) and phase a_s*m_s*(N/n_s) mod N.
struct ScaledClasses {
    Int order = 1;
    std::vector<BigInt> value;       // exact, weights may be large
    std::vector<Int> phase;          // already reduced mod order
};

ScaledClasses scale_classes(const WeightedSystem& ws, const Limits& limits) {
    BigInt big_n = ws.system.modulus_lcm();
    if (cmp(big_n, static_cast<long>(limits.sieve_ceiling)) > 0)
        throw SieveTooLarge("lcm of moduli " + big_n.get_str() +
                            " exceeds the cyclotomic/sieve ceiling");
    Int n = big_n.get_si();
    ScaledClasses sc;
    sc.order = n;
    for (int s = 1; s <= ws.k(); ++s) {
        const ResidueClass& c = ws.system.regular(s);
        Int w = ws.weights[static_cast<std::size_t>(s - 1)];
        Int step = n / c.n;
        sc.value.push_back(to_big(w) * to_big(step));
        Int ph = ((c.a % c.n) * (w % c.n)) % c.n;  // a_s*m_s mod n_s, < 10^7 so no overflow
        sc.phase.push_back(ph * step % n);
    }
    return sc;
}

}  // namespace

SumClassTable build_sum_table(const WeightedSystem& ws, std::size_t witness_cap,
                              const Limits& limits) {
    const int k = ws.k();
    if (k > 30) throw TooManySubsets("k = " + std::to_string(k) + " exceeds the 2^30 guard");
    ScaledClasses sc = scale_classes(ws, limits);

    SumClassTable table;
    table.order = sc.order;
    table.witness_cap = witness_cap;

    BigInt value = 0;
    Int phase = 0;
    std::uint32_t mask = 0;
    int parity = 0;
    // Deciding the highest index first, exclude before include, emits the
    // bitmasks in ascending numeric order.
    auto rec = [&](auto&& self, int s) -> void {
        if (s == 0) {
            Rational key(value, to_big(sc.order));
            auto it = table.values.find(key);
            if (it == table.values.end())
                it = table.values.emplace(std::move(key),
                                          SumValueEntry{0, {}, CyclotomicElement(sc.order)})
                         .first;
            SumValueEntry& e = it->second;
            e.count += 1;
            if (e.witnesses.size() < table.witness_cap) e.witnesses.push_back(mask);
            e.csum.add_term(phase, parity ? -1 : 1);
            return;
        }
        self(self, s - 1);
        const auto i = static_cast<std::size_t>(s - 1);
        value += sc.value[i];
        phase = (phase + sc.phase[i]) % sc.order;
        mask |= 1u << i;
        parity ^= 1;
        self(self, s - 1);
        value -= sc.value[i];
        phase = (phase - sc.phase[i] % sc.order + sc.order) % sc.order;
        mask &= ~(1u << i);
        parity ^= 1;
    };
    rec(rec, k);
    return table;
}

namespace {

struct DichotomyScan {
    bool vanishing_holds = true;
    bool counting_holds = true;
    std::optional<long long> first_count_violation;
    std::vector<Theorem11Row> rows;
};

// Rows indexed by a: real rows while (alpha+a)/n_0 <= sum m_s/n_s, then
// virtual rows (count 0) while binom(m, floor(a/n_0)) > 0. Virtual rows with
// required 0 are trivial and omitted. The loop stops as soon as neither kind
// of row remains to decide or report.
DichotomyScan scan_dichotomy(const WeightedSystem& ws, const Rational& alpha, int m,
                             const SumClassTable& table, const Limits&) {
    const Int n0 = ws.system.head().n;
    DichotomyScan scan;

    std::map<long long, const SumValueEntry*> by_a;
    for (const auto& [v, entry] : table.values) {
        Rational a_rat = v * Rational(n0) - alpha;
        if (!a_rat.is_integer() || a_rat.sign() < 0) continue;
        BigInt af = a_rat.floor();
        if (!af.fits_slong_p()) throw Error("class index a out of range");
        by_a.emplace(af.get_si(), &entry);
    }
    const long long a_nonempty_max = by_a.empty() ? -1 : by_a.rbegin()->first;
    const long long a_required_max = (static_cast<long long>(m) + 1) * n0 - 1;

    for (long long a = 0; a <= a_nonempty_max || (scan.counting_holds && a <= a_required_max);
         ++a) {
        auto it = by_a.find(a);
        BigInt required = binomial(m, a / n0);
        if (it == by_a.end() && sgn(required) == 0) continue;

        Theorem11Row row;
        row.a = a;
        row.value = (alpha + Rational(a)) / Rational(n0);
        row.required = required;
        if (it != by_a.end()) {
            row.count = it->second->count;
            row.csum_zero = it->second->csum.is_zero();
            row.witnesses = it->second->witnesses;
        } else {
            row.count = 0;
            row.csum_zero = true;  // empty class, empty sum
        }
        scan.vanishing_holds &= row.csum_zero;
        if (row.count < row.required) {
            scan.counting_holds = false;
            if (!scan.first_count_violation) scan.first_count_violation = a;
        }
        scan.rows.push_back(std::move(row));
    }
    return scan;
}

int require_dichotomy_preconditions(const WeightedSystem& ws, const Rational& alpha,
                                    const Limits& limits) {
    if (!ws.system.distinguished())
        throw PreconditionFailed("a distinguished index-0 class is required");
    if (alpha.sign() < 0 || alpha >= Rational(1))
        throw PreconditionFailed("alpha must lie in [0, 1)");
    int m = ws.m_floor();
    CoveringProfile prof = covering_profile(ws.system, limits);
    if (prof.min_multiplicity <= m)
        throw PreconditionFailed(
            "covering multiplicity " + std::to_string(prof.min_multiplicity) +
            " does not exceed floor(sum m_s/n_s) = " + std::to_string(m));
    return m;
}

}  // namespace

Theorem11Report theorem_1_1_report(const WeightedSystem& ws, const Rational& alpha,
                                   const Limits& limits) {
    int m = require_dichotomy_preconditions(ws, alpha, limits);
    SumClassTable table = build_sum_table(ws, 1024, limits);
    DichotomyScan scan = scan_dichotomy(ws, alpha, m, table, limits);

    Theorem11Report rep;
    rep.m = m;
    rep.alpha = alpha;
    rep.vanishing_holds = scan.vanishing_holds;
    rep.counting_holds = scan.counting_holds;
    rep.rows = std::move(scan.rows);
    if (scan.vanishing_holds)
        rep.branch = Theorem11Branch::Vanishing;
    else if (scan.counting_holds)
        rep.branch = Theorem11Branch::Counting;
    else
        throw TheoremViolated("neither the vanishing nor the counting branch holds at alpha = " +
                              alpha.str());
    return rep;
}

CountingBoundResult corollary_1_1_check(const System& script_a, const Limits& limits) {
    WeightedSystem ws = WeightedSystem::unit(script_a);
    int m = require_dichotomy_preconditions(ws, Rational(0), limits);
    SumClassTable table = build_sum_table(ws, 1024, limits);
    DichotomyScan scan = scan_dichotomy(ws, Rational(0), m, table, limits);

    CountingBoundResult r;
    r.ok = scan.counting_holds;
    r.first_violation = scan.first_count_violation;
    r.rows = std::move(scan.rows);
    return r;
}

namespace {

// Counts, for every integer n, the tuples (m_1..m_k) with m_s in [1, n_s] and
// sum m_s/n_s = n. counts[n] for n in [0, k].
std::vector<BigInt> integer_tuple_counts(std::span<const ResidueClass> classes,
                                         const Limits& limits) {
    BigInt product = 1;
    for (const auto& c : classes) product *= to_big(c.n);
    if (cmp(product, static_cast<long>(limits.tuple_ceiling)) > 0)
        throw EnumerationTooLarge("product of moduli " + product.get_str() +
                                  " exceeds the tuple ceiling");
    BigInt big_n = 1;
    for (const auto& c : classes) mpz_lcm_ui(big_n.get_mpz_t(), big_n.get_mpz_t(), c.n);
    const Int n = big_n.get_si();
    const int k = static_cast<int>(classes.size());

    std::vector<Int> step(classes.size());
    std::vector<Int> min_rest(classes.size() + 1, 0);
    for (std::size_t s = 0; s < classes.size(); ++s) step[s] = n / classes[s].n;
    for (std::size_t s = classes.size(); s-- > 0;) min_rest[s] = min_rest[s + 1] + step[s];

    std::vector<BigInt> counts(static_cast<std::size_t>(k) + 1);
    auto rec = [&](auto&& self, std::size_t s, Int t) -> void {
        if (s == classes.size()) {
            if (t % n == 0) counts[static_cast<std::size_t>(t / n)] += 1;
            return;
        }
        for (Int ms = 1; ms <= classes[s].n; ++ms) {
            Int tt = t + ms * step[s];
            if (tt + min_rest[s + 1] > static_cast<Int>(k) * n) break;
            self(self, s + 1, tt);
        }
    };
    rec(rec, 0, 0);
    return counts;
}

}  // namespace

Corollary12Result corollary_1_2_check(const System& system, const Limits& limits) {
    if (system.distinguished())
        throw PreconditionFailed("expects a plain system without a distinguished class");
    const int k = system.k();
    Rational rsum = system.reciprocal_sum();
    BigInt mc = rsum.ceil();
    if (!mc.fits_sint_p()) throw Error("ceil(sum 1/n_s) out of range");
    const int m = static_cast<int>(mc.get_si());
    CoveringProfile prof = covering_profile(system, limits);
    if (prof.max_multiplicity > m)
        throw PreconditionFailed("not an m-system for m = ceil(sum 1/n_s) = " +
                                 std::to_string(m));

    std::vector<BigInt> counts = integer_tuple_counts(system.regulars(), limits);
    Corollary12Result r;
    r.m = m;
    for (int n = m; n <= k; ++n) {
        TupleCountRow row;
        row.n = n;
        row.count = counts[static_cast<std::size_t>(n)];
        row.required = binomial(static_cast<long long>(k) - m, static_cast<long long>(n) - m);
        if (row.count < row.required) r.ok = false;
        r.rows.push_back(std::move(row));
    }
    return r;
}

Corollary13Result corollary_1_3_check(const WeightedSystem& ws, const std::vector<int>& J,
                                      const Limits& limits) {
    int m = require_dichotomy_preconditions(ws, Rational(0), limits);
    const int k = ws.k();
    std::vector<char> in_j(static_cast<std::size_t>(k) + 1, 0);
    for (int s : J) {
        if (s < 1 || s > k) throw PreconditionFailed("J contains an index outside [1, k]");
        if (in_j[static_cast<std::size_t>(s)]) throw PreconditionFailed("J repeats an index");
        in_j[static_cast<std::size_t>(s)] = 1;
    }

    Rational j_sum, jbar_sum;
    for (int s = 1; s <= k; ++s) {
        Rational term(ws.weights[static_cast<std::size_t>(s - 1)], ws.system.regular(s).n);
        (in_j[static_cast<std::size_t>(s)] ? j_sum : jbar_sum) += term;
    }

    SumClassTable table = build_sum_table(ws, 0, limits);
    auto it = table.values.find(j_sum);
    BigInt count = it == table.values.end() ? BigInt(0) : it->second.count;

    const Int n0 = ws.system.head().n;
    Corollary13Result r;
    r.j_sum = j_sum;
    r.unique = count == 1;
    r.ineq_1_9 = (j_sum * Rational(n0)).frac() + (jbar_sum * Rational(n0)).frac() < Rational(1);
    r.ineq_1_10 = j_sum >= Rational(m) || jbar_sum >= Rational(m);
    return r;
}

Alternatives corollary_1_4_check(const System& system, int m, long long r,
                                 const Limits& limits) {
    if (system.distinguished())
        throw PreconditionFailed("expects a plain system without a distinguished class");
    if (!system.moduli_sorted()) throw PreconditionFailed("moduli must be sorted ascending");
    const int k = system.k();
    if (k < 2) throw PreconditionFailed("the tail block needs k >= 2");
    const Int nk = system.regular(k).n;
    int l = 0;
    while (l < k && system.regular(k - l).n == nk) ++l;
    if (l == k)
        throw PreconditionFailed("all moduli equal; the tail block needs 0 < l < k");
    const Int below = system.regular(k - l).n;
    if (r < 0 || r > l) throw PreconditionFailed("r must lie in [0, l]");
    if (r * below >= nk) throw PreconditionFailed("r must satisfy r < n_k / n_{k-l}");
    if (m < 1 || !classify(system, m, limits).is_m_cover)
        throw PreconditionFailed("not an m-cover for m = " + std::to_string(m));

    Rational head_sum;
    for (int s = 1; s <= k - static_cast<int>(r); ++s)
        head_sum += Rational(1, system.regular(s).n);

    Alternatives alt;
    alt.alt1 = head_sum >= Rational(m);
    alt.alt2 = d_membership(nk, binomial(static_cast<long long>(l), r), limits);
    if (!alt.alt1 && !alt.alt2)
        throw TheoremViolated("neither alternative holds for r = " + std::to_string(r));
    return alt;
}

RepresentableResult representable_integers(const System& system, const Limits& limits) {
    if (system.distinguished())
        throw PreconditionFailed("expects a plain system without a distinguished class");
    const int k = system.k();
    std::vector<BigInt> counts = integer_tuple_counts(system.regulars(), limits);

    RepresentableResult r;
    for (Int n = 1; n <= k; ++n)
        if (sgn(counts[static_cast<std::size_t>(n)]) > 0)
            r.representable.insert(n);
        else
            r.non_representable.push_back(n);

    if (k >= 1) {
        CoveringProfile prof = covering_profile(system, limits);
        auto m = static_cast<std::size_t>(prof.max_multiplicity);  // least m-system m
        if (r.non_representable.size() > m - 1)
            throw TheoremViolated("more than m-1 integers in [1,k] are non-representable");
    }
    return r;
}

}  // namespace covertool
