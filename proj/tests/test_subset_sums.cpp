#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <complex>
#include <numbers>
#include <random>

#include "covertool/enumeration.hpp"
#include "covertool/io.hpp"
#include "covertool/subset_sums.hpp"
#include "oracles.hpp"

using namespace covertool;

namespace {

// The five-congruence cover with 0(2) as the index-0 class.
System erdos_distinguished() {
    return System({ResidueClass(0, 2), ResidueClass(0, 3), ResidueClass(1, 4),
                   ResidueClass(5, 6), ResidueClass(7, 12)},
                  true);
}

System with_head(const ResidueClass& head, const System& rest) {
    std::vector<ResidueClass> classes{head};
    for (const auto& c : rest.all()) classes.push_back(c);
    return System(std::move(classes), true);
}

}  // namespace

TEST_CASE("sum table of the five-congruence cover") {
    SumClassTable table = build_sum_table(WeightedSystem::unit(erdos_distinguished()));
    CHECK(table.order == 12);

    const auto& five12 = table.values.at(Rational(5, 12));
    CHECK(five12.count == 2);
    // {1,4} and {2,3} as bitmasks (bit s-1 <-> index s), ascending
    CHECK(five12.witnesses == std::vector<std::uint32_t>{0b0110, 0b1001});
    CHECK(five12.csum.is_zero());

    const auto& half = table.values.at(Rational(1, 2));
    CHECK(half.count >= 1);
    CHECK(std::find(half.witnesses.begin(), half.witnesses.end(), 0b0101u) !=
          half.witnesses.end());  // I = {1,3}

    BigInt total = 0;
    for (const auto& [v, entry] : table.values) total += entry.count;
    CHECK(total == 16);  // partition of the 2^4 subsets
}

TEST_CASE("sum table of the empty system") {
    SumClassTable table = build_sum_table(WeightedSystem::unit(System{}));
    CHECK(table.values.size() == 1);
    const auto& zero = table.values.at(Rational(0));
    CHECK(zero.count == 1);
    CHECK(zero.csum.equals(CyclotomicElement::from_integer(1, 1)));
}

TEST_CASE("sum table matches the naive oracle on random systems") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 100; ++iter) {
        System sys = oracles::random_system(rng, 6, 8);
        std::vector<Int> weights;
        for (int s = 0; s < sys.k(); ++s) weights.push_back(1 + static_cast<Int>(rng() % 3));
        auto naive = oracles::subset_sums_naive(sys, weights);
        SumClassTable table = build_sum_table(WeightedSystem(sys, weights));
        CHECK(table.values.size() == naive.size());
        for (const auto& [v, count] : naive) {
            REQUIRE(table.values.count(v) == 1);
            CHECK(table.values.at(v).count == to_big(count));
        }
    }
}

TEST_CASE("signed exponential sums match a complex-arithmetic oracle") {
    std::mt19937_64 rng(22);
    for (int iter = 0; iter < 50; ++iter) {
        System sys = oracles::random_system(rng, 5, 8);
        WeightedSystem ws = WeightedSystem::unit(sys);
        SumClassTable table = build_sum_table(ws);
        const int k = sys.k();
        std::map<Rational, std::complex<double>> numeric;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            Rational sum;
            double angle = 0;
            for (int s = 1; s <= k; ++s)
                if (mask & (1u << (s - 1))) {
                    sum += Rational(1, sys.regular(s).n);
                    angle += 2.0 * std::numbers::pi * static_cast<double>(sys.regular(s).a) /
                             static_cast<double>(sys.regular(s).n);
                }
            double sign = std::popcount(mask) % 2 == 0 ? 1.0 : -1.0;
            numeric[sum] += sign * std::polar(1.0, angle);
        }
        for (const auto& [v, entry] : table.values) {
            double exact_abs = oracles::cyclotomic_abs_mpfr(entry.csum);
            CHECK(std::abs(exact_abs - std::abs(numeric.at(v))) < 1e-9);
        }
    }
}

TEST_CASE("dichotomy on the five-congruence cover") {
    WeightedSystem ws = WeightedSystem::unit(erdos_distinguished());

    Theorem11Report zero = theorem_1_1_report(ws, Rational(0));
    CHECK(zero.branch == Theorem11Branch::Counting);
    CHECK(zero.m == 0);
    REQUIRE(zero.rows.size() == 2);
    CHECK(zero.rows[1].value == Rational(1, 2));
    CHECK(zero.rows[1].count == 2);
    CHECK(std::find(zero.rows[1].witnesses.begin(), zero.rows[1].witnesses.end(), 0b0101u) !=
          zero.rows[1].witnesses.end());

    Theorem11Report five6 = theorem_1_1_report(ws, Rational(5, 6));
    CHECK(five6.branch == Theorem11Branch::Vanishing);
    REQUIRE(!five6.rows.empty());
    CHECK(five6.rows[0].a == 0);
    CHECK(five6.rows[0].value == Rational(5, 12));
    CHECK(five6.rows[0].count == 2);
    CHECK(five6.rows[0].csum_zero);
}

TEST_CASE("dichotomy on 0(1); 0(2),1(2)") {
    System sys = with_head(ResidueClass(0, 1), parse_system_text("0(2),1(2)"));
    Theorem11Report rep = theorem_1_1_report(WeightedSystem::unit(sys), Rational(0));
    CHECK(rep.branch == Theorem11Branch::Counting);
    CHECK(rep.m == 1);
    // brute force: subset sums 0, 1/2, 1/2, 1 -> integer classes a=0 and a=1, one subset each
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].count == 1);
    CHECK(rep.rows[0].required == 1);
    CHECK(rep.rows[1].count == 1);
    CHECK(rep.rows[1].required == 1);
}

TEST_CASE("dichotomy preconditions") {
    CHECK_THROWS_AS(
        theorem_1_1_report(WeightedSystem::unit(parse_system_text("0(2),1(4)")), Rational(0)),
        PreconditionFailed);  // no distinguished class
    CHECK_THROWS_AS(
        theorem_1_1_report(WeightedSystem::unit(erdos_distinguished()), Rational(3, 2)),
        PreconditionFailed);  // alpha out of range
    // x = 1 is uncovered, so the multiplicity 0 does not exceed floor(1/3) = 0
    System thin = with_head(ResidueClass(0, 2), parse_system_text("0(3)"));
    CHECK_THROWS_AS(theorem_1_1_report(WeightedSystem::unit(thin), Rational(0)),
                    PreconditionFailed);
}

TEST_CASE("dichotomy holds over the exhaustive small family") {
    // all distinguished systems with k <= 3 regular classes, moduli <= 6,
    // weights in {1, 2}, qualifying via m(script A) > floor(sum m_s/n_s)
    long long qualifying = 0;
    for (int total = 1; total <= 4; ++total) {
        SearchSpace space;
        space.k = total;
        space.max_modulus = 6;
        enumerate(space, [&](const System& plain) {
            CoveringProfile prof = covering_profile(plain);
            if (prof.min_multiplicity < 1) return true;  // cannot qualify for any weights
            for (std::size_t head = 0; head < plain.all().size(); ++head) {
                if (head > 0 && plain.all()[head] == plain.all()[head - 1]) continue;
                std::vector<ResidueClass> classes{plain.all()[head]};
                for (std::size_t i = 0; i < plain.all().size(); ++i)
                    if (i != head) classes.push_back(plain.all()[i]);
                System script_a(classes, true);
                const int k = script_a.k();
                std::vector<Int> weights(static_cast<std::size_t>(k), 1);
                for (;;) {
                    WeightedSystem ws(script_a, weights);
                    if (prof.min_multiplicity > ws.m_floor()) {
                        ++qualifying;
                        SumClassTable table = build_sum_table(ws);
                        std::set<Rational> alphas{Rational(0)};
                        for (const auto& [v, entry] : table.values)
                            alphas.insert((v * Rational(script_a.head().n)).frac());
                        for (const Rational& alpha : alphas)
                            CHECK_NOTHROW(theorem_1_1_report(ws, alpha));
                    }
                    int i = 0;
                    while (i < k && weights[static_cast<std::size_t>(i)] == 2)
                        weights[static_cast<std::size_t>(i++)] = 1;
                    if (i == k) break;
                    weights[static_cast<std::size_t>(i)] = 2;
                }
            }
            return true;
        });
    }
    CHECK(qualifying > 100);  // the family is not vacuous
}

TEST_CASE("counting bound, unit weights") {
    CHECK(corollary_1_1_check(with_head(ResidueClass(0, 1), parse_system_text("0(2),1(2)"))).ok);
    CHECK(corollary_1_1_check(erdos_distinguished()).ok);
    CHECK(corollary_1_1_check(with_head(ResidueClass(0, 1), parse_system_text("0(1)"))).ok);
}

TEST_CASE("tuple counting bound") {
    Corollary12Result part = corollary_1_2_check(parse_system_text("0(2),1(2)"));
    CHECK(part.ok);
    CHECK(part.m == 1);
    REQUIRE(part.rows.size() == 2);
    CHECK(part.rows[0].count == 1);  // (1,1)
    CHECK(part.rows[0].required == 1);
    CHECK(part.rows[1].count == 1);  // (2,2)
    CHECK(part.rows[1].required == 1);

    Corollary12Result chain = corollary_1_2_check(parse_system_text("1(2),2(4)"));
    CHECK(chain.ok);
    CHECK(chain.m == 1);
    CHECK(chain.rows[0].count == 1);  // (1,2)

    Corollary12Result full = corollary_1_2_check(parse_system_text("0(1)"));
    CHECK(full.ok);
    CHECK(full.rows[0].count == 1);

    // {0(2),0(2)} has max multiplicity 2 > ceil(1) = 1
    CHECK_THROWS_AS(corollary_1_2_check(parse_system_text("0(2),0(2)")), PreconditionFailed);
}

TEST_CASE("unique-subset inequalities") {
    Corollary13Result not_unique =
        corollary_1_3_check(WeightedSystem::unit(erdos_distinguished()), {1, 4});
    CHECK(!not_unique.unique);  // {2,3} has the same sum 5/12

    System sys = with_head(ResidueClass(0, 1), parse_system_text("0(2),1(2)"));
    Corollary13Result both = corollary_1_3_check(WeightedSystem::unit(sys), {1, 2});
    CHECK(both.unique);
    CHECK(both.ineq_1_9);
    CHECK(both.ineq_1_10);
    CHECK(both.j_sum == Rational(1));

    Corollary13Result empty = corollary_1_3_check(WeightedSystem::unit(sys), {});
    CHECK(empty.j_sum == Rational(0));
    CHECK(empty.ineq_1_9);
}

TEST_CASE("tail-block alternatives") {
    Alternatives erdos = corollary_1_4_check(
        parse_system_text("0(2),0(3),1(4),5(6),7(12)"), 1, 1);
    CHECK(erdos.alt1);  // 1/2+1/3+1/4+1/6 = 5/4 >= 1

    Alternatives exact = corollary_1_4_check(parse_system_text("0(2),1(4),3(4)"), 1, 1);
    CHECK(!exact.alt1);  // 1/2 < 1
    CHECK(exact.alt2);   // binom(2,1) = 2 in D(4)

    // r = 0: binom(l, 0) = 1 is never in D(n_k), so alt1 must carry it
    Alternatives r0 = corollary_1_4_check(parse_system_text("0(2),1(4),3(4)"), 1, 0);
    CHECK(r0.alt1);
    CHECK(!r0.alt2);

    CHECK_THROWS_AS(corollary_1_4_check(parse_system_text("0(2),1(2)"), 1, 0),
                    PreconditionFailed);  // all moduli equal
    CHECK_THROWS_AS(corollary_1_4_check(parse_system_text("0(2),1(4),3(4)"), 1, 2),
                    PreconditionFailed);  // r < n_k/n_{k-l} fails
}

TEST_CASE("tail-block disjunction over enumerated m-covers") {
    // k <= 5, moduli <= 8, every m-cover with a proper tail block
    for (int k = 2; k <= 5; ++k) {
        SearchSpace space;
        space.k = k;
        space.max_modulus = 8;
        space.cover = true;
        enumerate(space, [&](const System& sys) {
            CoveringProfile prof = covering_profile(sys);
            const Int nk = sys.regular(k).n;
            int l = 0;
            while (l < k && sys.regular(k - l).n == nk) ++l;
            if (l == k) return true;
            const Int below = sys.regular(k - l).n;
            for (int m = 1; m <= prof.min_multiplicity; ++m)
                for (long long r = 0; r <= l && r * below < nk; ++r)
                    CHECK_NOTHROW(corollary_1_4_check(sys, m, r));
            return true;
        });
    }
}

TEST_CASE("representable integers") {
    RepresentableResult chain = representable_integers(parse_system_text("1(2),2(4)"));
    CHECK(chain.representable == std::set<Int>{1, 2});
    CHECK(chain.non_representable.empty());

    CHECK(representable_integers(parse_system_text("0(1)")).representable == std::set<Int>{1});
    CHECK(representable_integers(parse_system_text("0(3)")).representable == std::set<Int>{1});
    CHECK(representable_integers(System{}).representable.empty());
}

TEST_CASE("at most m-1 integers escape, over random systems") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 200; ++iter) {
        System sys = oracles::random_system(rng, 5, 8);
        CHECK_NOTHROW(representable_integers(sys));  // the bound is asserted inside
    }
}

TEST_CASE("subset guard") {
    std::vector<ResidueClass> many(31, ResidueClass(0, 2));
    CHECK_THROWS_AS(build_sum_table(WeightedSystem::unit(System(many))), TooManySubsets);
}
