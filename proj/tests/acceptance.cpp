// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, stated runtime limits enforced.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covertool/characterizations.hpp"
#include "covertool/enumeration.hpp"
#include "covertool/extremal.hpp"
#include "covertool/io.hpp"
#include "covertool/report.hpp"
#include "covertool/subset_sums.hpp"
#include "oracles.hpp"

using namespace covertool;

namespace {

struct Criterion {
    int number;
    std::string description;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

System load_corpus(const std::string& name) {
    std::ifstream in(std::string(COVERTOOL_CORPUS_DIR) + "/" + name);
    if (!in) throw Error("missing corpus file " + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

bool contains_mask(const std::vector<std::uint32_t>& masks, std::uint32_t want) {
    return std::find(masks.begin(), masks.end(), want) != masks.end();
}

// ---- criterion 1: the worked five-congruence example, bit exact ----------
bool criterion_example(std::string& note) {
    System erdos = load_corpus("erdos-example-1.1.json");
    if (!erdos.distinguished() || erdos.k() != 4) {
        note = "corpus system malformed";
        return false;
    }

    Report rep = run_full_analysis(erdos);
    bool profile_ok = false;
    for (const auto& v : rep.verdicts)
        if (v.check == "profile")
            profile_ok = v.data.at("min") == 1 && v.data.at("average") == "4/3";
    if (!profile_ok) {
        note = "analyze did not report min multiplicity 1 with average 4/3";
        return false;
    }

    WeightedSystem ws = WeightedSystem::unit(erdos);
    Theorem11Report zero = theorem_1_1_report(ws, Rational(0));
    bool counting = zero.branch == Theorem11Branch::Counting;
    bool witness = false;
    for (const auto& row : zero.rows)
        if (row.value == Rational(1, 2)) witness = contains_mask(row.witnesses, 0b0101);
    if (!counting || !witness) {
        note = "alpha=0 did not yield the counting branch with witness {1,3} for 1/2";
        return false;
    }

    Theorem11Report five6 = theorem_1_1_report(ws, Rational(5, 6));
    bool vanishing = five6.branch == Theorem11Branch::Vanishing;
    bool class_ok = false;
    for (const auto& row : five6.rows)
        if (row.a == 0)
            class_ok = row.value == Rational(5, 12) && row.count == 2 && row.csum_zero &&
                       contains_mask(row.witnesses, 0b0110) &&
                       contains_mask(row.witnesses, 0b1001);
    if (!vanishing || !class_ok) {
        note = "alpha=5/6 did not yield the vanishing branch with classes {1,4},{2,3}";
        return false;
    }
    note = "counting branch at alpha=0, vanishing branch at alpha=5/6, exact";
    return true;
}

// ---- criterion 2: the extremal equality family ----------------------------
bool criterion_extremal_family(std::string& note) {
    for (auto [k, m] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
        System sys = extremal_m_system(k, m);
        if (!classify(sys, m).is_m_system) {
            note = "family (k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                   ") is not an m-system";
            return false;
        }
        BigInt pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k - m + 1));
        if (sys.reciprocal_sum() != Rational(m) - Rational(BigInt(1), pow2)) {
            note = "family sum mismatch at (k=" + std::to_string(k) + ", m=" +
                   std::to_string(m) + ")";
            return false;
        }
        Theorem12Result r = theorem_1_2_check(sys, m);
        if (!r.equality || !r.extremal_form) {
            note = "equality/extremal form not reported at (k=" + std::to_string(k) +
                   ", m=" + std::to_string(m) + ")";
            return false;
        }
    }
    // the shipped corpus members must be exactly the generated family
    if (load_corpus("remark-1.5-k2-m1.txt") != extremal_m_system(2, 1) ||
        load_corpus("remark-1.5-k3-m1.txt") != extremal_m_system(3, 1) ||
        load_corpus("remark-1.5-k4-m2.txt") != extremal_m_system(4, 2)) {
        note = "corpus members disagree with the generated family";
        return false;
    }
    note = "all five (k, m) members verified exactly";
    return true;
}

// ---- criterion 3: characterization equivalences over the full small space -
bool criterion_characterizations(std::string& note) {
    long long systems = 0, mismatches = 0;
    for (int k = 0; k <= 4; ++k) {
        SearchSpace space;
        space.k = k;
        space.max_modulus = 6;
        enumerate(space, [&](const System& sys) {
            ++systems;
            CoveringProfile prof = covering_profile(sys);
            WeightedSystem unit = WeightedSystem::unit(sys);
            for (int m = 1; m <= 2; ++m) {
                bool direct_system = prof.max_multiplicity <= m;
                bool direct_cover = prof.min_multiplicity >= m;
                if (theorem_1_3_check(sys, m) != direct_system) ++mismatches;
                if (theorem_3_1_check(sys, m) != direct_system) ++mismatches;
                if (k >= 1) {
                    if (lemma_3_1_check(unit, m) != direct_cover) ++mismatches;
                    if (lemma_2_1_certificate(unit, m).divides != direct_cover) ++mismatches;
                }
            }
            return true;
        });
    }
    note = std::to_string(systems) + " systems, " + std::to_string(mismatches) + " mismatches";
    return mismatches == 0 && systems > 1000;
}

// ---- criterion 4: counting bounds over all qualifying systems -------------
bool criterion_counting_bounds(std::string& note) {
    long long qualifying11 = 0, violations11 = 0;
    long long qualifying12 = 0, violations12 = 0;
    for (int k = 0; k <= 4; ++k) {
        SearchSpace space;
        space.k = k;
        space.max_modulus = 6;
        enumerate(space, [&](const System& sys) {
            CoveringProfile prof = covering_profile(sys);

            if (k >= 1) {
                // every distinct class as the index-0 head
                for (std::size_t head = 0; head < sys.all().size(); ++head) {
                    if (head > 0 && sys.all()[head] == sys.all()[head - 1]) continue;
                    std::vector<ResidueClass> classes{sys.all()[head]};
                    for (std::size_t i = 0; i < sys.all().size(); ++i)
                        if (i != head) classes.push_back(sys.all()[i]);
                    System script_a(classes, true);
                    Rational rsum = WeightedSystem::unit(script_a).weight_sum();
                    if (Rational(prof.min_multiplicity) > Rational(rsum.floor())) {
                        ++qualifying11;
                        if (!corollary_1_1_check(script_a).ok) ++violations11;
                    }
                }
                // the n_0 = 1 specialization: head 0(1) on top of the whole system
                std::vector<ResidueClass> classes{ResidueClass(0, 1)};
                for (const auto& c : sys.all()) classes.push_back(c);
                System with_one(classes, true);
                if (Rational(prof.min_multiplicity) >= Rational(sys.reciprocal_sum().floor())) {
                    ++qualifying11;
                    if (!corollary_1_1_check(with_one).ok) ++violations11;
                }
            }

            BigInt mc = sys.reciprocal_sum().ceil();
            if (mc.fits_sint_p() && prof.max_multiplicity <= mc.get_si()) {
                ++qualifying12;
                if (!corollary_1_2_check(sys).ok) ++violations12;
            }
            return true;
        });
    }
    note = std::to_string(qualifying11) + " qualifying subset checks, " +
           std::to_string(qualifying12) + " tuple checks, " +
           std::to_string(violations11 + violations12) + " violations";
    return violations11 == 0 && violations12 == 0 && qualifying11 > 0 && qualifying12 > 0;
}

// ---- criterion 5: disjoint and m-system exponential identities ------------
bool criterion_disjoint_identities(std::string& note) {
    long long disjoint_checked = 0, failures = 0;
    for (int k = 1; k <= 4; ++k) {
        SearchSpace space;
        space.k = k;
        space.max_modulus = 8;
        space.disjoint = true;
        enumerate(space, [&](const System& sys) {
            ++disjoint_checked;
            if (!corollary_1_5_check(sys)) ++failures;
            return true;
        });
    }
    long long msystems_checked = 0;
    for (int k = 0; k <= 3; ++k) {
        SearchSpace space;
        space.k = k;
        space.max_modulus = 6;
        enumerate(space, [&](const System& sys) {
            int maxw = covering_profile(sys).max_multiplicity;
            for (int m = std::max(maxw, 1); m <= 2; ++m) {
                ++msystems_checked;
                if (!corollary_3_1_check(sys, m)) ++failures;
            }
            return true;
        });
    }
    note = std::to_string(disjoint_checked) + " disjoint systems, " +
           std::to_string(msystems_checked) + " m-system identities, " +
           std::to_string(failures) + " failures";
    return failures == 0 && disjoint_checked > 0 && msystems_checked > 0;
}

// ---- criterion 6: classical disjoint-cover facts ---------------------------
bool criterion_classical(std::string& note) {
    long long covers = 0, strict = 0, violations = 0;
    for (int k = 2; k <= 5; ++k) {
        SearchSpace space;
        space.k = k;
        space.max_modulus = 8;
        space.disjoint = true;
        space.cover = true;
        enumerate(space, [&](const System& sys) {
            if (sys.regular(1).n <= 1) return true;
            ++covers;
            ClassicalChecks c = classical_disjoint_checks(sys);
            if (!c.dmnr.has_value() || !*c.dmnr) ++violations;
            return true;
        });
    }
    for (int k = 1; k <= 5; ++k) {
        SearchSpace space;
        space.k = k;
        space.max_modulus = 16;
        space.disjoint = true;
        space.distinct_moduli = true;
        enumerate(space, [&](const System& sys) {
            if (sys.regular(1).n <= 1) return true;
            ++strict;
            ClassicalChecks c = classical_disjoint_checks(sys);
            if (!c.erdos62.has_value() || !*c.erdos62) ++violations;
            return true;
        });
    }
    // named corpus covers must pass their own checks
    ClassicalChecks named = classical_disjoint_checks(load_corpus("exact-cover-2-4-4.txt"));
    if (!named.dmnr.value_or(false) ||
        !newman_znam_check(load_corpus("exact-cover-2-4-4.txt")) ||
        !newman_znam_check(load_corpus("exact-cover-mod2.txt"))) {
        note = "corpus exact covers failed their checks";
        return false;
    }
    note = std::to_string(covers) + " disjoint covers, " + std::to_string(strict) +
           " strict-moduli systems, " + std::to_string(violations) + " violations";
    return violations == 0 && covers > 0 && strict > 0;
}

// ---- criterion 7: the pairwise-gcd conjecture at desk scale ----------------
bool criterion_conjecture(std::string& note) {
    std::string detail;
    for (auto [k, max] : std::vector<std::pair<int, Int>>{{2, 8}, {3, 12}, {4, 12}}) {
        ConjectureScanResult r = conjecture_1_1_scan(k, max);
        if (!r.verified || !r.counterexamples.empty()) {
            note = "counterexample at k = " + std::to_string(k);
            return false;
        }
        detail += (detail.empty() ? "" : ", ") + std::to_string(r.systems_checked) +
                  " systems at k=" + std::to_string(k);
    }
    note = "verified with empty counterexample lists (" + detail + ")";
    return true;
}

// ---- criterion 8: the cyclotomic kernel ------------------------------------
bool criterion_cyclotomic(std::string& note) {
    for (Int n = 1; n <= 200; ++n) {
        std::vector<BigInt> prod{1};
        for (Int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            const auto& phi = cyclotomic_poly(d).coeffs;
            std::vector<BigInt> next(prod.size() + phi.size() - 1);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                if (sgn(prod[i]) == 0) continue;
                for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            }
            prod = std::move(next);
        }
        std::vector<BigInt> want(static_cast<std::size_t>(n) + 1);
        want[0] = -1;
        want[static_cast<std::size_t>(n)] = 1;
        if (prod != want) {
            note = "product identity failed at n = " + std::to_string(n);
            return false;
        }
    }

    for (Int n = 1; n <= 30; ++n)
        for (Int l = 0; l < n; ++l)
            if (!lemma_3_2_check(n, l)) {
                note = "subset identity failed at n = " + std::to_string(n) +
                       ", l = " + std::to_string(l);
                return false;
            }

    std::mt19937_64 rng(2024);
    int zeros = 0;
    for (int iter = 0; iter < 500; ++iter) {
        Int order = 1 + static_cast<Int>(rng() % 24);
        CyclotomicElement e = oracles::random_element(rng, order, 5);
        if (iter % 2 == 0) {
            const auto& phi = cyclotomic_poly(order).coeffs;
            CyclotomicElement phi_elem(order);
            for (std::size_t j = 0; j < phi.size(); ++j)
                phi_elem.add_term(static_cast<Int>(j), phi[j]);
            e = e * phi_elem;  // exact zero by construction
        }
        bool exact = e.is_zero();
        bool numeric = oracles::cyclotomic_abs_mpfr(e) < 1e-9;
        if (exact != numeric) {
            note = "zero test disagreed with the 128-bit float oracle";
            return false;
        }
        zeros += exact;
    }
    note = "product identity to n=200, subset identities to n=30, 500 oracle agreements (" +
           std::to_string(zeros) + " zeros)";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "five-congruence example reproduced exactly", 1.0, criterion_example},
        {2, "extremal equality family for (k,m) in {(2,1),(3,1),(4,1),(4,2),(5,2)}", 1.0,
         criterion_extremal_family},
        {3, "characterization equivalences, k <= 4, moduli <= 6, m in {1,2}", 300.0,
         criterion_characterizations},
        {4, "counting bounds over all qualifying systems, k <= 4, moduli <= 6", 300.0,
         criterion_counting_bounds},
        {5, "exponential identities for disjoint systems and m-systems", 300.0,
         criterion_disjoint_identities},
        {6, "classical disjoint-cover facts at desk scale", 600.0, criterion_classical},
        {7, "pairwise-gcd conjecture scan, k in {2,3,4}", 600.0, criterion_conjecture},
        {8, "cyclotomic kernel identities and float-oracle agreement", 30.0,
         criterion_cyclotomic},
    };

    int failed = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds) {
            ok = false;
            note += " [over the " + std::to_string(c.limit_seconds) + "s limit]";
        }
        std::printf("[%s] criterion %d: %s (%.2fs) -- %s\n", ok ? "PASS" : "FAIL", c.number,
                    c.description.c_str(), secs, note.c_str());
        if (!ok) ++failed;
    }
    if (failed)
        std::printf("%d criteria FAILED\n", failed);
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failed == 0 ? 0 : 1;
}
