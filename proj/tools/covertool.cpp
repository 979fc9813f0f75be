#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "covertool/characterizations.hpp"
#include "covertool/covering.hpp"
#include "covertool/enumeration.hpp"
#include "covertool/extremal.hpp"
#include "covertool/io.hpp"
#include "covertool/report.hpp"
#include "covertool/subset_sums.hpp"

using namespace covertool;
using nlohmann::json;

namespace {

struct CommonArgs {
    std::string system_text;
    std::string file;
    std::string weights;
    bool json_out = false;
};

System load_system(const CommonArgs& args) {
    if (!args.file.empty()) {
        std::ifstream in(args.file);
        if (!in) throw Error("cannot open " + args.file);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_system(buf.str());
    }
    return parse_system(args.system_text);
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

WeightedSystem load_weighted(const CommonArgs& args, const System& sys) {
    if (args.weights.empty()) return WeightedSystem::unit(sys);
    std::vector<Int> w = parse_int_list(args.weights);
    return WeightedSystem(sys, std::move(w));
}

void add_system_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("system", args.system_text, "system as text 'a(n),a(n)' or JSON");
    cmd->add_option("--file", args.file, "read the system from a file instead");
}

int emit(const Report& rep, bool json_out) {
    if (json_out)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.text();
    return rep.exit_code();
}

json witness_lists(const std::vector<std::uint32_t>& masks) {
    json out = json::array();
    for (auto mask : masks) {
        json subset = json::array();
        for (int s = 1; mask >> (s - 1) != 0; ++s)
            if (mask & (1u << (s - 1))) subset.push_back(s);
        out.push_back(subset);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covertool: residue-class systems, covers, and their exact certificates"};
    app.require_subcommand(1);

    Limits limits;
    if (const char* env = std::getenv("COVERTOOL_WORK_CEILING"))
        limits.work_ceiling = std::atoll(env);
    bool json_out = false;
    app.add_flag("--json", json_out, "print a JSON report");
    app.add_option("--max-sieve", limits.sieve_ceiling, "sieve/lcm ceiling");
    app.add_option("--work-ceiling", limits.work_ceiling, "enumeration work ceiling");

    int exit_code = 0;
    CommonArgs args;

    // analyze
    auto* analyze = app.add_subcommand("analyze", "run every applicable check");
    std::string alpha_text;
    add_system_options(analyze, args);
    analyze->add_option("--alpha", alpha_text, "exact rational u/v for the dichotomy report");
    analyze->callback([&] {
        AnalysisOptions opt;
        opt.limits = limits;
        if (!alpha_text.empty()) opt.alpha = Rational::parse(alpha_text);
        Report rep = run_full_analysis(load_system(args), opt);
        exit_code = emit(rep, json_out);
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "m-cover / exact / m-system flags");
    int classify_m = 1;
    add_system_options(classify_cmd, args);
    classify_cmd->add_option("--m", classify_m, "multiplicity to test")->required();
    classify_cmd->callback([&] {
        System sys = load_system(args);
        Classification c = classify(sys, classify_m, limits);
        Report rep;
        rep.command = "classify";
        rep.input_system = format_system(sys);
        rep.distinguished = sys.distinguished();
        std::string d = std::string(c.is_m_cover ? "" : "not ") + std::to_string(classify_m) +
                        "-cover" + (c.is_exact_m_cover ? " (exact)" : "") + ", " +
                        (c.is_m_system ? "" : "not ") + std::to_string(classify_m) + "-system";
        rep.add("classify", VerdictStatus::Pass, d,
                {{"m", classify_m},
                 {"is_m_cover", c.is_m_cover},
                 {"is_exact_m_cover", c.is_exact_m_cover},
                 {"is_m_system", c.is_m_system}});
        exit_code = emit(rep, json_out);
    });

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "dual system of shifted classes");
    add_system_options(dual_cmd, args);
    dual_cmd->callback([&] {
        System d = dual(load_system(args));
        if (json_out)
            std::cout << system_to_json(d).dump(2) << "\n";
        else
            std::cout << format_system(d) << "\n";
    });

    // sums
    auto* sums_cmd = app.add_subcommand("sums", "subset-sum table with exact exponential sums");
    add_system_options(sums_cmd, args);
    sums_cmd->add_option("--weights", args.weights, "comma list m_1,..,m_k");
    sums_cmd->callback([&] {
        System sys = load_system(args);
        SumClassTable table = build_sum_table(load_weighted(args, sys), 1024, limits);
        json values = json::array();
        for (const auto& [v, entry] : table.values)
            values.push_back({{"v", v.str()},
                              {"count", entry.count.get_str()},
                              {"csum_zero", entry.csum.is_zero()},
                              {"witnesses", witness_lists(entry.witnesses)}});
        json out{{"values", values}, {"verdict", "ok"}};
        if (json_out) {
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& [v, entry] : table.values)
                std::cout << v.str() << ": count " << entry.count.get_str()
                          << ", exponential sum "
                          << (entry.csum.is_zero() ? "0" : entry.csum.str()) << "\n";
        }
    });

    // thm11
    auto* thm11 = app.add_subcommand("thm11", "vanishing-or-counting dichotomy");
    std::string thm11_alpha = "0";
    add_system_options(thm11, args);
    thm11->add_option("--alpha", thm11_alpha, "exact rational u/v in [0,1)");
    thm11->add_option("--weights", args.weights, "comma list m_1,..,m_k");
    thm11->callback([&] {
        System sys = load_system(args);
        Rational alpha = Rational::parse(thm11_alpha);
        Theorem11Report t = theorem_1_1_report(load_weighted(args, sys), alpha, limits);
        Report rep;
        rep.command = "thm11";
        rep.input_system = format_system(sys);
        rep.distinguished = sys.distinguished();
        json rows = json::array();
        for (const auto& row : t.rows)
            rows.push_back({{"a", row.a},
                            {"v", row.value.str()},
                            {"count", row.count.get_str()},
                            {"required", row.required.get_str()},
                            {"csum_zero", row.csum_zero},
                            {"witnesses", witness_lists(row.witnesses)}});
        rep.add("thm11", VerdictStatus::Pass,
                t.branch == Theorem11Branch::Vanishing ? "vanishing branch" : "counting branch",
                {{"branch", t.branch == Theorem11Branch::Vanishing ? "Vanishing" : "Counting"},
                 {"m", t.m},
                 {"alpha", t.alpha.str()},
                 {"rows", rows}});
        exit_code = emit(rep, json_out);
    });

    // cor11
    auto* cor11 = app.add_subcommand("cor11", "unit-weight counting bound");
    add_system_options(cor11, args);
    cor11->callback([&] {
        System sys = load_system(args);
        CountingBoundResult c = corollary_1_1_check(sys, limits);
        Report rep;
        rep.command = "cor11";
        rep.input_system = format_system(sys);
        rep.distinguished = sys.distinguished();
        rep.add("cor11", c.ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                c.ok ? "counting bound holds for all a"
                     : "violated at a = " + std::to_string(*c.first_violation));
        exit_code = emit(rep, json_out);
    });

    // cor12
    auto* cor12 = app.add_subcommand("cor12", "tuple counting bound for m = ceil(sum 1/n_s)");
    add_system_options(cor12, args);
    cor12->callback([&] {
        System sys = load_system(args);
        Corollary12Result c = corollary_1_2_check(sys, limits);
        Report rep;
        rep.command = "cor12";
        rep.input_system = format_system(sys);
        json rows = json::array();
        for (const auto& row : c.rows)
            rows.push_back({{"n", row.n},
                            {"count", row.count.get_str()},
                            {"required", row.required.get_str()}});
        rep.add("cor12", c.ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                "m = " + std::to_string(c.m), {{"rows", rows}});
        exit_code = emit(rep, json_out);
    });

    // cor13
    auto* cor13 = app.add_subcommand("cor13", "unique-subset fractional inequalities");
    std::string j_text;
    add_system_options(cor13, args);
    cor13->add_option("--J", j_text, "comma list of 1-based indices")->required();
    cor13->add_option("--weights", args.weights, "comma list m_1,..,m_k");
    cor13->callback([&] {
        System sys = load_system(args);
        std::vector<int> J;
        for (Int v : parse_int_list(j_text)) J.push_back(static_cast<int>(v));
        Corollary13Result c = corollary_1_3_check(load_weighted(args, sys), J, limits);
        bool ok = !c.unique || (c.ineq_1_9 && c.ineq_1_10);
        Report rep;
        rep.command = "cor13";
        rep.input_system = format_system(sys);
        rep.distinguished = sys.distinguished();
        rep.add("cor13", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                std::string("J sum ") + c.j_sum.str() + (c.unique ? " (unique)" : " (not unique)"),
                {{"unique", c.unique}, {"ineq_1_9", c.ineq_1_9}, {"ineq_1_10", c.ineq_1_10}});
        exit_code = emit(rep, json_out);
    });

    // cor14
    auto* cor14 = app.add_subcommand("cor14", "tail-block alternative for m-covers");
    long long cor14_r = 0;
    int cor14_m = 0;
    add_system_options(cor14, args);
    cor14->add_option("--r", cor14_r, "tail parameter r")->required();
    cor14->add_option("--m", cor14_m, "cover multiplicity (default: min multiplicity)");
    cor14->callback([&] {
        System sys = load_system(args).sorted_by_modulus();
        int m = cor14_m > 0 ? cor14_m : covering_profile(sys, limits).min_multiplicity;
        Alternatives alt = corollary_1_4_check(sys, m, cor14_r, limits);
        Report rep;
        rep.command = "cor14";
        rep.input_system = format_system(sys);
        rep.add("cor14", VerdictStatus::Pass,
                std::string("alternative holds: ") + (alt.alt1 ? "reciprocal-sum" : "semigroup"),
                {{"alt1", alt.alt1}, {"alt2", alt.alt2}, {"m", m}, {"r", cor14_r}});
        exit_code = emit(rep, json_out);
    });

    // cert-lemma21
    auto* lemma21 = app.add_subcommand("cert-lemma21", "polynomial divisibility certificate");
    int lemma21_m = 1;
    bool lemma21_literal = false;
    add_system_options(lemma21, args);
    lemma21->add_option("--m", lemma21_m, "cover multiplicity")->required();
    lemma21->add_option("--weights", args.weights, "comma list m_1,..,m_k");
    lemma21->add_flag("--literal", lemma21_literal, "also run the literal division route (lcm <= 48)");
    lemma21->callback([&] {
        System sys = load_system(args);
        WeightedSystem ws = load_weighted(args, sys);
        Lemma21Certificate cert = lemma_2_1_certificate(ws, lemma21_m, limits);
        Report rep;
        rep.command = "cert-lemma21";
        rep.input_system = format_system(sys);
        rep.add("cert-lemma21", cert.divides ? VerdictStatus::Pass : VerdictStatus::Fail,
                cert.divides ? "(1-z^N)^m divides the product polynomial"
                             : "divisibility fails",
                {{"m", lemma21_m}, {"weights_coprime", cert.weights_coprime}});
        if (lemma21_literal) {
            bool lit = lemma_2_1_division_crosscheck(ws, lemma21_m, limits);
            rep.add("cert-lemma21-literal",
                    lit == cert.divides ? VerdictStatus::Pass : VerdictStatus::Fail,
                    lit == cert.divides ? "literal division agrees" : "literal division disagrees");
        }
        exit_code = emit(rep, json_out);
    });

    // thm13 / thm31 / lemma31 / cor15 / cor31
    auto* thm13 = app.add_subcommand("thm13", "S(n, alpha) m-system characterization");
    int thm13_m = 1;
    add_system_options(thm13, args);
    thm13->add_option("--m", thm13_m, "system multiplicity")->required();
    thm13->callback([&] {
        System sys = load_system(args);
        bool is = theorem_1_3_check(sys, thm13_m, limits);
        Report rep;
        rep.command = "thm13";
        rep.input_system = format_system(sys);
        rep.add("thm13", VerdictStatus::Pass,
                std::string("characterization agrees with the scan; ") +
                    (is ? "is" : "is not") + " a " + std::to_string(thm13_m) + "-system");
        exit_code = emit(rep, json_out);
    });

    auto* thm31 = app.add_subcommand("thm31", "tuple m-system characterization");
    int thm31_m = 1;
    add_system_options(thm31, args);
    thm31->add_option("--m", thm31_m, "system multiplicity")->required();
    thm31->callback([&] {
        System sys = load_system(args);
        bool is = theorem_3_1_check(sys, thm31_m, limits);
        Report rep;
        rep.command = "thm31";
        rep.input_system = format_system(sys);
        rep.add("thm31", VerdictStatus::Pass,
                std::string("characterization agrees with the scan; ") +
                    (is ? "is" : "is not") + " a " + std::to_string(thm31_m) + "-system");
        exit_code = emit(rep, json_out);
    });

    auto* lemma31 = app.add_subcommand("lemma31", "subset-sum m-cover identities");
    int lemma31_m = 1;
    add_system_options(lemma31, args);
    lemma31->add_option("--m", lemma31_m, "cover multiplicity")->required();
    lemma31->add_option("--weights", args.weights, "comma list m_1,..,m_k");
    lemma31->callback([&] {
        System sys = load_system(args);
        bool ok = lemma_3_1_check(load_weighted(args, sys), lemma31_m, limits);
        Report rep;
        rep.command = "lemma31";
        rep.input_system = format_system(sys);
        rep.add("lemma31", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                ok ? "identities hold" : "identities fail");
        exit_code = emit(rep, json_out);
    });

    auto* cor15 = app.add_subcommand("cor15", "disjoint-system exponential identity");
    add_system_options(cor15, args);
    cor15->callback([&] {
        System sys = load_system(args);
        bool ok = corollary_1_5_check(sys, limits);
        Report rep;
        rep.command = "cor15";
        rep.input_system = format_system(sys);
        rep.add("cor15", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                ok ? "identity verified" : "identity failed");
        exit_code = emit(rep, json_out);
    });

    auto* cor31 = app.add_subcommand("cor31", "m-system binomial exponential identity");
    int cor31_m = 1;
    add_system_options(cor31, args);
    cor31->add_option("--m", cor31_m, "system multiplicity")->required();
    cor31->callback([&] {
        System sys = load_system(args);
        bool ok = corollary_3_1_check(sys, cor31_m, limits);
        Report rep;
        rep.command = "cor31";
        rep.input_system = format_system(sys);
        rep.add("cor31", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                ok ? "identity verified" : "identity failed");
        exit_code = emit(rep, json_out);
    });

    // thm12
    auto* thm12 = app.add_subcommand("thm12", "extremal reciprocal-sum bound");
    int thm12_m = 1;
    add_system_options(thm12, args);
    thm12->add_option("--m", thm12_m, "system multiplicity")->required();
    thm12->callback([&] {
        System sys = load_system(args).sorted_by_modulus();
        Theorem12Result t = theorem_1_2_check(sys, thm12_m, limits);
        Report rep;
        rep.command = "thm12";
        rep.input_system = format_system(sys);
        rep.add("thm12", t.bound_holds ? VerdictStatus::Pass : VerdictStatus::Fail,
                "sum " + t.sum.str() + " vs bound " + t.bound.str() +
                    (t.equality ? " (equality, extremal family)" : ""),
                {{"sum", t.sum.str()},
                 {"bound", t.bound.str()},
                 {"equality", t.equality},
                 {"extremal_form", t.extremal_form}});
        exit_code = emit(rep, json_out);
    });

    // dsemigroup
    auto* dsemi = app.add_subcommand("dsemigroup", "membership in D(n)");
    Int dsemi_n = 2;
    std::string dsemi_t;
    dsemi->add_option("n", dsemi_n, "modulus n >= 2")->required();
    dsemi->add_option("t", dsemi_t, "value to test")->required();
    dsemi->callback([&] {
        bool in = d_membership(dsemi_n, BigInt(dsemi_t), limits);
        if (json_out)
            std::cout << json{{"n", dsemi_n}, {"t", dsemi_t}, {"member", in}}.dump(2) << "\n";
        else
            std::cout << dsemi_t << (in ? " is " : " is not ") << "in D(" << dsemi_n << ")\n";
    });

    // newman-znam
    auto* nz = app.add_subcommand("newman-znam", "largest-modulus multiplicity bound");
    add_system_options(nz, args);
    nz->callback([&] {
        System sys = load_system(args).sorted_by_modulus();
        bool ok = newman_znam_check(sys, limits);
        Report rep;
        rep.command = "newman-znam";
        rep.input_system = format_system(sys);
        rep.add("newman-znam", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                ok ? "multiplicity of the largest modulus is at least its least prime divisor"
                   : "bound fails");
        exit_code = emit(rep, json_out);
    });

    // classical
    auto* classical = app.add_subcommand("classical", "disjoint-cover facts");
    add_system_options(classical, args);
    classical->callback([&] {
        System sys = load_system(args);
        ClassicalChecks c = classical_disjoint_checks(sys, limits);
        bool ok = c.dmnr.value_or(true) && c.erdos62.value_or(true);
        Report rep;
        rep.command = "classical";
        rep.input_system = format_system(sys);
        std::string d;
        if (c.dmnr) d += std::string("two largest moduli equal: ") + (*c.dmnr ? "yes" : "NO");
        if (c.erdos62)
            d += std::string(d.empty() ? "" : "; ") + "sum within 1 - 1/2^k: " +
                 (*c.erdos62 ? "yes" : "NO");
        rep.add("classical", ok ? VerdictStatus::Pass : VerdictStatus::Fail, d);
        exit_code = emit(rep, json_out);
    });

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "stream systems in a bounded space");
    SearchSpace space;
    int enum_msystem = -1;
    enum_cmd->add_option("--k", space.k, "class count")->required();
    enum_cmd->add_option("--max", space.max_modulus, "max modulus")->required();
    enum_cmd->add_flag("--disjoint", space.disjoint, "pairwise disjoint classes");
    enum_cmd->add_flag("--cover", space.cover, "covering systems only");
    enum_cmd->add_flag("--exact-cover", space.exact_cover, "exact covers only");
    enum_cmd->add_option("--m-system", enum_msystem, "max multiplicity at most m");
    enum_cmd->add_flag("--distinct-moduli", space.distinct_moduli, "strictly increasing moduli");
    enum_cmd->callback([&] {
        if (enum_msystem >= 0) space.m_system = enum_msystem;
        long long count = 0;
        enumerate(space, [&](const System& s) {
            ++count;
            std::cout << format_system(s) << "\n";
            return true;
        }, limits);
        json summary{{"k", space.k}, {"max_modulus", space.max_modulus}, {"count", count}};
        if (json_out)
            std::cout << summary.dump(2) << "\n";
        else
            std::cout << "# " << count << " systems\n";
    });

    // conjecture
    auto* conj = app.add_subcommand("conjecture", "disjoint-pair gcd scan");
    int conj_k = 2;
    Int conj_max = 2;
    conj->add_option("--k", conj_k, "class count")->required();
    conj->add_option("--max", conj_max, "max modulus")->required();
    conj->callback([&] {
        ConjectureScanResult r = conjecture_1_1_scan(conj_k, conj_max, limits);
        json out{{"k", r.k},
                 {"max_modulus", r.max_modulus},
                 {"systems_checked", r.systems_checked},
                 {"verified", r.verified},
                 {"counterexamples", json::array()}};
        for (const auto& s : r.counterexamples)
            out["counterexamples"].push_back(format_system(s));
        if (json_out)
            std::cout << out.dump(2) << "\n";
        else
            std::cout << (r.verified ? "verified" : "COUNTEREXAMPLES FOUND") << " for k = "
                      << r.k << ", moduli <= " << r.max_modulus << " ("
                      << r.systems_checked << " disjoint systems)\n";
        if (!r.verified) exit_code = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const TheoremViolated& e) {
        std::cerr << "theorem violated: " << e.what() << "\n";
        return 2;
    } catch (const CharacterizationMismatch& e) {
        std::cerr << "characterization mismatch: " << e.what() << "\n";
        return 2;
    } catch (const NormNotRationalInteger& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const SieveTooLarge& e) {
        std::cerr << "resource ceiling: " << e.what() << "\n";
        return 4;
    } catch (const TooManySubsets& e) {
        std::cerr << "resource ceiling: " << e.what() << "\n";
        return 4;
    } catch (const EnumerationTooLarge& e) {
        std::cerr << "resource ceiling: " << e.what() << "\n";
        return 4;
    } catch (const WorkCeilingExceeded& e) {
        std::cerr << "resource ceiling: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
