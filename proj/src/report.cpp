#include "covertool/report.hpp"

#include <chrono>

#include "covertool/characterizations.hpp"
#include "covertool/covering.hpp"
#include "covertool/enumeration.hpp"
#include "covertool/extremal.hpp"
#include "covertool/io.hpp"
#include "covertool/subset_sums.hpp"

namespace covertool {

namespace {

const char* status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Fail: return "fail";
        case VerdictStatus::Skip: return "skip";
        case VerdictStatus::Resource: return "resource";
    }
    return "?";
}

VerdictStatus status_from_name(const std::string& s) {
    if (s == "pass") return VerdictStatus::Pass;
    if (s == "fail") return VerdictStatus::Fail;
    if (s == "skip") return VerdictStatus::Skip;
    if (s == "resource") return VerdictStatus::Resource;
    throw ParseError("unknown verdict status '" + s + "'", 1, 1);
}

}  // namespace

void Report::add(std::string check, VerdictStatus status, std::string detail,
                 nlohmann::json data) {
    verdicts.push_back(Verdict{std::move(check), status, std::move(detail), std::move(data)});
}

nlohmann::json Report::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : verdicts)
        vs.push_back({{"check", v.check},
                      {"status", status_name(v.status)},
                      {"detail", v.detail},
                      {"data", v.data}});
    return nlohmann::json{{"schema", kSchema},
                          {"command", command},
                          {"system", input_system},
                          {"distinguished", distinguished},
                          {"verdicts", vs},
                          {"timing_ms", timing_ms}};
}

Report Report::from_json(const nlohmann::json& j) {
    if (j.value("schema", "") != kSchema)
        throw ParseError("unsupported report schema", 1, 1);
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input_system = j.at("system").get<std::string>();
    r.distinguished = j.value("distinguished", false);
    r.timing_ms = j.at("timing_ms").get<double>();
    for (const auto& v : j.at("verdicts"))
        r.verdicts.push_back(Verdict{v.at("check").get<std::string>(),
                                     status_from_name(v.at("status").get<std::string>()),
                                     v.at("detail").get<std::string>(),
                                     v.value("data", nlohmann::json::object())});
    return r;
}

int Report::exit_code() const {
    bool resource = false;
    for (const auto& v : verdicts) {
        if (v.status == VerdictStatus::Fail) return 2;
        if (v.status == VerdictStatus::Resource) resource = true;
    }
    return resource ? 4 : 0;
}

std::string Report::text() const {
    std::string out = "system: " + (input_system.empty() ? "(empty)" : input_system);
    if (distinguished) out += "  [index-0 class distinguished]";
    out += "\n";
    for (const auto& v : verdicts) {
        out += "  [";
        out += status_name(v.status);
        out += "] ";
        out += v.check;
        if (!v.detail.empty()) out += ": " + v.detail;
        out += "\n";
    }
    return out;
}

namespace {

nlohmann::json witnesses_json(const std::vector<std::uint32_t>& masks) {
    nlohmann::json out = nlohmann::json::array();
    for (auto mask : masks) {
        nlohmann::json subset = nlohmann::json::array();
        for (int s = 1; mask >> (s - 1) != 0; ++s)
            if (mask & (1u << (s - 1))) subset.push_back(s);
        out.push_back(subset);
    }
    return out;
}

nlohmann::json rows_json(const std::vector<Theorem11Row>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows)
        out.push_back({{"a", row.a},
                       {"v", row.value.str()},
                       {"count", row.count.get_str()},
                       {"required", row.required.get_str()},
                       {"csum_zero", row.csum_zero},
                       {"witnesses", witnesses_json(row.witnesses)}});
    return out;
}

}  // namespace

Report run_full_analysis(const System& system, const AnalysisOptions& options) {
    auto t0 = std::chrono::steady_clock::now();
    const Limits& L = options.limits;

    Report rep;
    rep.command = "analyze";
    rep.input_system = format_system(system);
    rep.distinguished = system.distinguished();

    auto guarded = [&](const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const PreconditionFailed& e) {
            rep.add(name, VerdictStatus::Skip, e.what());
        } catch (const SieveTooLarge& e) {
            rep.add(name, VerdictStatus::Resource, e.what());
        } catch (const TooManySubsets& e) {
            rep.add(name, VerdictStatus::Resource, e.what());
        } catch (const EnumerationTooLarge& e) {
            rep.add(name, VerdictStatus::Resource, e.what());
        } catch (const WorkCeilingExceeded& e) {
            rep.add(name, VerdictStatus::Resource, e.what());
        } catch (const Error& e) {
            rep.add(name, VerdictStatus::Fail, e.what());
        }
    };

    CoveringProfile prof;
    bool have_profile = false;
    guarded("profile", [&] {
        prof = covering_profile(system, L);
        have_profile = true;
        rep.add("profile", VerdictStatus::Pass,
                "period " + std::to_string(prof.period) + ", multiplicity in [" +
                    std::to_string(prof.min_multiplicity) + ", " +
                    std::to_string(prof.max_multiplicity) + "], average " + prof.average.str(),
                {{"period", prof.period},
                 {"min", prof.min_multiplicity},
                 {"max", prof.max_multiplicity},
                 {"average", prof.average.str()}});
    });
    if (!have_profile) {
        rep.timing_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        return rep;
    }

    const int minw = prof.min_multiplicity;
    const int maxw = prof.max_multiplicity;
    for (int m = 1; m <= std::max(maxw, 1); ++m) {
        Classification c{.is_m_cover = minw >= m,
                         .is_exact_m_cover = minw == m && maxw == m,
                         .is_m_system = maxw <= m};
        std::string d;
        if (c.is_exact_m_cover)
            d = "exact " + std::to_string(m) + "-cover";
        else if (c.is_m_cover)
            d = std::to_string(m) + "-cover";
        if (c.is_m_system) d += (d.empty() ? "" : ", ") + std::to_string(m) + "-system";
        if (d.empty()) d = "neither " + std::to_string(m) + "-cover nor " +
                           std::to_string(m) + "-system";
        rep.add("classify(m=" + std::to_string(m) + ")", VerdictStatus::Pass, d,
                {{"m", m},
                 {"is_m_cover", c.is_m_cover},
                 {"is_exact_m_cover", c.is_exact_m_cover},
                 {"is_m_system", c.is_m_system}});
    }

    guarded("duality", [&] {
        bool ok = check_duality(system, L);
        rep.add("duality", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                ok ? "w_A + w_A* is constant k" : "duality identity failed");
    });

    if (system.distinguished()) {
        WeightedSystem ws = WeightedSystem::unit(system);
        Rational alpha = options.alpha.value_or(Rational(0));
        guarded("thm11(alpha=" + alpha.str() + ")", [&] {
            Theorem11Report t = theorem_1_1_report(ws, alpha, L);
            rep.add("thm11(alpha=" + alpha.str() + ")", VerdictStatus::Pass,
                    t.branch == Theorem11Branch::Vanishing ? "vanishing branch"
                                                           : "counting branch",
                    {{"branch",
                      t.branch == Theorem11Branch::Vanishing ? "Vanishing" : "Counting"},
                     {"m", t.m},
                     {"alpha", t.alpha.str()},
                     {"rows", rows_json(t.rows)}});
        });
        guarded("cor11", [&] {
            CountingBoundResult c = corollary_1_1_check(system, L);
            rep.add("cor11", c.ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                    c.ok ? "counting bound holds for all a"
                         : "violated at a = " + std::to_string(*c.first_violation),
                    {{"rows", rows_json(c.rows)}});
        });
    } else {
        System sorted = system.sorted_by_modulus();

        if (maxw >= 1) {
            guarded("thm12(m=" + std::to_string(maxw) + ")", [&] {
                Theorem12Result t = theorem_1_2_check(sorted, maxw, L);
                rep.add("thm12(m=" + std::to_string(maxw) + ")",
                        t.bound_holds ? VerdictStatus::Pass : VerdictStatus::Fail,
                        "sum " + t.sum.str() + " vs bound " + t.bound.str() +
                            (t.equality ? " (equality, extremal family)" : ""),
                        {{"sum", t.sum.str()},
                         {"bound", t.bound.str()},
                         {"equality", t.equality},
                         {"extremal_form", t.extremal_form}});
            });
        }

        guarded("cor12", [&] {
            Corollary12Result c = corollary_1_2_check(system, L);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : c.rows)
                rows.push_back({{"n", row.n},
                                {"count", row.count.get_str()},
                                {"required", row.required.get_str()}});
            rep.add("cor12", c.ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                    "tuple counts for n in [" + std::to_string(c.m) + ", " +
                        std::to_string(system.k()) + "]",
                    {{"m", c.m}, {"rows", rows}});
        });

        guarded("representable", [&] {
            RepresentableResult r = representable_integers(system, L);
            nlohmann::json reps = nlohmann::json::array();
            for (Int n : r.representable) reps.push_back(n);
            rep.add("representable", VerdictStatus::Pass,
                    std::to_string(r.representable.size()) + " of " +
                        std::to_string(system.k()) + " integers representable",
                    {{"representable", reps}});
        });

        if (maxw >= 1) {
            guarded("thm13(m=" + std::to_string(maxw) + ")", [&] {
                bool ok = theorem_1_3_check(system, maxw, L);
                rep.add("thm13(m=" + std::to_string(maxw) + ")",
                        ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                        "S(n, alpha) characterization agrees with the direct scan");
            });
            guarded("thm31(m=" + std::to_string(maxw) + ")", [&] {
                bool ok = theorem_3_1_check(system, maxw, L);
                rep.add("thm31(m=" + std::to_string(maxw) + ")",
                        ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                        "tuple characterization agrees with the direct scan");
            });
            guarded("cor31(m=" + std::to_string(maxw) + ")", [&] {
                bool ok = corollary_3_1_check(system, maxw, L);
                rep.add("cor31(m=" + std::to_string(maxw) + ")",
                        ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                        ok ? "identity verified" : "identity failed");
            });
        }

        if (minw >= 1) {
            WeightedSystem unit = WeightedSystem::unit(system);
            guarded("cert-lemma21(m=" + std::to_string(minw) + ")", [&] {
                Lemma21Certificate cert = lemma_2_1_certificate(unit, minw, L);
                rep.add("cert-lemma21(m=" + std::to_string(minw) + ")",
                        cert.divides ? VerdictStatus::Pass : VerdictStatus::Fail,
                        cert.divides ? "divisibility certificate verified"
                                     : "certificate failed");
            });
            guarded("lemma31(m=" + std::to_string(minw) + ")", [&] {
                bool ok = lemma_3_1_check(unit, minw, L);
                rep.add("lemma31(m=" + std::to_string(minw) + ")",
                        ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                        ok ? "cover identities verified" : "cover identities failed");
            });
        }

        if (maxw <= 1 && system.k() >= 1) {
            guarded("cor15", [&] {
                bool ok = corollary_1_5_check(system, L);
                rep.add("cor15", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                        ok ? "disjoint identity verified" : "disjoint identity failed");
            });
            guarded("classical", [&] {
                ClassicalChecks c = classical_disjoint_checks(system, L);
                bool ok = c.dmnr.value_or(true) && c.erdos62.value_or(true);
                std::string d;
                if (c.dmnr) d += std::string("two largest moduli equal: ") +
                                 (*c.dmnr ? "yes" : "NO");
                if (c.erdos62)
                    d += std::string(d.empty() ? "" : "; ") + "reciprocal sum within 1 - 1/2^k: " +
                         (*c.erdos62 ? "yes" : "NO");
                rep.add("classical", ok ? VerdictStatus::Pass : VerdictStatus::Fail, d);
            });
        }

        if (minw >= 1 && minw == maxw) {
            guarded("newman-znam", [&] {
                bool ok = newman_znam_check(sorted, L);
                rep.add("newman-znam", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                        ok ? "largest-modulus multiplicity >= its least prime divisor"
                           : "multiplicity below the least prime divisor");
            });
        }

        if (minw >= 1 && system.k() >= 2) {
            guarded("cor14", [&] {
                const int k = sorted.k();
                const Int nk = sorted.regular(k).n;
                int l = 0;
                while (l < k && sorted.regular(k - l).n == nk) ++l;
                if (l == k) throw PreconditionFailed("all moduli equal; no tail block");
                const Int below = sorted.regular(k - l).n;
                nlohmann::json rows = nlohmann::json::array();
                bool all_ok = true;
                for (long long r = 0; r <= l && r * below < nk; ++r) {
                    Alternatives alt = corollary_1_4_check(sorted, minw, r, L);
                    rows.push_back({{"r", r}, {"alt1", alt.alt1}, {"alt2", alt.alt2}});
                    all_ok &= alt.alt1 || alt.alt2;
                }
                rep.add("cor14", all_ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                        "disjunction holds for every admissible r", {{"rows", rows}});
            });
        }
    }

    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

}  // namespace covertool
