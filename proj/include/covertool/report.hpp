#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "covertool/system.hpp"

namespace covertool {

enum class VerdictStatus { Pass, Fail, Skip, Resource };

struct Verdict {
    std::string check;
    VerdictStatus status = VerdictStatus::Skip;
    std::string detail;          // witness, counterexample, or skip reason
    nlohmann::json data;         // structured payload, check-specific
};

// Round-trips through JSON without loss; the schema string is versioned.
struct Report {
    static constexpr const char* kSchema = "covertool-report/1";

    std::string command;
    std::string input_system;  // canonical text form
    bool distinguished = false;
    std::vector<Verdict> verdicts;
    double timing_ms = 0.0;

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);

    void add(std::string check, VerdictStatus status, std::string detail,
             nlohmann::json data = nlohmann::json::object());
    // 0 all pass, 2 some check failed, 4 a resource ceiling cut a check short.
    int exit_code() const;
    std::string text() const;  // one line per verdict
};

struct AnalysisOptions {
    std::optional<Rational> alpha;  // for the dichotomy report on distinguished systems
    Limits limits;
};

// Profile, classification for m in [1, max multiplicity], duality, and every
// applicable named check; checks whose preconditions fail are listed as
// skipped with the reason.
Report run_full_analysis(const System& system, const AnalysisOptions& options = {});

}  // namespace covertool
