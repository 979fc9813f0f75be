#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covertool/enumeration.hpp"
#include "covertool/io.hpp"
#include "covertool/report.hpp"

using namespace covertool;

TEST_CASE("text parsing") {
    System erdos = parse_system_text("0(2),0(3),1(4),5(6),7(12)");
    CHECK(erdos.k() == 5);
    CHECK(erdos.regular(1) == ResidueClass(0, 2));
    CHECK(erdos.regular(5) == ResidueClass(7, 12));

    CHECK(parse_system_text("7(3)") == parse_system_text("1(3)"));  // canonicalized
    CHECK(parse_system_text("-1(4)") == parse_system_text("3(4)"));
    CHECK(parse_system_text("").empty());
    CHECK(parse_system_text("0(2)\n1(2)") == parse_system_text("0(2),1(2)"));
    CHECK(parse_system_text(" 0 ( 2 ) , 1 ( 2 ) ").k() == 2);

    CHECK_THROWS_AS(parse_system_text("0(0)"), InvalidModulus);
    CHECK_THROWS_AS(parse_system_text("0(-3)"), InvalidModulus);
    CHECK_THROWS_AS(parse_system_text("0(2"), ParseError);
    CHECK_THROWS_AS(parse_system_text("x(2)"), ParseError);
    CHECK_THROWS_AS(parse_system_text("0(2) 1(2)"), ParseError);
}

TEST_CASE("parse errors carry position") {
    try {
        parse_system_text("0(2),\n1(0)");
        FAIL("expected InvalidModulus");
    } catch (const InvalidModulus& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("JSON parsing") {
    System sys = parse_system_json(R"({"classes": [{"a": 0, "n": 2}, {"a": 7, "n": 3}]})");
    CHECK(sys.k() == 2);
    CHECK(sys.regular(2) == ResidueClass(1, 3));
    CHECK(!sys.distinguished());

    System dist = parse_system_json(
        R"({"classes": [{"a": 0, "n": 2}, {"a": 0, "n": 3}], "distinguished": true})");
    CHECK(dist.distinguished());
    CHECK(dist.k() == 1);
    CHECK(dist.head() == ResidueClass(0, 2));

    CHECK_THROWS_AS(parse_system_json(R"({"classes": [{"a": 0, "n": 0}]})"), InvalidModulus);
    CHECK_THROWS_AS(parse_system_json(R"({"classes": "nope"})"), ParseError);
    CHECK_THROWS_AS(parse_system_json("{"), ParseError);
}

TEST_CASE("format sniffing") {
    CHECK(parse_system("0(2),1(2)").k() == 2);
    CHECK(parse_system(R"(  {"classes": [{"a": 1, "n": 2}]})").k() == 1);
}

TEST_CASE("round trip over enumerated small systems") {
    SearchSpace space;
    space.k = 2;
    space.max_modulus = 4;
    for (const auto& sys : enumerate_all(space)) {
        CHECK(parse_system_text(format_system(sys)) == sys);
        CHECK(system_from_json(system_to_json(sys)) == sys);
    }
    System dist({ResidueClass(0, 2), ResidueClass(1, 3)}, true);
    CHECK(system_from_json(system_to_json(dist)) == dist);
}

TEST_CASE("report JSON round trip") {
    Report rep = run_full_analysis(parse_system("1(2),2(4),4(8)"));
    nlohmann::json j = rep.to_json();
    Report back = Report::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.command == "analyze");
    CHECK(back.exit_code() == 0);
}

TEST_CASE("analysis of the empty system is all-vacuous") {
    Report rep = run_full_analysis(System{});
    CHECK(rep.exit_code() == 0);
    bool saw_profile = false;
    for (const auto& v : rep.verdicts)
        if (v.check == "profile") {
            saw_profile = true;
            CHECK(v.data["min"] == 0);
        }
    CHECK(saw_profile);
}

TEST_CASE("analysis reports named checks on the chain system") {
    Report rep = run_full_analysis(parse_system("1(2),2(4),4(8)"));
    bool thm12 = false, cor15 = false;
    for (const auto& v : rep.verdicts) {
        if (v.check.starts_with("thm12")) {
            thm12 = true;
            CHECK(v.status == VerdictStatus::Pass);
            CHECK(v.data["equality"] == true);
        }
        if (v.check == "cor15") {
            cor15 = true;
            CHECK(v.status == VerdictStatus::Pass);
        }
    }
    CHECK(thm12);
    CHECK(cor15);
}
