#include <cstdlib>
#include <string>

#include "dbl/runner.hpp"
#include "dbl/spec_file.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dbl;

namespace {

const char* kMinimal = R"({
  "schema_version": 1,
  "name": "tiny",
  "lie_algebra": {"basis": ["x"], "brackets": []},
  "representation": {"dimension": 1, "matrices": {"x": [[2]]}}
})";

std::string error_of(const std::string& text) {
    try {
        parse_spec(text, "tiny.json");
    } catch (const SpecError& e) {
        return e.what();
    }
    return {};
}

std::string with(const std::string& from, const std::string& to) {
    std::string text = kMinimal;
    text.replace(text.find(from), from.size(), to);
    return text;
}

}  // namespace

TEST_SUITE("cli_runner") {
    TEST_CASE("minimal spec parses with default parameters") {
        const AlgebraSpec spec = parse_spec(kMinimal, "tiny.json");
        CHECK(spec.name == "tiny");
        CHECK(spec.g.dim() == 1);
        CHECK(spec.rho.matrices.at(0).at(0).at(0) == 2);
        CHECK(spec.truncation_order == 4);
        CHECK(spec.max_weight == 6);
    }

    TEST_CASE("diagnostics carry a location") {
        CHECK(error_of(with("[[2]]", "[[2.5]]")).find("tiny.json:/representation/matrices/x/0/0") == 0);
        CHECK(error_of(with("\"name\"", "\"nmae\"")).find("unknown field \"nmae\"") != std::string::npos);
        CHECK(error_of(with("\"schema_version\": 1", "\"schema_version\": 2")).find("tiny.json:") == 0);
        CHECK(error_of("{\n  \"name\": ]").find("tiny.json:2:") == 0);
        CHECK(error_of(with("[[2]]", "[[2, 0]]")).find("tiny.json:") == 0);
    }

    TEST_CASE("spec names resolve through the example directory") {
        setenv("DOUBLECHECK_EXAMPLE_DIR", DOUBLECHECK_TEST_SPECS, 1);
        CHECK(resolve_spec("sqed1").filename() == "sqed1.json");
        CHECK(resolve_spec("sqed1.json").filename() == "sqed1.json");
        CHECK_THROWS_AS(resolve_spec("no-such-spec"), SpecError);
        unsetenv("DOUBLECHECK_EXAMPLE_DIR");
    }

    TEST_CASE("verify reports are deterministic and merge idempotently") {
        const AlgebraSpec spec = fixtures::spec("sqed1");
        RunOptions options;
        options.suites = {"lie", "cybe", "dga"};
        const std::string first = serialize(run_verify(spec, options), false);
        options.jobs = 2;
        const std::string second = serialize(run_verify(spec, options), false);
        CHECK(first == second);
        CHECK(merge_reports({{"a", first}, {"b", first}}) == first);

        const std::string& needle = "\"pass\": true";
        std::string flipped = first;
        flipped.replace(flipped.rfind(needle), needle.size(), "\"pass\": false");
        CHECK_THROWS_AS(merge_reports({{"a", first}, {"b", flipped}}), ReportConflict);
        CHECK_THROWS_AS(merge_reports({{"a", "{"}}), SpecError);
    }

    TEST_CASE("each corrupted fixture fails only its suite") {
        const std::pair<const char*, const char*> cases[] = {
            {"sqed1-flipf", "lie"}, {"sqed1-corrupt", "cybe"}, {"sqed1-flipdelta", "hopf"}};
        for (const auto& [name, suite] : cases) {
            CAPTURE(name);
            RunOptions options;
            options.suites = {"lie", "cybe", "hopf"};
            const RunReport report = run_verify(fixtures::spec(name), options);
            for (const auto& s : report.suites) {
                CAPTURE(s.suite);
                CHECK(s.pass() == (s.suite != suite));
            }
        }
    }

    TEST_CASE("a small window is refused with the minimal parameters") {
        RunOptions options;
        options.suites = {"koszul"};
        options.max_weight = 3;
        const RunReport report = run_verify(fixtures::spec("sqed1"), options);
        REQUIRE(report.suites.size() == 1);
        CHECK(report.refused());
        CHECK(report.suites[0].minimal_max_weight > 3);
    }

    TEST_CASE("cohomology output for the sqed moment DGA") {
        CohomologyOptions options;
        options.weights = {0, 3};
        const std::string text = run_cohomology(fixtures::spec("sqed1"), options);
        CHECK(text.find("\"d=0,w=2\"") != std::string::npos);
        CHECK(text.back() == '\n');
    }
}
