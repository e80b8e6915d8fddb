#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dbl/check.hpp"
#include "dbl/spec_file.hpp"

namespace dbl {

inline constexpr int kReportSchemaVersion = 1;
// Roundtrip window |weight| <= 4 of the koszul suite.
inline constexpr int kRoundtripWindow = 4;

const std::vector<std::string>& all_suites();

struct RunOptions {
    std::vector<std::string> suites;  // empty: all
    std::optional<int> truncation_order;
    std::optional<int> max_weight;
    int jobs = 1;
};

struct SuiteResult {
    std::string suite;
    Report report;
    double seconds = 0;
    // Set when the suite's window is too small for the requested parameters.
    std::optional<std::string> refusal;
    int minimal_max_weight = 0;

    bool pass() const { return !refusal && report.pass(); }
};

struct RunReport {
    std::string spec;
    int truncation_order = 0;
    int max_weight = 0;
    std::vector<SuiteResult> suites;

    bool pass() const;
    bool refused() const;
};

// Throws WindowRefusal from the koszul suite and SpecError for faults that do not apply.
Report run_suite(const AlgebraSpec& spec, const std::string& suite, int truncation_order, int max_weight);
// Suites in the order requested, run concurrently up to options.jobs.
RunReport run_verify(const AlgebraSpec& spec, const RunOptions& options);

// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string serialize(const RunReport& report, bool timings);

class ReportConflict : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Union of canonical reports; the same key with different values throws
// ReportConflict naming its path, malformed input throws SpecError.
std::string merge_reports(const std::vector<std::pair<std::string, std::string>>& named_texts);

struct CohomologyOptions {
    std::string target = "moment";  // moment | ce | F-image
    std::pair<int, int> weights{0, 3};
    std::pair<int, int> degrees{0, 0};
    std::string module = "adjoint";
    bool invariants = false;
    std::optional<int> truncation_order;
};

std::string run_cohomology(const AlgebraSpec& spec, const CohomologyOptions& options);

}  // namespace dbl
