#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dbl/koszul.hpp"
#include "dbl/runner.hpp"

namespace {

enum ExitCode { kPass = 0, kFail = 1, kParseError = 2, kRefused = 3 };

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        std::size_t used = 0;
        const int lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(text);
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected a..b with a <= b, got " + text);
    }
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dbl::SpecError(path + ": cannot read file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Drinfeld doubles of graded Lie algebras and their Koszul duality"};
    app.require_subcommand(1);

    std::string spec_arg;
    std::string out_path;
    std::string suites;
    std::optional<int> order;
    std::optional<int> max_weight;
    int jobs = 1;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites on a spec file");
    verify->add_option("spec", spec_arg, "Spec file, or a fixture name")->required();
    verify->add_option("--suite", suites, "Comma-separated subset of lie,cybe,hopf,ribbon,dga,tangent,koszul,braiding");
    verify->add_option("--truncation-order", order, "Work modulo hbar^N")->check(CLI::PositiveNumber);
    verify->add_option("--max-weight", max_weight, "Weight cap W")->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", jobs, "Suites run concurrently")->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "Write the report here instead of stdout");
    verify->add_flag("--timings", timings, "Include per-suite wall-clock seconds");

    std::string target = "moment";
    std::string weights = "0..3";
    std::string degrees = "0..0";
    std::string module = "adjoint";
    bool invariants = false;
    auto* cohomology = app.add_subcommand("cohomology", "Cohomology dimensions per (degree, weight) block");
    cohomology->add_option("spec", spec_arg, "Spec file, or a fixture name")->required();
    cohomology->add_option("--target", target, "moment, ce or F-image")->check(CLI::IsMember({"moment", "ce", "F-image"}));
    cohomology->add_option("--weights", weights, "Weight range a..b");
    cohomology->add_option("--degrees", degrees, "Degree range a..b");
    cohomology->add_option("--module", module, "Module for the F-image target");
    cohomology->add_option("--truncation-order", order, "Work modulo hbar^N")->check(CLI::PositiveNumber);
    cohomology->add_flag("--invariants", invariants, "Also report g-invariant dimensions");
    cohomology->add_option("--out", out_path, "Write the report here instead of stdout");

    std::vector<std::string> inputs;
    auto* report = app.add_subcommand("report", "Merge reports, failing on conflicting keys");
    report->add_option("reports", inputs, "Report files")->required();
    report->add_option("--out", out_path, "Write the merged report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        if (verify->parsed()) {
            const dbl::AlgebraSpec spec = dbl::load_spec(dbl::resolve_spec(spec_arg));
            dbl::RunOptions options;
            options.suites = split(suites);
            options.truncation_order = order;
            options.max_weight = max_weight;
            options.jobs = jobs;
            const dbl::RunReport result = dbl::run_verify(spec, options);
            emit(dbl::serialize(result, timings), out_path);
            for (const auto& s : result.suites) {
                std::cerr << s.suite << ": " << (s.refusal ? "refused" : s.pass() ? "pass" : "FAIL");
                if (const auto* f = s.report.first_failure()) std::cerr << " (" << f->name << ": " << f->detail.substr(0, 200) << ")";
                std::cerr << "\n";
            }
            if (result.refused()) {
                int minimal = 0;
                for (const auto& s : result.suites) {
                    if (s.refusal) {
                        std::cerr << "refused: " << *s.refusal << "\n";
                        minimal = std::max(minimal, s.minimal_max_weight);
                    }
                }
                std::cerr << "minimal parameters: --truncation-order " << result.truncation_order << " --max-weight " << minimal << "\n";
                return kRefused;
            }
            return result.pass() ? kPass : kFail;
        }
        if (cohomology->parsed()) {
            const dbl::AlgebraSpec spec = dbl::load_spec(dbl::resolve_spec(spec_arg));
            dbl::CohomologyOptions options;
            options.target = target;
            options.weights = parse_range(weights);
            options.degrees = parse_range(degrees);
            options.module = module;
            options.invariants = invariants;
            options.truncation_order = order;
            emit(dbl::run_cohomology(spec, options), out_path);
            return kPass;
        }
        std::vector<std::pair<std::string, std::string>> texts;
        for (const auto& path : inputs) texts.emplace_back(path, read_file(path));
        emit(dbl::merge_reports(texts), out_path);
        return kPass;
    } catch (const dbl::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const dbl::ReportConflict& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
