#include "dbl/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <thread>

#include "dbl/hopf.hpp"
#include "dbl/koszul.hpp"
#include "dbl/tangent.hpp"
#include "json.hpp"

namespace dbl {

namespace {

using nlohmann::json;

int basis_index(const LieAlgebraData& L, const std::string& name, const FaultSpec& fault) {
    const int i = L.basis().find(name);
    if (i < 0) throw SpecError(fault.location + ": " + name + " is not a basis element of the double");
    return i;
}

std::vector<const FaultSpec*> faults_for(const AlgebraSpec& spec, const std::string& suite) {
    std::vector<const FaultSpec*> out;
    for (const auto& f : spec.faults) {
        if (f.suite == suite) out.push_back(&f);
    }
    return out;
}

Report lie_suite(const AlgebraSpec& spec, const DoubleData& dd) {
    LieAlgebraData L = dd.algebra;
    for (const FaultSpec* f : faults_for(spec, "lie")) {
        if (f->target.size() != 3) throw SpecError(f->location + ": flip_structure_constant needs [a, b, c]");
        const int a = basis_index(L, f->target[0], *f);
        const int b = basis_index(L, f->target[1], *f);
        const int c = basis_index(L, f->target[2], *f);
        const Rational value = L.structure_constant(a, b, c);
        if (sgn(value) == 0) throw SpecError(f->location + ": the structure constant is zero");
        L.set_structure_constant(a, b, c, -value);
    }
    Report report;
    report.append(check_jacobi(L));
    report.append(check_invariant_form(L, dd.kappa));
    report.append(check_semidirect(dd, positive_subalgebra(dd)));
    return report;
}

Report cybe_suite(const AlgebraSpec& spec, const DoubleData& dd) {
    SparseTensor r = classical_r(dd);
    for (const FaultSpec* f : faults_for(spec, "cybe")) {
        if (f->target.size() != 2) throw SpecError(f->location + ": drop_r_term needs [left, right]");
        const SparseTensor::Index index{basis_index(dd.algebra, f->target[0], *f), basis_index(dd.algebra, f->target[1], *f)};
        const TruncatedSeries value = r.at(index);
        if (value.is_zero()) throw SpecError(f->location + ": r has no such term");
        r.add(index, -value);
    }
    Report report;
    report.append(check_cybe(r, dd.algebra));
    const Uea uea(dd.algebra, 1);
    const UEAElement c = casimir(uea, dd);
    report.append(check_casimir_central(uea, c));
    const UEAElement residual = omega(uea, r) - omega_from_casimir(uea, c);
    report.add("omega_identity", residual.is_zero(), residual.is_zero() ? "0" : residual.to_string(uea.basis()));
    return report;
}

Report hopf_suite(const AlgebraSpec& spec, const DoubleData& dd, int order, int max_weight) {
    HopfDouble A(dd, order, max_weight);
    for (const FaultSpec* f : faults_for(spec, "hopf")) {
        if (f->target.size() != 1) throw SpecError(f->location + ": flip_coproduct_sign needs [generator]");
        const int g = basis_index(dd.algebra, f->target[0], *f);
        if (dd.in_h(g)) throw SpecError(f->location + ": " + f->target[0] + " is not a dual generator");
        const Uea& U = A.uea();
        UEAElement flipped = U.tensor({U.generator(g), U.one()}) * Rational(2);
        flipped -= A.coproduct_generator(g);
        A.set_coproduct_generator(g, flipped);
    }
    Report report;
    report.append(check_dual_coproduct(A));
    report.append(check_cross_relations(A));
    report.append(verify_hopf_axioms(A));
    return report;
}

std::string cohomology_table(const CohomologyReport& rep, std::pair<int, int> weights, int degree) {
    std::string out;
    for (int w = weights.first; w <= weights.second; ++w) {
        const auto it = rep.dimensions.find({degree, w});
        if (!out.empty()) out += " ";
        out += "w" + std::to_string(w) + ":" + std::to_string(it == rep.dimensions.end() ? 0 : it->second);
    }
    return out;
}

Report dga_suite(const AlgebraSpec& spec, const DoubleData& dd, int max_weight) {
    Report report;
    report.append(check_moment_equals_ce(dd));
    const CommutativeDGA moment = build_moment_dga(dd.g, dd.rho);
    report.append(check_euler_characteristic(moment, max_weight), "moment_");
    const CohomologyReport rep = cohomology(moment, {0, max_weight}, {-1, 0}, true);
    report.add("moment_H0", true, cohomology_table(rep, {0, max_weight}, 0));
    report.add("moment_H-1", true, cohomology_table(rep, {0, max_weight}, -1));
    const FiberLinfty fiber = build_fiber_linfty(moment_fiber_map(dd.g, dd.rho));
    report.append(check_fiber_linfty(fiber, max_weight, "moment_fiber_"));
    report.append(check_fiber_cone_point(fiber, moment));
    for (const auto& f : spec.fiber_maps) {
        report.append(check_fiber_linfty(build_fiber_linfty(f.map), max_weight, f.name + "_"));
    }
    return report;
}

Report tangent_suite(const AlgebraSpec& spec, const DoubleData& dd, int order) {
    Report report;
    const DGLieStructure lie_m = build_tangent_lie_M(dd);
    report.append(check_dg_lie(lie_m, "lM_"));
    report.append(check_tangent_equals_F_adjoint(KoszulContext(dd, order), lie_m));
    report.append(check_dg_lie(build_tangent_quotient(spec.g, spec.rho), "lVG_"));
    return report;
}

Report koszul_suite(const AlgebraSpec& spec, const DoubleData& dd, int order, int max_weight) {
    const ModuleCatalog catalog = build_catalog(spec, dd, order);
    const KoszulContext context(dd, order);
    int needed = 0;
    for (const auto& m : catalog.modules) {
        needed = std::max(needed, minimal_weight_cap(functor_F(context, m), -kRoundtripWindow));
    }
    if (max_weight < needed) {
        throw WindowRefusal("the roundtrip window |weight| <= " + std::to_string(kRoundtripWindow) + " needs --max-weight " +
                                std::to_string(needed),
                            needed);
    }
    Report report;
    for (const auto& m : catalog.modules) {
        report.append(check_module(m), m.name() + "_");
        report.append(check_roundtrip(context, m, kRoundtripWindow, max_weight), m.name() + "_");
    }
    for (std::size_t i = 0; i < catalog.modules.size(); ++i) {
        for (std::size_t j = i; j < catalog.modules.size(); ++j) {
            const auto& a = catalog.modules[i];
            const auto& b = catalog.modules[j];
            report.append(check_monoidality(context, a, b), a.name() + "(x)" + b.name() + "_");
        }
    }
    for (const auto& s : spec.exact_sequences) {
        const ModuleMap& inclusion = catalog.map(s.inclusion);
        const ModuleMap& projection = catalog.map(s.projection);
        report.append(check_exactness(context, inclusion, projection, catalog.module(inclusion.source),
                                      catalog.module(inclusion.target), catalog.module(projection.target)),
                      s.inclusion + "," + s.projection + "_");
    }
    return report;
}

Report braiding_suite(const AlgebraSpec& spec, const DoubleData& dd, int order) {
    const ModuleCatalog catalog = build_catalog(spec, dd, order);
    const KoszulContext context(dd, order);
    const BraidingData braiding(dd, order);
    std::vector<const FiniteModule*> set;
    if (spec.braiding_modules.empty()) {
        set.push_back(&catalog.module("trivial"));
        for (const auto& m : spec.modules) set.push_back(&catalog.module(m.name));
    } else {
        for (const auto& name : spec.braiding_modules) set.push_back(&catalog.module(name));
    }
    Report report;
    for (const auto* a : set) {
        for (const auto* b : set) report.append(check_braiding_pair(context, braiding, *a, *b), a->name() + "," + b->name() + "_");
    }
    for (const auto* a : set) {
        for (const auto* b : set) {
            for (const auto* c : set) {
                report.append(check_braid_relation(braiding, *a, *b, *c), a->name() + "," + b->name() + "," + c->name() + "_");
            }
        }
    }
    const FiniteModule& adjoint = catalog.module("adjoint");
    report.append(check_braid_defect(braiding, adjoint, adjoint, adjoint), "adjoint^3_");
    for (const auto& map : catalog.maps) {
        for (const auto* other : set) {
            report.append(check_naturality(braiding, map, catalog.module(map.source), catalog.module(map.target), *other),
                          map.name + "," + other->name() + "_");
        }
    }
    for (const auto& m : catalog.modules) report.append(check_ribbon_compatibility(context, braiding, m), m.name() + "_");
    return report;
}

}  // namespace

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> suites{"lie", "cybe", "hopf", "ribbon", "dga", "tangent", "koszul", "braiding"};
    return suites;
}

bool RunReport::pass() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
}

bool RunReport::refused() const {
    return std::any_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.refusal.has_value(); });
}

Report run_suite(const AlgebraSpec& spec, const std::string& suite, int order, int max_weight) {
    const DoubleData dd = build_double(spec.g, spec.rho);
    if (suite == "lie") return lie_suite(spec, dd);
    if (suite == "cybe") return cybe_suite(spec, dd);
    if (suite == "hopf") return hopf_suite(spec, dd, order, max_weight);
    if (suite == "ribbon") return verify_ribbon(HopfDouble(dd, order, max_weight));
    if (suite == "dga") return dga_suite(spec, dd, max_weight);
    if (suite == "tangent") return tangent_suite(spec, dd, order);
    if (suite == "koszul") return koszul_suite(spec, dd, order, max_weight);
    if (suite == "braiding") return braiding_suite(spec, dd, order);
    throw std::invalid_argument("unknown suite " + suite);
}

RunReport run_verify(const AlgebraSpec& spec, const RunOptions& options) {
    RunReport out;
    out.spec = spec.name;
    out.truncation_order = options.truncation_order.value_or(spec.truncation_order);
    out.max_weight = options.max_weight.value_or(spec.max_weight);
    const std::vector<std::string> suites = options.suites.empty() ? all_suites() : options.suites;
    for (const auto& s : suites) {
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
            throw std::invalid_argument("unknown suite " + s);
        }
    }
    // Spec-level problems surface before any suite runs.
    build_catalog(spec, build_double(spec.g, spec.rho), out.truncation_order);
    out.suites.resize(suites.size());
    std::vector<std::exception_ptr> errors(suites.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < suites.size(); i = next++) {
            SuiteResult& result = out.suites[i];
            result.suite = suites[i];
            const auto start = std::chrono::steady_clock::now();
            try {
                result.report = run_suite(spec, suites[i], out.truncation_order, out.max_weight);
            } catch (const WindowRefusal& e) {
                result.refusal = e.what();
                result.minimal_max_weight = e.minimal_weight_cap();
            } catch (...) {
                errors[i] = std::current_exception();
            }
            result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    const int jobs = std::clamp(options.jobs, 1, static_cast<int>(std::max<std::size_t>(suites.size(), 1)));
    std::vector<std::thread> threads;
    for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::string serialize(const RunReport& report, bool timings) {
    json suites = json::object();
    for (const auto& s : report.suites) {
        json suite;
        suite["pass"] = s.pass();
        json checks = json::object();
        for (const auto& c : s.report.checks()) {
            std::string key = c.name;
            for (int k = 2; checks.contains(key); ++k) key = c.name + "#" + std::to_string(k);
            checks[key] = {{"pass", c.pass}, {"detail", c.detail}};
        }
        suite["checks"] = std::move(checks);
        if (s.refusal) suite["refused"] = {{"reason", *s.refusal}, {"minimal_max_weight", s.minimal_max_weight}};
        if (timings) {
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "%.3f", s.seconds);
            suite["seconds"] = buffer;
        }
        suites[s.suite] = std::move(suite);
    }
    json run;
    run["parameters"] = {{"truncation_order", report.truncation_order}, {"max_weight", report.max_weight}};
    run["suites"] = std::move(suites);
    json root;
    root["schema_version"] = kReportSchemaVersion;
    root["runs"][report.spec] = std::move(run);
    return root.dump(2) + "\n";
}

namespace {

void merge_into(json& target, const json& source, const std::string& path) {
    if (target.is_object() && source.is_object()) {
        for (const auto& [key, value] : source.items()) {
            const std::string child = path.empty() ? key : path + "." + key;
            if (target.contains(key)) {
                merge_into(target[key], value, child);
            } else {
                target[key] = value;
            }
        }
        return;
    }
    if (target != source) throw ReportConflict("conflicting values at " + (path.empty() ? std::string("<root>") : path));
}

}  // namespace

std::string merge_reports(const std::vector<std::pair<std::string, std::string>>& named_texts) {
    json merged = json::object();
    for (const auto& [name, text] : named_texts) {
        json value;
        try {
            value = json::parse(text);
        } catch (const json::parse_error& e) {
            throw SpecError(name + ": " + e.what());
        }
        if (!value.is_object() || !value.contains("schema_version")) throw SpecError(name + ": not a doublecheck report");
        if (value.at("schema_version") != kReportSchemaVersion) throw SpecError(name + ": unsupported schema version");
        merge_into(merged, value, "");
    }
    return merged.dump(2) + "\n";
}

std::string run_cohomology(const AlgebraSpec& spec, const CohomologyOptions& options) {
    const DoubleData dd = build_double(spec.g, spec.rho);
    const int order = options.truncation_order.value_or(spec.truncation_order);
    json blocks = json::object();
    auto record = [&](int degree, int weight, int dimension, std::optional<int> invariant) {
        json block{{"dimension", dimension}};
        if (invariant) block["invariants"] = *invariant;
        blocks["d=" + std::to_string(degree) + ",w=" + std::to_string(weight)] = std::move(block);
    };
    std::string key = options.target;
    if (options.target == "moment" || options.target == "ce") {
        const CommutativeDGA algebra = options.target == "moment" ? build_moment_dga(dd.g, dd.rho) : build_ce_positive(dd);
        const CohomologyReport rep = cohomology(algebra, options.weights, options.degrees, options.invariants);
        for (int w = options.weights.first; w <= options.weights.second; ++w) {
            for (int d = options.degrees.first; d <= options.degrees.second; ++d) {
                const auto it = rep.dimensions.find({d, w});
                std::optional<int> inv;
                if (options.invariants) {
                    const auto jt = rep.invariants.find({d, w});
                    inv = jt == rep.invariants.end() ? 0 : jt->second;
                }
                record(d, w, it == rep.dimensions.end() ? 0 : it->second, inv);
            }
        }
    } else if (options.target == "F-image") {
        const ModuleCatalog catalog = build_catalog(spec, dd, order);
        const KoszulContext context(dd, order);
        const DGModule image = functor_F(context, catalog.module(options.module));
        key += ":" + options.module;
        for (int q = options.weights.first; q <= options.weights.second; ++q) {
            const FiniteComplex block = dg_module_complex(image, q, options.invariants);
            for (int p = options.degrees.first; p <= options.degrees.second; ++p) {
                record(p, q, block.cohomology(p), options.invariants ? std::optional<int>(block.invariants(p)) : std::nullopt);
            }
        }
    } else {
        throw std::invalid_argument("unknown cohomology target " + options.target + " (moment, ce or F-image)");
    }
    json entry;
    entry["blocks"] = std::move(blocks);
    entry["weights"] = std::to_string(options.weights.first) + ".." + std::to_string(options.weights.second);
    entry["degrees"] = std::to_string(options.degrees.first) + ".." + std::to_string(options.degrees.second);
    if (options.target == "F-image") entry["truncation_order"] = order;
    json root;
    root["schema_version"] = kReportSchemaVersion;
    root["cohomology"][spec.name][key] = std::move(entry);
    return root.dump(2) + "\n";
}

}  // namespace dbl
