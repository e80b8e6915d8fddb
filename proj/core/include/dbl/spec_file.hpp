#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dbl/dga.hpp"
#include "dbl/graded.hpp"
#include "dbl/lie.hpp"
#include "dbl/module.hpp"

namespace dbl {

inline constexpr int kSpecSchemaVersion = 1;

// Parse or validation failure; the message starts with "file:location:".
class SpecError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Matrix entry: image of basis vector `source` has `coefficients[k] hbar^k` on `target`.
struct EntrySpec {
    std::string target;
    std::string source;
    std::vector<Rational> coefficients;
    std::string location;
};

struct ModuleSpec {
    std::string name;
    std::vector<BasisElement> basis;
    // Keyed by a basis name of the double.
    std::vector<std::pair<std::string, std::vector<EntrySpec>>> actions;
    std::vector<EntrySpec> differential;
    std::string location;
};

struct ModuleMapSpec {
    std::string name;
    std::string source;
    std::string target;
    std::vector<EntrySpec> entries;
    std::string location;
};

struct ExactSequenceSpec {
    std::string inclusion;
    std::string projection;
    std::string location;
};

struct FaultSpec {
    std::string kind;
    std::string suite;
    // Basis names of the double the fault refers to.
    std::vector<std::string> target;
    std::string location;
};

struct NamedFiberMap {
    std::string name;
    FiberMap map;
};

struct AlgebraSpec {
    std::string source;
    std::string name;
    LieAlgebraData g;
    RepresentationData rho;
    std::vector<ModuleSpec> modules;
    std::vector<ModuleMapSpec> module_maps;
    std::vector<ExactSequenceSpec> exact_sequences;
    std::vector<std::string> braiding_modules;
    std::vector<NamedFiberMap> fiber_maps;
    std::vector<FaultSpec> faults;
    int truncation_order = 4;
    int max_weight = 6;
};

AlgebraSpec parse_spec(const std::string& text, const std::string& source = "<input>");
AlgebraSpec load_spec(const std::filesystem::path& path);

// An existing path as given; otherwise the basename (with or without .json) in
// $DOUBLECHECK_EXAMPLE_DIR, falling back to the compiled-in fixture directory.
std::filesystem::path resolve_spec(const std::string& argument);
std::filesystem::path default_example_dir();

// Modules and maps of a spec built over its double at a truncation order.
struct ModuleCatalog {
    std::vector<FiniteModule> modules;
    std::vector<ModuleMap> maps;

    const FiniteModule& module(const std::string& name) const;
    const ModuleMap& map(const std::string& name) const;
};

// Throws SpecError naming the offending declaration when a module violates its relations.
ModuleCatalog build_catalog(const AlgebraSpec& spec, const DoubleData& dd, int order);

}  // namespace dbl
