#include "dbl/spec_file.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#ifndef DOUBLECHECK_DATA_DIR
#define DOUBLECHECK_DATA_DIR "data/specs"
#endif

namespace dbl {

namespace {

using nlohmann::json;

class Parser {
  public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& where, const std::string& message) const {
        throw SpecError(source_ + ":" + (where.empty() ? "/" : where) + ": " + message);
    }

    const json& field(const json& node, const std::string& where, const std::string& key) const {
        if (!node.contains(key)) fail(where, "missing field \"" + key + "\"");
        return node.at(key);
    }

    void only_keys(const json& node, const std::string& where, std::initializer_list<const char*> keys) const {
        if (!node.is_object()) fail(where, "expected an object");
        const std::set<std::string> allowed(keys.begin(), keys.end());
        for (const auto& [key, value] : node.items()) {
            if (!allowed.count(key)) fail(where, "unknown field \"" + key + "\"");
        }
    }

    int integer(const json& node, const std::string& where) const {
        if (node.is_number_float()) fail(where, "floating-point value; use an integer");
        if (!node.is_number_integer()) fail(where, "expected an integer");
        return node.get<int>();
    }

    std::string string(const json& node, const std::string& where) const {
        if (!node.is_string()) fail(where, "expected a string");
        return node.get<std::string>();
    }

    Rational rational(const json& node, const std::string& where) const {
        if (node.is_number_float()) fail(where, "floating-point value; write exact rationals as \"p/q\"");
        if (node.is_number_integer()) return Rational(node.get<long>());
        if (!node.is_string()) fail(where, "expected an integer or a \"p/q\" string");
        try {
            return parse_rational(node.get<std::string>());
        } catch (const std::exception& e) {
            fail(where, e.what());
        }
    }

    const json& array(const json& node, const std::string& where) const {
        if (!node.is_array()) fail(where, "expected an array");
        return node;
    }

    std::vector<std::string> names(const json& node, const std::string& where) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < array(node, where).size(); ++i) {
            out.push_back(string(node[i], where + "/" + std::to_string(i)));
        }
        return out;
    }

    EntrySpec entry(const json& node, const std::string& where) const {
        if (!node.is_array() || node.size() != 3) fail(where, "expected [target, source, coefficient]");
        EntrySpec out{string(node[0], where + "/0"), string(node[1], where + "/1"), {}, where};
        const json& c = node[2];
        if (c.is_array()) {
            if (c.empty()) fail(where + "/2", "empty series");
            for (std::size_t k = 0; k < c.size(); ++k) out.coefficients.push_back(rational(c[k], where + "/2/" + std::to_string(k)));
        } else {
            out.coefficients.push_back(rational(c, where + "/2"));
        }
        return out;
    }

    std::vector<EntrySpec> entries(const json& node, const std::string& where) const {
        std::vector<EntrySpec> out;
        for (std::size_t i = 0; i < array(node, where).size(); ++i) out.push_back(entry(node[i], where + "/" + std::to_string(i)));
        return out;
    }

    AlgebraSpec parse(const json& root) const {
        only_keys(root, "", {"schema_version", "name", "lie_algebra", "representation", "parameters", "modules",
                             "module_maps", "exact_sequences", "braiding_modules", "fiber_maps", "faults"});
        AlgebraSpec spec;
        spec.source = source_;
        const int version = integer(field(root, "", "schema_version"), "/schema_version");
        if (version != kSpecSchemaVersion) fail("/schema_version", "unsupported schema version " + std::to_string(version));
        spec.name = string(field(root, "", "name"), "/name");

        const json& lie = field(root, "", "lie_algebra");
        only_keys(lie, "/lie_algebra", {"basis", "brackets"});
        const auto basis = names(field(lie, "/lie_algebra", "basis"), "/lie_algebra/basis");
        std::vector<std::tuple<std::string, std::string, std::string, Rational>> brackets;
        const json& raw = lie.contains("brackets") ? lie.at("brackets") : json::array();
        for (std::size_t i = 0; i < array(raw, "/lie_algebra/brackets").size(); ++i) {
            const std::string where = "/lie_algebra/brackets/" + std::to_string(i);
            const json& b = raw[i];
            if (!b.is_array() || b.size() != 4) fail(where, "expected [a, b, c, coefficient]");
            brackets.emplace_back(string(b[0], where + "/0"), string(b[1], where + "/1"), string(b[2], where + "/2"),
                                  rational(b[3], where + "/3"));
        }
        try {
            spec.g = make_lie_algebra(basis, brackets);
        } catch (const std::exception& e) {
            fail("/lie_algebra", e.what());
        }

        const json& rep = field(root, "", "representation");
        only_keys(rep, "/representation", {"dimension", "matrices"});
        spec.rho.dimension = integer(field(rep, "/representation", "dimension"), "/representation/dimension");
        if (spec.rho.dimension < 0) fail("/representation/dimension", "negative dimension");
        const json& matrices = rep.contains("matrices") ? rep.at("matrices") : json::object();
        if (!matrices.is_object()) fail("/representation/matrices", "expected an object keyed by basis names");
        for (const auto& [key, value] : matrices.items()) {
            if (std::find(basis.begin(), basis.end(), key) == basis.end()) {
                fail("/representation/matrices/" + key, "not a basis element of the Lie algebra");
            }
        }
        for (const auto& x : basis) {
            const std::string where = "/representation/matrices/" + x;
            if (!matrices.contains(x)) fail("/representation/matrices", "missing matrix for " + x);
            const json& m = array(matrices.at(x), where);
            if (static_cast<int>(m.size()) != spec.rho.dimension) fail(where, "expected " + std::to_string(spec.rho.dimension) + " rows");
            std::vector<std::vector<Rational>> rows;
            for (std::size_t i = 0; i < m.size(); ++i) {
                const std::string rw = where + "/" + std::to_string(i);
                const json& row = array(m[i], rw);
                if (static_cast<int>(row.size()) != spec.rho.dimension) fail(rw, "expected " + std::to_string(spec.rho.dimension) + " entries");
                std::vector<Rational> values;
                for (std::size_t j = 0; j < row.size(); ++j) values.push_back(rational(row[j], rw + "/" + std::to_string(j)));
                rows.push_back(std::move(values));
            }
            spec.rho.matrices.push_back(std::move(rows));
        }
        try {
            build_h(spec.g, spec.rho);
        } catch (const std::exception& e) {
            fail("/representation", e.what());
        }

        if (root.contains("parameters")) {
            const json& p = root.at("parameters");
            only_keys(p, "/parameters", {"truncation_order", "max_weight"});
            if (p.contains("truncation_order")) spec.truncation_order = integer(p.at("truncation_order"), "/parameters/truncation_order");
            if (p.contains("max_weight")) spec.max_weight = integer(p.at("max_weight"), "/parameters/max_weight");
            if (spec.truncation_order < 1) fail("/parameters/truncation_order", "must be at least 1");
            if (spec.max_weight < 0) fail("/parameters/max_weight", "must be nonnegative");
        }

        if (root.contains("modules")) {
            const json& list = array(root.at("modules"), "/modules");
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string where = "/modules/" + std::to_string(i);
                const json& m = list[i];
                only_keys(m, where, {"name", "basis", "actions", "differential"});
                ModuleSpec module;
                module.location = source_ + ":" + where;
                module.name = string(field(m, where, "name"), where + "/name");
                const json& b = array(field(m, where, "basis"), where + "/basis");
                for (std::size_t k = 0; k < b.size(); ++k) {
                    const std::string bw = where + "/basis/" + std::to_string(k);
                    only_keys(b[k], bw, {"name", "degree", "weight"});
                    module.basis.push_back({string(field(b[k], bw, "name"), bw + "/name"), integer(field(b[k], bw, "degree"), bw + "/degree"),
                                            integer(field(b[k], bw, "weight"), bw + "/weight")});
                }
                if (m.contains("actions")) {
                    const json& a = m.at("actions");
                    if (!a.is_object()) fail(where + "/actions", "expected an object keyed by generators of the double");
                    for (const auto& [key, value] : a.items()) module.actions.emplace_back(key, entries(value, where + "/actions/" + key));
                }
                if (m.contains("differential")) module.differential = entries(m.at("differential"), where + "/differential");
                spec.modules.push_back(std::move(module));
            }
        }

        if (root.contains("module_maps")) {
            const json& list = array(root.at("module_maps"), "/module_maps");
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string where = "/module_maps/" + std::to_string(i);
                only_keys(list[i], where, {"name", "source", "target", "entries"});
                spec.module_maps.push_back({string(field(list[i], where, "name"), where + "/name"),
                                            string(field(list[i], where, "source"), where + "/source"),
                                            string(field(list[i], where, "target"), where + "/target"),
                                            entries(field(list[i], where, "entries"), where + "/entries"), source_ + ":" + where});
            }
        }

        if (root.contains("exact_sequences")) {
            const json& list = array(root.at("exact_sequences"), "/exact_sequences");
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string where = "/exact_sequences/" + std::to_string(i);
                only_keys(list[i], where, {"inclusion", "projection"});
                spec.exact_sequences.push_back({string(field(list[i], where, "inclusion"), where + "/inclusion"),
                                                string(field(list[i], where, "projection"), where + "/projection"),
                                                source_ + ":" + where});
            }
        }

        if (root.contains("braiding_modules")) spec.braiding_modules = names(root.at("braiding_modules"), "/braiding_modules");

        if (root.contains("fiber_maps")) {
            const json& list = array(root.at("fiber_maps"), "/fiber_maps");
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string where = "/fiber_maps/" + std::to_string(i);
                only_keys(list[i], where, {"name", "variables", "components"});
                NamedFiberMap f;
                f.name = string(field(list[i], where, "name"), where + "/name");
                f.map.source_names = names(field(list[i], where, "variables"), where + "/variables");
                f.map.source_dim = static_cast<int>(f.map.source_names.size());
                const json& comps = array(field(list[i], where, "components"), where + "/components");
                for (std::size_t k = 0; k < comps.size(); ++k) {
                    const std::string cw = where + "/components/" + std::to_string(k);
                    Polynomial p;
                    for (std::size_t t = 0; t < array(comps[k], cw).size(); ++t) {
                        const std::string tw = cw + "/" + std::to_string(t);
                        const json& term = comps[k][t];
                        if (!term.is_array() || term.size() != 2) fail(tw, "expected [variables, coefficient]");
                        Monomial m;
                        for (const auto& v : names(term[0], tw + "/0")) {
                            const auto it = std::find(f.map.source_names.begin(), f.map.source_names.end(), v);
                            if (it == f.map.source_names.end()) fail(tw + "/0", "unknown variable " + v);
                            m.push_back(static_cast<int>(it - f.map.source_names.begin()));
                        }
                        std::sort(m.begin(), m.end());
                        p[m] += rational(term[1], tw + "/1");
                    }
                    f.map.components.push_back(std::move(p));
                }
                spec.fiber_maps.push_back(std::move(f));
            }
        }

        if (root.contains("faults")) {
            static const std::map<std::string, std::string> kinds{
                {"flip_structure_constant", "lie"}, {"drop_r_term", "cybe"}, {"flip_coproduct_sign", "hopf"}};
            const json& list = array(root.at("faults"), "/faults");
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string where = "/faults/" + std::to_string(i);
                only_keys(list[i], where, {"kind", "suite", "target"});
                FaultSpec fault;
                fault.location = source_ + ":" + where;
                fault.kind = string(field(list[i], where, "kind"), where + "/kind");
                const auto it = kinds.find(fault.kind);
                if (it == kinds.end()) fail(where + "/kind", "unknown fault kind " + fault.kind);
                fault.suite = list[i].contains("suite") ? string(list[i].at("suite"), where + "/suite") : it->second;
                if (fault.suite != it->second) fail(where + "/suite", fault.kind + " applies to the " + it->second + " suite");
                fault.target = names(field(list[i], where, "target"), where + "/target");
                spec.faults.push_back(std::move(fault));
            }
        }
        return spec;
    }

  private:
    std::string source_;
};

std::string location_of(const std::string& text, std::size_t byte) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return std::to_string(line) + ":" + std::to_string(column);
}

SeriesMatrix matrix_of(const std::vector<EntrySpec>& entries, const GradedBasis& target, const GradedBasis& source, int order) {
    SeriesMatrix out(target.size(), source.size(), order);
    for (const auto& e : entries) {
        const int row = target.find(e.target);
        const int col = source.find(e.source);
        if (row < 0) throw SpecError(e.location + ": unknown basis element " + e.target);
        if (col < 0) throw SpecError(e.location + ": unknown basis element " + e.source);
        TruncatedSeries value(order);
        for (std::size_t k = 0; k < e.coefficients.size() && static_cast<int>(k) < order; ++k) value.set(static_cast<int>(k), e.coefficients[k]);
        out.add(row, col, value);
    }
    return out;
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text, const std::string& source) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string message = e.what();
        if (const auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
        throw SpecError(source + ":" + location_of(text, e.byte) + ": " + message);
    }
    return Parser(source).parse(root);
}

AlgebraSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SpecError(path.string() + ": cannot read file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str(), path.string());
}

std::filesystem::path default_example_dir() {
    if (const char* dir = std::getenv("DOUBLECHECK_EXAMPLE_DIR"); dir && *dir) return dir;
    return DOUBLECHECK_DATA_DIR;
}

std::filesystem::path resolve_spec(const std::string& argument) {
    const std::filesystem::path given(argument);
    if (std::filesystem::is_regular_file(given)) return given;
    const std::filesystem::path dir = default_example_dir();
    const std::string base = given.filename().string();
    for (const auto& candidate : {dir / base, dir / (base + ".json")}) {
        if (std::filesystem::is_regular_file(candidate)) return candidate;
    }
    throw SpecError(argument + ": no such spec file (also looked for " + base + " in " + dir.string() + ")");
}

const FiniteModule& ModuleCatalog::module(const std::string& name) const {
    for (const auto& m : modules) {
        if (m.name() == name) return m;
    }
    throw SpecError("unknown module " + name);
}

const ModuleMap& ModuleCatalog::map(const std::string& name) const {
    for (const auto& m : maps) {
        if (m.name == name) return m;
    }
    throw SpecError("unknown module map " + name);
}

ModuleCatalog build_catalog(const AlgebraSpec& spec, const DoubleData& dd, int order) {
    ModuleCatalog catalog;
    catalog.modules.push_back(trivial_module(dd.algebra, order));
    catalog.modules.push_back(adjoint_module(dd.algebra, order));
    for (const auto& m : spec.modules) {
        for (const auto& existing : catalog.modules) {
            if (existing.name() == m.name) throw SpecError(m.location + ": duplicate module name " + m.name);
        }
        GradedBasis basis;
        try {
            basis = GradedBasis(m.basis);
        } catch (const std::exception& e) {
            throw SpecError(m.location + ": " + e.what());
        }
        FiniteModule module(m.name, dd.algebra, basis, order);
        std::set<int> seen;
        for (const auto& [generator, entries] : m.actions) {
            const int g = dd.algebra.basis().find(generator);
            if (g < 0) throw SpecError(m.location + "/actions/" + generator + ": not a generator of the double");
            if (!seen.insert(g).second) throw SpecError(m.location + "/actions/" + generator + ": duplicate action");
            module.set_action(g, matrix_of(entries, basis, basis, order));
        }
        module.set_differential(matrix_of(m.differential, basis, basis, order));
        try {
            validate(module);
        } catch (const InvalidModule& e) {
            throw SpecError(m.location + ": " + e.what());
        }
        catalog.modules.push_back(std::move(module));
    }
    for (const auto& m : spec.module_maps) {
        const auto find = [&](const std::string& name) -> const FiniteModule& {
            for (const auto& module : catalog.modules) {
                if (module.name() == name) return module;
            }
            throw SpecError(m.location + ": unknown module " + name);
        };
        const FiniteModule& source = find(m.source);
        const FiniteModule& target = find(m.target);
        catalog.maps.push_back({m.name, m.source, m.target, matrix_of(m.entries, target.basis(), source.basis(), order)});
    }
    const auto require_module = [&](const std::string& name, const std::string& where) {
        for (const auto& module : catalog.modules) {
            if (module.name() == name) return;
        }
        throw SpecError(where + ": unknown module " + name);
    };
    for (const auto& name : spec.braiding_modules) require_module(name, spec.source + ":/braiding_modules");
    for (const auto& s : spec.exact_sequences) {
        const auto has_map = [&](const std::string& name) {
            return std::any_of(catalog.maps.begin(), catalog.maps.end(), [&](const ModuleMap& m) { return m.name == name; });
        };
        if (!has_map(s.inclusion)) throw SpecError(s.location + ": unknown module map " + s.inclusion);
        if (!has_map(s.projection)) throw SpecError(s.location + ": unknown module map " + s.projection);
        if (catalog.map(s.inclusion).target != catalog.map(s.projection).source) {
            throw SpecError(s.location + ": the inclusion must land in the source of the projection");
        }
    }
    return catalog;
}

}  // namespace dbl
