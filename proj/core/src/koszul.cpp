#include "dbl/koszul.hpp"

#include <algorithm>
#include <set>

#include "dbl/hopf.hpp"
#include "dbl/linalg.hpp"

namespace dbl {

KoszulContext::KoszulContext(const DoubleData& dd, int order)
    : dd_(dd),
      positive_(positive_subalgebra(dd)),
      ce_(std::make_shared<CommutativeDGA>(build_ce_positive(dd, order))),
      order_(order),
      uea_(positive_.algebra, 1) {}

const DualActionTable& KoszulContext::dual_table(int max_weight) const {
    if (table_ && table_->max_weight >= max_weight) return *table_;
    DualActionTable table;
    table.max_weight = max_weight;
    const auto& L = positive_.algebra;
    std::vector<int> generators(L.dim());
    for (int e = 0; e < L.dim(); ++e) generators[e] = e;
    for (auto& u : enumerate_monomials(L.basis(), generators, std::max(max_weight, 0))) {
        const int w = uea_.weight(u);
        if (w <= max_weight) table.by_weight[w].push_back(std::move(u));
    }
    for (const auto& [w, list] : table.by_weight) {
        for (const auto& u_prime : list) {
            for (int e = 0; e < L.dim(); ++e) {
                if (w + L.basis().weight(e) > max_weight) continue;
                for (const auto& [u, c] : uea_.monomial_product(u_prime, {e})) table.action[u].emplace_back(e, u_prime, c);
            }
        }
    }
    table_ = std::move(table);
    return *table_;
}

DGModule functor_F(const KoszulContext& context, const FiniteModule& module) {
    const auto& A = *context.ce();
    const auto& positive = context.positive();
    const int n = module.dim();
    DGModule out;
    out.algebra = context.ce();
    for (const auto& b : module.basis().elements()) out.generators.add({b.name, b.degree, -b.weight});
    const int hbar = context.hbar();
    auto column = [&](const SeriesMatrix& m, int j, const Polynomial& factor, ModuleVector& target) {
        for (const auto& [key, s] : m.entries()) {
            if (key.second != j) continue;
            dbl::accumulate(target[key.first], A.multiply(factor, series_to_polynomial(s, hbar)));
        }
    };
    const Polynomial one{{Monomial{}, Rational(1)}};
    for (int j = 0; j < n; ++j) {
        ModuleVector image(n);
        column(module.differential(), j, one, image);
        for (int e = 0; e < positive.algebra.dim(); ++e) column(module.action(positive.embedding[e]), j, A.generator(e), image);
        out.differential.push_back(std::move(image));
    }
    out.actions.resize(context.data().rank);
    for (int a = 0; a < context.data().rank; ++a) {
        for (int j = 0; j < n; ++j) {
            ModuleVector image(n);
            column(module.action(a), j, one, image);
            out.actions[a].push_back(std::move(image));
        }
    }
    return out;
}

int minimal_weight_cap(const DGModule& module, int min_q) {
    int cap = 0;
    for (int j = 0; j < module.generators.size(); ++j) cap = std::max(cap, -min_q - module.generators.weight(j));
    return cap;
}

namespace {

using DualKey = std::tuple<Monomial, int, Monomial>;  // (u, generator, algebra monomial)
using DualVector = std::map<DualKey, Rational>;

void add_term(DualVector& v, DualKey key, const Rational& c) {
    auto& slot = v[key];
    slot += c;
    if (sgn(slot) == 0) v.erase(key);
}

}  // namespace

KoszulDualBlock koszul_dual_block(const KoszulContext& context, const DGModule& module, int q, bool check_square) {
    const auto& A = *module.algebra;
    const auto& G = module.generators;
    const Uea& U = context.positive_uea();
    const int cap = minimal_weight_cap(module, q);
    const DualActionTable& table = context.dual_table(cap);

    std::map<int, std::vector<DualKey>> by_degree;
    std::map<DualKey, std::pair<int, int>> position;
    std::map<int, std::vector<Monomial>> algebra_monomials;
    for (int j = 0; j < G.size(); ++j) {
        const int total = -q - G.weight(j);
        for (int wu = 0; wu <= total; ++wu) {
            const auto us = table.by_weight.find(wu);
            if (us == table.by_weight.end()) continue;
            const int wm = total - wu;
            if (!algebra_monomials.count(wm)) algebra_monomials[wm] = A.monomials(wm);
            for (const auto& u : us->second) {
                for (const auto& m : algebra_monomials[wm]) {
                    const int p = A.degree(m) + G.degree(j) + A.weight(m) + G.weight(j);
                    DualKey key{u, j, m};
                    position[key] = {p, static_cast<int>(by_degree[p].size())};
                    by_degree[p].push_back(std::move(key));
                }
            }
        }
    }

    auto image_of = [&](const DualKey& key) {
        const auto& [u, j, m] = key;
        DualVector out;
        const int u_parity = U.parity(u);
        ModuleVector v(G.size());
        v[j] = {{m, Rational(1)}};
        const ModuleVector dv = apply_differential(module, v);
        for (int i = 0; i < G.size(); ++i) {
            for (const auto& [mono, c] : dv[i]) add_term(out, {u, i, mono}, c * sign_of_parity(u_parity));
        }
        if (const auto it = table.action.find(u); it != table.action.end()) {
            for (const auto& [e, u_prime, c] : it->second) {
                const auto [sign, product] = A.multiply(Monomial{e}, m);
                if (sign == 0) continue;
                const int exponent = A.generators().parity(e) * u_parity;
                add_term(out, {u_prime, j, product}, c * sign * sign_of_parity(exponent));
            }
        }
        return out;
    };

    KoszulDualBlock block;
    for (const auto& [p, list] : by_degree) {
        block.complex.set_dimension(p, static_cast<int>(list.size()));
        std::vector<SparseRow> rows;
        for (const auto& key : list) {
            SparseRow row;
            for (const auto& [target, c] : image_of(key)) {
                const auto it = position.find(target);
                if (it == position.end() || it->second.first != p + 1) {
                    throw std::logic_error("Koszul dual differential leaves its block");
                }
                row.emplace_back(it->second.second, c);
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            if (check_square && block.squares_to_zero) {
                DualVector twice;
                for (const auto& [target, c] : image_of(key)) {
                    for (const auto& [t2, c2] : image_of(target)) add_term(twice, t2, c * c2);
                }
                if (!twice.empty()) block.squares_to_zero = false;
            }
            rows.push_back(std::move(row));
        }
        if (by_degree.count(p + 1)) block.complex.set_differential(p, std::move(rows));
    }
    return block;
}

BigradedDims koszul_dual_cohomology(const KoszulContext& context, const DGModule& module, std::pair<int, int> q_range,
                                    int weight_cap) {
    const int needed = minimal_weight_cap(module, q_range.first);
    if (weight_cap < needed) {
        throw WindowRefusal("weight cap " + std::to_string(weight_cap) + " is too small for weights >= " +
                                std::to_string(q_range.first) + "; minimal cap is " + std::to_string(needed),
                            needed);
    }
    BigradedDims out;
    for (int q = q_range.first; q <= q_range.second; ++q) {
        const KoszulDualBlock block = koszul_dual_block(context, module, q);
        for (const auto& [p, n] : block.complex.dimensions()) {
            if (const int h = block.complex.cohomology(p); h != 0) out[{p, q}] = h;
        }
    }
    return out;
}

BigradedDims module_cohomology(const FiniteModule& module, std::pair<int, int> weight_range) {
    BigradedDims out;
    for (int j = weight_range.first; j <= weight_range.second; ++j) {
        const FiniteComplex block = module_complex(module, j);
        for (const auto& [i, n] : block.dimensions()) {
            if (const int h = block.cohomology(i); h != 0) out[{i, j}] = h;
        }
    }
    return out;
}

BigradedDims dg_module_cohomology(const DGModule& module, std::pair<int, int> q_range) {
    BigradedDims out;
    for (int q = q_range.first; q <= q_range.second; ++q) {
        const FiniteComplex block = dg_module_complex(module, q);
        for (const auto& [p, n] : block.dimensions()) {
            if (const int h = block.cohomology(p); h != 0) out[{p, q}] = h;
        }
    }
    return out;
}

namespace {

std::string describe_dims(const BigradedDims& dims) {
    if (dims.empty()) return "0";
    std::string out;
    for (const auto& [key, n] : dims) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "):" + std::to_string(n);
    }
    return out;
}

}  // namespace

Report check_roundtrip(const KoszulContext& context, const FiniteModule& module, int max_abs_weight, int weight_cap) {
    Report report;
    const DGModule image = functor_F(context, module);
    report.append(check_dg_module(image, "F_"));
    const int needed = minimal_weight_cap(image, -max_abs_weight);
    if (weight_cap < needed) {
        throw WindowRefusal("the roundtrip of " + module.name() + " at |weight| <= " + std::to_string(max_abs_weight) +
                                " needs a weight cap of " + std::to_string(needed),
                            needed);
    }
    BigradedDims dual;
    bool square = true;
    for (int q = -max_abs_weight; q <= max_abs_weight; ++q) {
        const KoszulDualBlock block = koszul_dual_block(context, image, q, true);
        square = square && block.squares_to_zero;
        for (const auto& [p, n] : block.complex.dimensions()) {
            if (const int h = block.complex.cohomology(p); h != 0) dual[{p, q}] = h;
        }
    }
    report.add("G_d_squared", square, square ? "0" : "nonzero");
    const BigradedDims original = module_cohomology(module, {-max_abs_weight, max_abs_weight});
    std::string mismatch;
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, n] : dual) keys.insert(k);
    for (const auto& [k, n] : original) keys.insert(k);
    for (const auto& k : keys) {
        const int a = dual.count(k) ? dual.at(k) : 0;
        const int b = original.count(k) ? original.at(k) : 0;
        if (a != b && mismatch.empty()) {
            mismatch = "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): H(GF M) = " + std::to_string(a) +
                       ", H(M) = " + std::to_string(b);
        }
    }
    report.add("roundtrip_dimensions", mismatch.empty(), mismatch.empty() ? describe_dims(original) : mismatch);
    return report;
}

Report check_monoidality(const KoszulContext& context, const FiniteModule& left, const FiniteModule& right) {
    Report report;
    const DGModule lhs = functor_F(context, tensor_product(left, right));
    const DGModule rhs = tensor_product(functor_F(context, left), functor_F(context, right));
    const bool same_generators = lhs.generators == rhs.generators;
    report.add("monoidal_generators", same_generators, std::to_string(lhs.generators.size()) + " generators");
    std::string residual;
    if (same_generators) {
        for (int j = 0; j < lhs.generators.size() && residual.empty(); ++j) {
            ModuleVector diff = lhs.differential[j];
            for (std::size_t i = 0; i < diff.size(); ++i) dbl::accumulate(diff[i], rhs.differential[j][i], -1);
            if (!is_zero(diff)) residual = lhs.generators[j].name + ": " + to_string(diff, lhs);
        }
    }
    report.add("monoidal_chain_map_residual", same_generators && residual.empty(), residual.empty() ? "0" : residual);
    return report;
}

namespace {

// D_target F(f) - F(f) D_source on every generator of the source.
std::string chain_map_residual(const DGModule& source, const DGModule& target, const SeriesMatrix& matrix, int hbar) {
    for (int j = 0; j < source.generators.size(); ++j) {
        const ModuleVector g = module_generator(source, j);
        ModuleVector diff = apply_differential(target, apply_matrix(target, matrix, g, hbar));
        const ModuleVector other = apply_matrix(target, matrix, apply_differential(source, g), hbar);
        for (std::size_t i = 0; i < diff.size(); ++i) dbl::accumulate(diff[i], other[i], -1);
        if (!is_zero(diff)) return source.generators[j].name + ": " + to_string(diff, target);
    }
    return {};
}

int rank_mod_hbar(const SeriesMatrix& matrix) {
    std::map<int, SparseRow> columns;
    for (const auto& [key, s] : matrix.entries()) {
        if (sgn(s[0]) != 0) columns[key.second].emplace_back(key.first, s[0]);
    }
    std::vector<SparseRow> rows;
    for (auto& [c, row] : columns) rows.push_back(std::move(row));
    return rank_of(rows);
}

}  // namespace

Report check_exactness(const KoszulContext& context, const ModuleMap& inclusion, const ModuleMap& projection,
                       const FiniteModule& sub, const FiniteModule& middle, const FiniteModule& quotient) {
    Report report;
    report.append(check_module_map(inclusion, sub, middle));
    report.append(check_module_map(projection, middle, quotient));
    if (!report.pass()) return report;
    const DGModule fs = functor_F(context, sub);
    const DGModule fm = functor_F(context, middle);
    const DGModule fq = functor_F(context, quotient);
    const std::string ri = chain_map_residual(fs, fm, inclusion.matrix, context.hbar());
    const std::string rp = chain_map_residual(fm, fq, projection.matrix, context.hbar());
    report.add("F_" + inclusion.name + "_chain_map", ri.empty(), ri.empty() ? "0" : ri);
    report.add("F_" + projection.name + "_chain_map", rp.empty(), rp.empty() ? "0" : rp);
    const SeriesMatrix composite = projection.matrix * inclusion.matrix;
    report.add("composite_zero", composite.is_zero(), composite.describe());
    const int ri_rank = rank_mod_hbar(inclusion.matrix);
    const int rp_rank = rank_mod_hbar(projection.matrix);
    const bool split = ri_rank == sub.dim() && rp_rank == quotient.dim();
    report.add("split_mod_hbar", split, "ranks " + std::to_string(ri_rank) + "," + std::to_string(rp_rank));
    const bool counts = fm.generators.size() == fs.generators.size() + fq.generators.size();
    report.add("generator_counts_add", counts,
               std::to_string(fs.generators.size()) + "+" + std::to_string(fq.generators.size()) + "=" +
                   std::to_string(fm.generators.size()));
    return report;
}

BraidingData::BraidingData(const DoubleData& dd, int order)
    : order_(order),
      uea_(dd.algebra, order),
      omega_(dbl::omega(uea_, classical_r(dd, order))),
      casimir_(casimir(uea_, dd)) {}

SeriesMatrix BraidingData::omega(const FiniteModule& left, const FiniteModule& right) const {
    return act(left, right, omega_);
}

SeriesMatrix BraidingData::omega_from_casimir(const FiniteModule& left, const FiniteModule& right) const {
    SeriesMatrix out = act(tensor_product(left, right), casimir_);
    out -= kronecker(act(left, casimir_), SeriesMatrix::identity(right.dim(), order_), 0, left.parities());
    out -= kronecker(SeriesMatrix::identity(left.dim(), order_), act(right, casimir_), 0, left.parities());
    out *= TruncatedSeries(order_, Rational(1, 2));
    return out;
}

SeriesMatrix BraidingData::braiding(const FiniteModule& left, const FiniteModule& right) const {
    return swap_matrix(left.parities(), right.parities(), order_) * exp_hbar(omega(left, right));
}

SeriesMatrix BraidingData::ribbon(const FiniteModule& module) const { return exp_hbar(act(module, casimir_), -1); }

namespace {

std::vector<int> tensor_parities(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int x : a) {
        for (int y : b) out.push_back((x + y) % 2);
    }
    return out;
}

SeriesMatrix identity_of(const FiniteModule& m) { return SeriesMatrix::identity(m.dim(), m.order()); }

// Lowest hbar order at which a matrix is nonzero, with a sample.
std::string lowest_order(const SeriesMatrix& m) {
    for (int k = 0; k < m.order(); ++k) {
        const SeriesMatrix part = m.hbar_component(k);
        if (!part.is_zero()) return "hbar^" + std::to_string(k) + ": " + part.describe(2);
    }
    return "0";
}

}  // namespace

Report check_braiding_pair(const KoszulContext& context, const BraidingData& braiding, const FiniteModule& left,
                           const FiniteModule& right) {
    Report report;
    const SeriesMatrix omega = braiding.omega(left, right);
    const SeriesMatrix from_casimir = braiding.omega_from_casimir(left, right);
    report.add("omega_action_matches_casimir", omega == from_casimir, (omega - from_casimir).describe());
    const SeriesMatrix c = braiding.braiding(left, right);
    const FiniteModule lr = tensor_product(left, right);
    const FiniteModule rl = tensor_product(right, left);
    std::string equivariance;
    for (int e = 0; e < lr.algebra().dim() && equivariance.empty(); ++e) {
        const SeriesMatrix residual = c * lr.action(e) - rl.action(e) * c;
        if (!residual.is_zero()) equivariance = lr.algebra().basis()[e].name + ": " + lowest_order(residual);
    }
    report.add("braiding_equivariant", equivariance.empty(), equivariance.empty() ? "0" : equivariance);
    const DGModule source = tensor_product(functor_F(context, left), functor_F(context, right));
    const DGModule target = tensor_product(functor_F(context, right), functor_F(context, left));
    const std::string chain = chain_map_residual(source, target, c, context.hbar());
    report.add("braiding_chain_map", chain.empty(), chain.empty() ? "0" : chain);
    return report;
}

namespace {

struct BraidSides {
    SeriesMatrix lhs;
    SeriesMatrix rhs;
};

BraidSides braid_sides(const BraidingData& B, const FiniteModule& m1, const FiniteModule& m2, const FiniteModule& m3) {
    const auto p1 = m1.parities();
    const auto p2 = m2.parities();
    const auto p3 = m3.parities();
    // M1 M2 M3 -> M2 M1 M3 -> M2 M3 M1 -> M3 M2 M1
    const SeriesMatrix lhs = kronecker(B.braiding(m2, m3), identity_of(m1), 0, tensor_parities(p2, p3)) *
                             kronecker(identity_of(m2), B.braiding(m1, m3), 0, p2) *
                             kronecker(B.braiding(m1, m2), identity_of(m3), 0, tensor_parities(p1, p2));
    // M1 M2 M3 -> M1 M3 M2 -> M3 M1 M2 -> M3 M2 M1
    const SeriesMatrix rhs = kronecker(identity_of(m3), B.braiding(m1, m2), 0, p3) *
                             kronecker(B.braiding(m1, m3), identity_of(m2), 0, tensor_parities(p1, p3)) *
                             kronecker(identity_of(m1), B.braiding(m2, m3), 0, p1);
    return {lhs, rhs};
}

}  // namespace

Report check_braid_relation(const BraidingData& braiding, const FiniteModule& first, const FiniteModule& second,
                            const FiniteModule& third) {
    Report report;
    const BraidSides sides = braid_sides(braiding, first, second, third);
    const SeriesMatrix residual = sides.lhs - sides.rhs;
    report.add("braid_relation", residual.is_zero(), lowest_order(residual));
    return report;
}

Report check_braid_defect(const BraidingData& braiding, const FiniteModule& first, const FiniteModule& second,
                          const FiniteModule& third) {
    Report report;
    const BraidSides sides = braid_sides(braiding, first, second, third);
    const SeriesMatrix residual = sides.lhs - sides.rhs;
    const bool low = residual.hbar_component(0).is_zero() && residual.hbar_component(1).is_zero();
    report.add("braid_defect_starts_at_hbar2", low, lowest_order(residual));
    if (braiding.order() < 3) return report;
    // Omega_13 and Omega_23 on M1 M2 M3 from the action on the outer and inner pairs.
    const auto p1 = first.parities();
    const auto p2 = second.parities();
    const FiniteModule m13 = tensor_product(first, third);
    const SeriesMatrix omega13_outer = braiding.omega(first, third);
    const SeriesMatrix omega23_inner = braiding.omega(second, third);
    // Omega_23 = 1 (x) Omega on M2 M3; Omega_13 = (1 (x) tau)(Omega (x) 1)(1 (x) tau) on M1 M2 M3.
    const SeriesMatrix omega23 = kronecker(identity_of(first), omega23_inner, 0, p1);
    const SeriesMatrix swap23 = kronecker(identity_of(first), swap_matrix(p2, third.parities(), braiding.order()), 0, p1);
    const SeriesMatrix swap32 = kronecker(identity_of(first), swap_matrix(third.parities(), p2, braiding.order()), 0, p1);
    const SeriesMatrix omega13 =
        swap32 * kronecker(omega13_outer, identity_of(second), 0, m13.parities()) * swap23;
    const SeriesMatrix commutator = omega23 * omega13 - omega13 * omega23;
    const SeriesMatrix predicted = sides.lhs.hbar_component(0) * commutator;
    const SeriesMatrix observed = residual.hbar_component(2);
    report.add("braid_defect_is_associator_term", observed == predicted.hbar_component(0), lowest_order(observed - predicted));
    return report;
}

Report check_naturality(const BraidingData& braiding, const ModuleMap& map, const FiniteModule& source,
                        const FiniteModule& target, const FiniteModule& other) {
    Report report;
    const SeriesMatrix lhs = braiding.braiding(target, other) * kronecker(map.matrix, identity_of(other), 0, source.parities());
    const SeriesMatrix rhs = kronecker(identity_of(other), map.matrix, 0, other.parities()) * braiding.braiding(source, other);
    report.add("braiding_natural", lhs == rhs, lowest_order(lhs - rhs));
    return report;
}

Report check_ribbon_compatibility(const KoszulContext& context, const BraidingData& braiding, const FiniteModule& module) {
    Report report;
    const SeriesMatrix theta = braiding.ribbon(module);
    std::string central;
    for (int e = 0; e < module.algebra().dim() && central.empty(); ++e) {
        const SeriesMatrix residual = theta * module.action(e) - module.action(e) * theta;
        if (!residual.is_zero()) central = module.algebra().basis()[e].name + ": " + lowest_order(residual);
    }
    report.add("ribbon_central_on_module", central.empty(), central.empty() ? "0" : central);
    const DGModule image = functor_F(context, module);
    const std::string chain = chain_map_residual(image, image, theta, context.hbar());
    report.add("ribbon_chain_map", chain.empty(), chain.empty() ? "0" : chain);
    return report;
}

}  // namespace dbl
