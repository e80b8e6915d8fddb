#include "dbl/tangent.hpp"

#include <memory>

namespace dbl {

namespace {

void add_monomial(Polynomial& target, const Monomial& m, const Rational& c) {
    auto& slot = target[m];
    slot += c;
    if (sgn(slot) == 0) target.erase(m);
}

Polynomial scaled(const Monomial& m, const Rational& c) { return {{m, c}}; }

std::string first_difference(const ModuleVector& a, const ModuleVector& b, const DGModule& module) {
    ModuleVector diff = a;
    for (std::size_t i = 0; i < diff.size(); ++i) dbl::accumulate(diff[i], b[i], -1);
    return is_zero(diff) ? std::string{} : to_string(diff, module);
}

}  // namespace

ModuleVector bracket(const DGLieStructure& lie, const ModuleVector& left, const ModuleVector& right) {
    const auto& A = *lie.carrier.algebra;
    const auto& G = lie.carrier.generators;
    ModuleVector out(G.size());
    for (int i = 0; i < G.size(); ++i) {
        for (int j = 0; j < G.size(); ++j) {
            const auto& constants = lie.bracket.bracket(i, j);
            if (constants.empty() || left[i].empty() || right[j].empty()) continue;
            for (const auto& [mf, cf] : left[i]) {
                for (const auto& [mg, cg] : right[j]) {
                    const auto [sign, product] = A.multiply(mf, mg);
                    if (sign == 0) continue;
                    const Rational c = cf * cg * (sign * sign_of_parity(G.parity(i) * A.parity(mg)));
                    for (const auto& [k, f] : constants) add_monomial(out[k], product, c * f);
                }
            }
        }
    }
    return out;
}

Polynomial pairing(const DGLieStructure& lie, const ModuleVector& left, const ModuleVector& right) {
    const auto& A = *lie.carrier.algebra;
    const auto& G = lie.carrier.generators;
    Polynomial out;
    if (!lie.form) return out;
    for (const auto& [key, k] : lie.form->pairing) {
        const auto [i, j] = key;
        for (const auto& [mf, cf] : left[i]) {
            for (const auto& [mg, cg] : right[j]) {
                const auto [sign, product] = A.multiply(mf, mg);
                if (sign == 0) continue;
                add_monomial(out, product, cf * cg * k * (sign * sign_of_parity(G.parity(i) * A.parity(mg))));
            }
        }
    }
    return out;
}

namespace {

GradedBasis carrier_generators(const LieAlgebraData& L) {
    GradedBasis out;
    for (const auto& e : L.basis().elements()) out.add({e.name, e.degree, -e.weight});
    return out;
}

// Constant g-action x_a . e = [x_a, e] on the first `rank` basis elements.
std::vector<std::vector<ModuleVector>> adjoint_actions(const LieAlgebraData& L, int rank) {
    std::vector<std::vector<ModuleVector>> out(rank);
    for (int a = 0; a < rank; ++a) {
        for (int j = 0; j < L.dim(); ++j) {
            ModuleVector image(L.dim());
            for (const auto& [k, c] : L.bracket(a, j)) add_monomial(image[k], {}, c);
            out[a].push_back(std::move(image));
        }
    }
    return out;
}

}  // namespace

DGLieStructure build_tangent_quotient(const LieAlgebraData& g, const RepresentationData& rho) {
    const int n = rho.dimension;
    const int r = g.dim();
    GradedBasis coordinates;
    for (int i = 0; i < n; ++i) coordinates.add({"v" + std::to_string(i + 1) + "*", 0, 1});
    auto algebra = std::make_shared<CommutativeDGA>(coordinates, r);
    for (int b = 0; b < r; ++b) {
        for (int i = 0; i < n; ++i) {
            Polynomial image;
            for (int j = 0; j < n; ++j) {
                if (sgn(rho.matrices[b][i][j]) != 0) add_monomial(image, {j}, -rho.matrices[b][i][j]);
            }
            algebra->set_action(b, i, image);
        }
    }
    DGLieStructure out;
    out.bracket = build_h(g, rho);
    out.carrier.algebra = algebra;
    out.carrier.generators = carrier_generators(out.bracket);
    const int dim = out.bracket.dim();
    out.carrier.differential.assign(dim, ModuleVector(dim));
    for (int a = 0; a < r; ++a) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (sgn(rho.matrices[a][i][j]) != 0) add_monomial(out.carrier.differential[a][r + i], {j}, rho.matrices[a][i][j]);
            }
        }
    }
    out.carrier.actions = adjoint_actions(out.bracket, r);
    return out;
}

DGLieStructure build_tangent_lie_M(const DoubleData& dd) {
    const int n = dd.dim_v;
    const int r = dd.rank;
    const auto& M = dd.rho.matrices;
    const auto v = [](int i) { return Monomial{i}; };
    const auto v_star = [n](int i) { return Monomial{n + i}; };
    const auto c = [n](int a) { return Monomial{2 * n + a}; };
    const int psi_plus = r;
    const int psi_minus = r + n;
    const int t = r + 2 * n;

    DGLieStructure out;
    out.bracket = dd.algebra;
    out.form = dd.kappa;
    out.carrier.algebra = std::make_shared<CommutativeDGA>(build_moment_dga(dd.g, dd.rho));
    out.carrier.generators = carrier_generators(dd.algebra);
    const int dim = dd.algebra.dim();
    auto& d = out.carrier.differential;
    d.assign(dim, ModuleVector(dim));
    for (int b = 0; b < r; ++b) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (sgn(M[b][j][i]) != 0) dbl::accumulate(d[b][psi_plus + j], scaled(v_star(i), M[b][j][i]));
                if (sgn(M[b][i][j]) != 0) dbl::accumulate(d[b][psi_minus + j], scaled(v(i), -M[b][i][j]));
            }
        }
        for (int k = 0; k < r; ++k) {
            for (int a = 0; a < r; ++a) {
                const Rational f = dd.g.structure_constant(b, k, a);
                if (sgn(f) != 0) dbl::accumulate(d[b][t + k], scaled(c(a), f));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < r; ++a) {
            for (int j = 0; j < n; ++j) {
                if (sgn(M[a][i][j]) != 0) dbl::accumulate(d[psi_minus + i][t + a], scaled(v_star(j), M[a][i][j]));
                if (sgn(M[a][j][i]) != 0) dbl::accumulate(d[psi_plus + i][t + a], scaled(v(j), M[a][j][i]));
            }
        }
    }
    out.carrier.actions = adjoint_actions(dd.algebra, r);
    return out;
}

Report check_dg_lie(const DGLieStructure& lie, const std::string& prefix) {
    Report report;
    const DGModule& carrier = lie.carrier;
    const auto& G = carrier.generators;
    report.append(check_dg_module(carrier), prefix);
    report.append(check_jacobi(lie.bracket), prefix);
    std::string derivation;
    std::string compatible;
    for (int i = 0; i < G.size(); ++i) {
        const ModuleVector x = module_generator(carrier, i);
        const ModuleVector dx = apply_differential(carrier, x);
        for (int j = 0; j < G.size(); ++j) {
            const ModuleVector y = module_generator(carrier, j);
            const ModuleVector dy = apply_differential(carrier, y);
            if (derivation.empty()) {
                ModuleVector rhs = bracket(lie, dx, y);
                const ModuleVector second = bracket(lie, x, dy);
                for (std::size_t k = 0; k < rhs.size(); ++k) dbl::accumulate(rhs[k], second[k], sign_of_parity(G.parity(i)));
                const std::string diff = first_difference(apply_differential(carrier, bracket(lie, x, y)), rhs, carrier);
                if (!diff.empty()) derivation = "[" + G[i].name + "," + G[j].name + "]: " + diff;
            }
            if (lie.form && compatible.empty()) {
                Polynomial residual = pairing(lie, dx, y);
                dbl::accumulate(residual, pairing(lie, x, dy), sign_of_parity(G.parity(i)));
                if (!residual.empty()) {
                    compatible = G[i].name + "," + G[j].name + ": " + to_string(residual, carrier.algebra->generators());
                }
            }
        }
    }
    report.add(prefix + "d_derivation", derivation.empty(), derivation.empty() ? "0" : derivation);
    if (lie.form) {
        report.add(prefix + "form_d_compatible", compatible.empty(), compatible.empty() ? "0" : compatible);
        report.append(check_invariant_form(lie.bracket, *lie.form), prefix);
    }
    return report;
}

Report check_tangent_equals_F_adjoint(const KoszulContext& context, const DGLieStructure& lie_m) {
    Report report;
    const DoubleData& dd = context.data();
    const DGModule image = functor_F(context, adjoint_module(dd.algebra, context.order()));
    // CE generators go to the moment DGA, hbar to 0.
    std::vector<Polynomial> dictionary = ce_dictionary(dd);
    dictionary.resize(context.ce()->size());
    DGModule transported = image;
    transported.algebra = lie_m.carrier.algebra;
    const auto& target = *lie_m.carrier.algebra;
    for (auto& column : transported.differential) {
        for (auto& entry : column) entry = substitute(target, entry, dictionary);
    }
    for (auto& action : transported.actions) {
        for (auto& column : action) {
            for (auto& entry : column) entry = substitute(target, entry, dictionary);
        }
    }
    const bool same_generators = transported.generators == lie_m.carrier.generators;
    report.add("F_adjoint_generators", same_generators, std::to_string(transported.generators.size()) + " generators");
    std::string differential;
    std::string action;
    if (same_generators) {
        const auto& G = lie_m.carrier.generators;
        for (int j = 0; j < G.size() && differential.empty(); ++j) {
            const std::string diff = first_difference(transported.differential[j], lie_m.carrier.differential[j], lie_m.carrier);
            if (!diff.empty()) differential = "d " + G[j].name + ": " + diff;
        }
        for (std::size_t a = 0; a < lie_m.carrier.actions.size() && action.empty(); ++a) {
            for (int j = 0; j < G.size() && action.empty(); ++j) {
                const std::string diff =
                    first_difference(transported.actions.at(a)[j], lie_m.carrier.actions[a][j], lie_m.carrier);
                if (!diff.empty()) action = G[j].name + ": " + diff;
            }
        }
    }
    report.add("F_adjoint_differential", same_generators && differential.empty(), differential.empty() ? "0" : differential);
    report.add("F_adjoint_action", same_generators && action.empty(), action.empty() ? "0" : action);
    return report;
}

}  // namespace dbl
