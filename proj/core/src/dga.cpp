#include "dbl/dga.hpp"

#include <algorithm>
#include <stdexcept>

#include "dbl/complex.hpp"
#include "dbl/linalg.hpp"

namespace dbl {

void accumulate(Polynomial& target, const Polynomial& source, const Rational& scale) {
    if (sgn(scale) == 0) return;
    for (const auto& [m, c] : source) {
        auto& slot = target[m];
        slot += c * scale;
        if (sgn(slot) == 0) target.erase(m);
    }
}

std::string to_string(const Polynomial& value, const GradedBasis& generators) {
    if (value.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : value) {
        if (!out.empty()) out += " + ";
        out += dbl::to_string(c);
        for (int g : m) out += " " + generators[g].name;
    }
    return out;
}

CommutativeDGA::CommutativeDGA(GradedBasis generators, int action_count)
    : generators_(std::move(generators)),
      differential_(generators_.size()),
      actions_(action_count, std::vector<Polynomial>(generators_.size())) {}

void CommutativeDGA::set_hbar(int g, int order) {
    if (generators_.parity(g) != 0) throw std::invalid_argument("hbar must be even");
    hbar_ = std::make_pair(g, order);
}

int CommutativeDGA::degree(const Monomial& m) const {
    int d = 0;
    for (int g : m) d += generators_.degree(g);
    return d;
}

int CommutativeDGA::weight(const Monomial& m) const {
    int w = 0;
    for (int g : m) w += generators_.weight(g);
    return w;
}

int CommutativeDGA::parity(const Monomial& m) const {
    int p = 0;
    for (int g : m) p += generators_.parity(g);
    return p % 2;
}

std::pair<int, Monomial> CommutativeDGA::multiply(const Monomial& a, const Monomial& b) const {
    // Merge; each factor of b passing an odd factor of a that is larger contributes a sign.
    Monomial out;
    out.reserve(a.size() + b.size());
    int exponent = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    int odd_remaining_a = parity(a);
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
            if (j < b.size() && a[i] == b[j] && generators_.parity(a[i]) == 1) return {0, {}};
            odd_remaining_a -= generators_.parity(a[i]);
            out.push_back(a[i++]);
        } else {
            exponent += generators_.parity(b[j]) * odd_remaining_a;
            out.push_back(b[j++]);
        }
    }
    if (hbar_) {
        if (std::count(out.begin(), out.end(), hbar_->first) >= hbar_->second) return {0, {}};
    }
    return {sign_of_parity(exponent), std::move(out)};
}

Polynomial CommutativeDGA::multiply(const Polynomial& a, const Polynomial& b) const {
    Polynomial out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            const auto [sign, m] = multiply(ma, mb);
            if (sign == 0) continue;
            auto& slot = out[m];
            slot += ca * cb * sign;
            if (sgn(slot) == 0) out.erase(m);
        }
    }
    return out;
}

Polynomial CommutativeDGA::apply_derivation(const Monomial& m, const std::vector<Polynomial>& images, bool odd) const {
    Polynomial out;
    int parity_before = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Polynomial& image = images.at(m[i]);
        if (!image.empty()) {
            const Monomial before(m.begin(), m.begin() + static_cast<long>(i));
            const Monomial after(m.begin() + static_cast<long>(i) + 1, m.end());
            const Rational sign = odd ? sign_of_parity(parity_before) : 1;
            Polynomial term = multiply(multiply({{before, Rational(1)}}, image), {{after, Rational(1)}});
            dbl::accumulate(out, term, sign);
        }
        parity_before += generators_.parity(m[i]);
    }
    return out;
}

Polynomial CommutativeDGA::d(const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, c] : p) dbl::accumulate(out, apply_derivation(m, differential_, true), c);
    return out;
}

Polynomial CommutativeDGA::act(int a, const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, c] : p) dbl::accumulate(out, apply_derivation(m, actions_.at(a), false), c);
    return out;
}

std::vector<Monomial> CommutativeDGA::monomials(int weight) const {
    for (int g = 0; g < size(); ++g) {
        const int w = generators_.weight(g);
        if (w < 0 || (w == 0 && generators_.parity(g) == 0 && !(hbar_ && hbar_->first == g))) {
            throw std::domain_error("weight component is infinite: generator " + generators_[g].name +
                                    " has weight " + std::to_string(w));
        }
    }
    std::vector<Monomial> out;
    Monomial current;
    // Depth-first over generators in index order.
    auto visit = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) out.push_back(current);
        for (int g = start; g < size(); ++g) {
            const int w = generators_.weight(g);
            if (w > remaining) continue;
            if (hbar_ && hbar_->first == g && std::count(current.begin(), current.end(), g) + 1 >= hbar_->second) continue;
            current.push_back(g);
            self(self, generators_.parity(g) ? g + 1 : g, remaining - w);
            current.pop_back();
        }
    };
    if (weight >= 0) visit(visit, 0, weight);
    // Weight-zero odd generators make the remaining==0 branch revisit; remove duplicates.
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CommutativeDGA build_moment_dga(const LieAlgebraData& g, const RepresentationData& rho) {
    const int n = rho.dimension;
    const int r = g.dim();
    GradedBasis basis;
    for (int i = 0; i < n; ++i) basis.add({"v" + std::to_string(i + 1), 0, 1});
    for (int i = 0; i < n; ++i) basis.add({"v" + std::to_string(i + 1) + "*", 0, 1});
    for (int a = 0; a < r; ++a) basis.add({"c_" + g.basis()[a].name, -1, 2});
    CommutativeDGA A(basis, r);
    for (int a = 0; a < r; ++a) {
        Polynomial dc;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const Rational& m = rho.matrices[a][i][j];
                if (sgn(m) != 0) dbl::accumulate(dc, {{Monomial{i, n + j}, m}});
            }
        }
        A.set_differential(2 * n + a, dc);
    }
    for (int b = 0; b < r; ++b) {
        for (int i = 0; i < n; ++i) {
            Polynomial on_v;
            Polynomial on_vstar;
            for (int j = 0; j < n; ++j) {
                if (sgn(rho.matrices[b][j][i]) != 0) on_v[{j}] += rho.matrices[b][j][i];
                if (sgn(rho.matrices[b][i][j]) != 0) on_vstar[{n + j}] -= rho.matrices[b][i][j];
            }
            A.set_action(b, i, on_v);
            A.set_action(b, n + i, on_vstar);
        }
        for (int a = 0; a < r; ++a) {
            Polynomial on_c;
            for (const auto& [k, f] : g.bracket(b, a)) on_c[{2 * n + k}] += f;
            A.set_action(b, 2 * n + a, on_c);
        }
    }
    return A;
}

namespace {

CommutativeDGA ce_with_names(const LieAlgebraData& L, const std::vector<std::string>& names, int action_count,
                             std::optional<int> hbar_order = std::nullopt) {
    GradedBasis basis;
    for (int e = 0; e < L.dim(); ++e) basis.add({names[e], 1 - L.basis().degree(e), L.basis().weight(e)});
    if (hbar_order) basis.add({"hbar", kHbarDegree, -kHbarWeight});
    CommutativeDGA A(basis, action_count);
    if (hbar_order) A.set_hbar(L.dim(), *hbar_order);
    for (int m = 0; m < L.dim(); ++m) {
        Polynomial dm;
        for (int k = 0; k < L.dim(); ++k) {
            for (int l = 0; l < L.dim(); ++l) {
                const Rational f = L.structure_constant(k, l, m);
                if (sgn(f) == 0) continue;
                // -1/2 (-1)^{p_k q_l} f_kl^m xi^k xi^l
                const int exponent = L.parity(k) * (1 - L.parity(l));
                dbl::accumulate(dm, A.multiply(A.generator(k), A.generator(l)), -f / 2 * sign_of_parity(exponent));
            }
        }
        A.set_differential(m, dm);
    }
    return A;
}

}  // namespace

CommutativeDGA build_ce(const LieAlgebraData& algebra) {
    std::vector<std::string> names;
    for (const auto& e : algebra.basis().elements()) names.push_back("xi_" + e.name);
    return ce_with_names(algebra, names, 0);
}

CommutativeDGA build_ce_positive(const DoubleData& dd, std::optional<int> hbar_order) {
    const PositivePart positive = positive_subalgebra(dd);
    const auto& L = positive.algebra;
    std::vector<std::string> names;
    for (int e = 0; e < L.dim(); ++e) {
        const std::string& name = L.basis()[e].name;
        switch (L.role(e)) {
            case Role::psi_plus: names.push_back("x" + name.substr(4)); break;
            case Role::psi_minus: names.push_back("y" + name.substr(4)); break;
            default: names.push_back("c" + name.substr(1)); break;
        }
    }
    CommutativeDGA A = ce_with_names(L, names, dd.rank, hbar_order);
    std::vector<int> local(dd.algebra.dim(), -1);
    for (int e = 0; e < L.dim(); ++e) local[positive.embedding[e]] = e;
    // (x . xi)(e') = -xi([x, e'])
    for (int b = 0; b < dd.rank; ++b) {
        for (int e = 0; e < L.dim(); ++e) {
            Polynomial image;
            for (int e2 = 0; e2 < L.dim(); ++e2) {
                const Rational f = dd.algebra.structure_constant(b, positive.embedding[e2], positive.embedding[e]);
                if (sgn(f) != 0) image[{e2}] -= f;
            }
            A.set_action(b, e, image);
        }
    }
    return A;
}

std::vector<Polynomial> ce_dictionary(const DoubleData& dd) {
    const PositivePart positive = positive_subalgebra(dd);
    const int n = dd.dim_v;
    std::vector<Polynomial> out;
    for (int e = 0; e < positive.algebra.dim(); ++e) {
        const int global = positive.embedding[e];
        const Role role = positive.algebra.role(e);
        if (role == Role::psi_plus) {
            out.push_back({{Monomial{n + global - dd.rank}, Rational(-1)}});
        } else if (role == Role::psi_minus) {
            const int k = dd.paired_h(global) - dd.rank;
            out.push_back({{Monomial{k}, Rational(-1)}});
        } else {
            out.push_back({{Monomial{2 * n + dd.paired_h(global)}, Rational(1)}});
        }
    }
    return out;
}

Report check_dga(const CommutativeDGA& A, const std::string& prefix) {
    Report report;
    std::string square;
    std::string grading;
    std::string equivariance;
    const auto& B = A.generators();
    for (int g = 0; g < A.size(); ++g) {
        const Polynomial dd = A.d(A.differential(g));
        if (!dd.empty() && square.empty()) square = B[g].name + ": " + to_string(dd, B);
        for (const auto& [m, c] : A.differential(g)) {
            if ((A.degree(m) != B.degree(g) + 1 || A.weight(m) != B.weight(g)) && grading.empty()) grading = B[g].name;
        }
        for (int a = 0; a < A.action_count(); ++a) {
            Polynomial residual = A.d(A.action(a, g));
            dbl::accumulate(residual, A.act(a, A.differential(g)), -1);
            if (!residual.empty() && equivariance.empty()) {
                equivariance = B[g].name + " under action " + std::to_string(a) + ": " + to_string(residual, B);
            }
        }
    }
    report.add(prefix + "d_squared", square.empty(), square.empty() ? "0" : square);
    report.add(prefix + "d_bidegree", grading.empty(), grading.empty() ? "(1,0)" : grading);
    report.add(prefix + "equivariant", equivariance.empty(), equivariance.empty() ? "0" : equivariance);
    return report;
}

Polynomial substitute(const CommutativeDGA& target, const Polynomial& p, const std::vector<Polynomial>& images) {
    Polynomial out;
    for (const auto& [m, c] : p) {
        Polynomial term{{Monomial{}, c}};
        for (int g : m) term = target.multiply(term, images.at(g));
        dbl::accumulate(out, term);
    }
    return out;
}

Report check_moment_equals_ce(const DoubleData& dd) {
    Report report;
    const CommutativeDGA moment = build_moment_dga(dd.g, dd.rho);
    const CommutativeDGA ce = build_ce_positive(dd);
    const auto dictionary = ce_dictionary(dd);
    std::string grading;
    std::string differential;
    std::string action;
    for (int e = 0; e < ce.size(); ++e) {
        const int image = dictionary[e].begin()->first.front();
        if (ce.generators()[e].degree != moment.generators()[image].degree ||
            ce.generators()[e].weight != moment.generators()[image].weight) {
            if (grading.empty()) grading = ce.generators()[e].name + " -> " + moment.generators()[image].name;
        }
        Polynomial residual = substitute(moment, ce.differential(e), dictionary);
        dbl::accumulate(residual, moment.d(dictionary[e]), -1);
        if (!residual.empty() && differential.empty()) {
            differential = "d " + ce.generators()[e].name + ": " + to_string(residual, moment.generators());
        }
        for (int a = 0; a < dd.rank; ++a) {
            Polynomial r2 = substitute(moment, ce.action(a, e), dictionary);
            dbl::accumulate(r2, moment.act(a, dictionary[e]), -1);
            if (!r2.empty() && action.empty()) action = ce.generators()[e].name;
        }
    }
    report.add("generators_match", grading.empty() && ce.size() == moment.size(),
               grading.empty() ? std::to_string(ce.size()) + " generators" : grading);
    report.add("differentials_match", differential.empty(), differential.empty() ? "0" : differential);
    report.add("actions_match", action.empty(), action.empty() ? "0" : action);
    report.append(check_dga(moment), "moment_");
    report.append(check_dga(ce), "ce_");
    return report;
}

FiniteComplex weight_complex(const CommutativeDGA& A, int weight, bool with_actions) {
    std::map<int, std::vector<Monomial>> by_degree;
    for (auto& m : A.monomials(weight)) by_degree[A.degree(m)].push_back(std::move(m));
    std::map<int, std::map<Monomial, int>> position;
    for (const auto& [k, list] : by_degree) {
        for (std::size_t i = 0; i < list.size(); ++i) position[k][list[i]] = static_cast<int>(i);
    }
    auto rows_of = [&](int source, int target_degree, const auto& image) {
        std::vector<SparseRow> rows;
        const auto target = position.find(target_degree);
        for (const auto& m : by_degree.at(source)) {
            SparseRow row;
            for (const auto& [mono, c] : image(m)) {
                if (target == position.end()) throw std::logic_error("map leaves its weight block");
                row.emplace_back(target->second.at(mono), c);
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
        return rows;
    };
    FiniteComplex out;
    for (const auto& [k, list] : by_degree) {
        out.set_dimension(k, static_cast<int>(list.size()));
        if (by_degree.count(k + 1)) {
            out.set_differential(k, rows_of(k, k + 1, [&](const Monomial& m) { return A.d({{m, Rational(1)}}); }));
        }
    }
    if (with_actions) {
        for (int a = 0; a < A.action_count(); ++a) {
            std::map<int, std::vector<SparseRow>> action;
            for (const auto& [k, list] : by_degree) {
                action[k] = rows_of(k, k, [&](const Monomial& m) { return A.act(a, {{m, Rational(1)}}); });
            }
            out.add_action(std::move(action));
        }
    }
    return out;
}

CohomologyReport cohomology(const CommutativeDGA& A, std::pair<int, int> weights, std::pair<int, int> degrees,
                            bool with_invariants) {
    CohomologyReport out;
    for (int w = weights.first; w <= weights.second; ++w) {
        const FiniteComplex block = weight_complex(A, w, with_invariants);
        for (int k = degrees.first; k <= degrees.second; ++k) {
            out.dimensions[{k, w}] = block.cohomology(k);
            out.cochains[{k, w}] = block.dimension(k);
            if (with_invariants) out.invariants[{k, w}] = block.invariants(k);
        }
    }
    return out;
}

int invariants(const CommutativeDGA& A, int weight, int degree) {
    return weight_complex(A, weight, true).invariants(degree);
}

Report check_euler_characteristic(const CommutativeDGA& A, int max_weight) {
    Report report;
    std::string failure;
    for (int w = 0; w <= max_weight && failure.empty(); ++w) {
        const FiniteComplex block = weight_complex(A, w, false);
        int chain = 0;
        for (const auto& [k, n] : block.dimensions()) chain += (k % 2 == 0 ? 1 : -1) * n;
        if (chain != block.euler_characteristic()) failure = "weight " + std::to_string(w);
    }
    report.add("euler_characteristic", failure.empty(), failure.empty() ? "weights 0.." + std::to_string(max_weight) : failure);
    return report;
}

int FiberLinfty::top_arity() const {
    int top = 0;
    for (std::size_t n = 0; n < brackets.size(); ++n) {
        for (const auto& p : brackets[n]) {
            if (!p.empty()) top = static_cast<int>(n);
        }
    }
    return top;
}

FiberLinfty build_fiber_linfty(const FiberMap& f) {
    FiberLinfty out;
    out.source_dim = f.source_dim;
    out.target_dim = static_cast<int>(f.components.size());
    const int n = f.source_dim;
    const int m = out.target_dim;
    std::vector<int> weights;
    int max_degree = 0;
    for (const auto& component : f.components) {
        int w = component.empty() ? 1 : static_cast<int>(component.begin()->first.size());
        for (const auto& [mono, c] : component) {
            if (static_cast<int>(mono.size()) != w) throw std::invalid_argument("fiber map components must be homogeneous");
            for (int v : mono) {
                if (v < 0 || v >= n) throw std::invalid_argument("fiber map variable out of range");
            }
        }
        weights.push_back(w);
        max_degree = std::max(max_degree, w);
    }
    auto name = [&](int i) { return i < static_cast<int>(f.source_names.size()) ? f.source_names[i] : "u" + std::to_string(i + 1); };
    GradedBasis basis;
    for (int i = 0; i < n; ++i) basis.add({name(i), 0, 1});
    for (int k = 0; k < m; ++k) basis.add({"eta" + std::to_string(k + 1), -1, weights[k]});
    for (int i = 0; i < n; ++i) basis.add({"delta_" + name(i), 0, 1});
    for (int k = 0; k < m; ++k) basis.add({"w" + std::to_string(k + 1) + "*", -1, weights[k]});
    out.algebra = CommutativeDGA(basis);
    out.brackets.assign(max_degree + 1, std::vector<Polynomial>(m));

    std::vector<Polynomial> shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = {{Monomial{out.v(i)}, Rational(1)}, {Monomial{out.delta(i)}, Rational(1)}};
    for (int k = 0; k < m; ++k) {
        out.algebra.set_differential(out.eta(k), f.components[k]);
        Polynomial value;
        for (const auto& [mono, c] : f.components[k]) {
            Polynomial term{{Monomial{}, c}};
            for (int v : mono) term = out.algebra.multiply(term, shifted[v]);
            dbl::accumulate(value, term);
        }
        dbl::accumulate(value, f.components[k], -1);
        for (const auto& [mono, c] : value) {
            const auto order = std::count_if(mono.begin(), mono.end(), [&](int g) { return g >= out.delta(0) && g < out.w_star(0); });
            out.brackets[order][k][mono] = c;
        }
        out.algebra.set_differential(out.w_star(k), value);
    }
    return out;
}

FiberMap moment_fiber_map(const LieAlgebraData& g, const RepresentationData& rho) {
    FiberMap f;
    const int n = rho.dimension;
    f.source_dim = 2 * n;
    for (int i = 0; i < n; ++i) f.source_names.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i) f.source_names.push_back("v" + std::to_string(i + 1) + "*");
    for (int a = 0; a < g.dim(); ++a) {
        Polynomial mu;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (sgn(rho.matrices[a][i][j]) != 0) mu[{i, n + j}] += rho.matrices[a][i][j];
            }
        }
        f.components.push_back(mu);
    }
    return f;
}

Report check_fiber_linfty(const FiberLinfty& l, int max_weight, const std::string& prefix) {
    Report report;
    const auto& A = l.algebra;
    std::string failure;
    long long checked = 0;
    for (int w = 0; w <= max_weight && failure.empty(); ++w) {
        for (const auto& m : A.monomials(w)) {
            ++checked;
            const Polynomial dd = A.d(A.d({{m, Rational(1)}}));
            if (!dd.empty()) {
                failure = to_string({{m, Rational(1)}}, A.generators()) + ": " + to_string(dd, A.generators());
                break;
            }
        }
    }
    report.add(prefix + "linfty_d_squared", failure.empty(),
               failure.empty() ? std::to_string(checked) + " monomials" : failure);
    // Brackets are nabla^n f / n!: summing them reproduces f(v + delta) - f(v).
    std::string taylor;
    for (int k = 0; k < l.target_dim; ++k) {
        Polynomial sum;
        for (const auto& level : l.brackets) dbl::accumulate(sum, level[k]);
        dbl::accumulate(sum, A.differential(l.w_star(k)), -1);
        if (!sum.empty() || !l.brackets[0][k].empty()) taylor = "component " + std::to_string(k + 1);
    }
    report.add(prefix + "linfty_taylor", taylor.empty(), "top arity " + std::to_string(l.top_arity()));
    return report;
}

Report check_fiber_cone_point(const FiberLinfty& l, const CommutativeDGA& moment) {
    Report report;
    const int n = l.source_dim;
    std::string failure;
    std::string linear;
    for (int k = 0; k < l.target_dim; ++k) {
        Polynomial at_cone;
        for (std::size_t order = 0; order < l.brackets.size(); ++order) {
            for (const auto& [mono, c] : l.brackets[order][k]) {
                const bool has_v = std::any_of(mono.begin(), mono.end(), [&](int g) { return g < n; });
                if (has_v) continue;
                if (order == 1) linear = "component " + std::to_string(k + 1);
                Monomial renamed;
                for (int g : mono) renamed.push_back(g - l.delta(0));
                at_cone[renamed] += c;
            }
        }
        Polynomial residual = at_cone;
        dbl::accumulate(residual, moment.differential(n + k), -1);
        if (!residual.empty() && failure.empty()) failure = moment.generators()[n + k].name + ": " + to_string(residual, moment.generators());
    }
    report.add("cone_point_linear_bracket_vanishes", linear.empty(), linear.empty() ? "0" : linear);
    report.add("cone_point_matches_moment", failure.empty(), failure.empty() ? "0" : failure);
    return report;
}

}  // namespace dbl
