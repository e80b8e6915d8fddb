#include "dbl/lie.hpp"

#include <algorithm>
#include <set>

#include "dbl/linalg.hpp"

namespace dbl {

void accumulate(LinearCombination& target, const LinearCombination& source, const Rational& scale) {
    if (sgn(scale) == 0 || source.empty()) return;
    LinearCombination out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            out.push_back(std::move(target[i++]));
        } else if (i == target.size() || source[j].first < target[i].first) {
            out.emplace_back(source[j].first, source[j].second * scale);
            ++j;
        } else {
            Rational v = target[i].second + source[j].second * scale;
            if (sgn(v) != 0) out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

std::string to_string(const LinearCombination& value, const GradedBasis& basis) {
    if (value.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : value) {
        if (!out.empty()) out += " + ";
        out += dbl::to_string(c) + " " + basis[i].name;
    }
    return out;
}

LieAlgebraData::LieAlgebraData(GradedBasis basis)
    : basis_(std::make_shared<GradedBasis>(std::move(basis))),
      table_(basis_->size(), std::vector<LinearCombination>(basis_->size())),
      roles_(basis_->size(), Role::generic) {}

void LieAlgebraData::set_bracket(int a, int b, LinearCombination value) {
    std::sort(value.begin(), value.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    LinearCombination clean;
    for (auto& [c, v] : value) {
        if (!clean.empty() && clean.back().first == c) {
            clean.back().second += v;
            if (sgn(clean.back().second) == 0) clean.pop_back();
        } else if (sgn(v) != 0) {
            clean.emplace_back(c, v);
        }
    }
    const Rational partner = -Rational(sign_of_parity(parity(a) * parity(b)));
    LinearCombination mirrored;
    for (const auto& [c, v] : clean) mirrored.emplace_back(c, v * partner);
    table_.at(a).at(b) = std::move(clean);
    if (a != b) table_.at(b).at(a) = std::move(mirrored);
}

void LieAlgebraData::set_structure_constant(int a, int b, int c, const Rational& value) {
    auto& entry = table_.at(a).at(b);
    auto it = std::find_if(entry.begin(), entry.end(), [c](const auto& p) { return p.first == c; });
    if (it != entry.end()) entry.erase(it);
    if (sgn(value) != 0) {
        entry.emplace_back(c, value);
        std::sort(entry.begin(), entry.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
}

Rational LieAlgebraData::structure_constant(int a, int b, int c) const {
    for (const auto& [k, v] : bracket(a, b)) {
        if (k == c) return v;
    }
    return 0;
}

std::map<std::tuple<int, int, int>, Rational> LieAlgebraData::structure_constants() const {
    std::map<std::tuple<int, int, int>, Rational> out;
    for (int a = 0; a < dim(); ++a) {
        for (int b = 0; b < dim(); ++b) {
            for (const auto& [c, v] : bracket(a, b)) out.emplace(std::make_tuple(a, b, c), v);
        }
    }
    return out;
}

LinearCombination LieAlgebraData::bracket(const LinearCombination& a, const LinearCombination& b) const {
    LinearCombination out;
    for (const auto& [i, ci] : a) {
        for (const auto& [j, cj] : b) accumulate(out, bracket(i, j), ci * cj);
    }
    return out;
}

std::vector<int> LieAlgebraData::indices_with(Role r) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i) {
        if (roles_[i] == r) out.push_back(i);
    }
    return out;
}

std::optional<std::string> LieAlgebraData::structural_violation() const {
    const auto& B = basis();
    for (int a = 0; a < dim(); ++a) {
        for (int b = 0; b < dim(); ++b) {
            const Rational partner = -Rational(sign_of_parity(parity(a) * parity(b)));
            for (const auto& [c, v] : bracket(a, b)) {
                if (B.degree(c) != B.degree(a) + B.degree(b)) {
                    return "degree additivity fails for [" + B[a].name + "," + B[b].name + "] -> " + B[c].name;
                }
                if (B.weight(c) != B.weight(a) + B.weight(b)) {
                    return "weight additivity fails for [" + B[a].name + "," + B[b].name + "] -> " + B[c].name;
                }
                if (structure_constant(b, a, c) != v * partner) {
                    return "graded antisymmetry fails for [" + B[a].name + "," + B[b].name + "] at " + B[c].name;
                }
            }
        }
    }
    return std::nullopt;
}

Rational BilinearFormData::operator()(int a, int b) const {
    const auto it = pairing.find({a, b});
    return it == pairing.end() ? Rational(0) : it->second;
}

LieAlgebraData make_lie_algebra(const std::vector<std::string>& names,
                                const std::vector<std::tuple<std::string, std::string, std::string, Rational>>& brackets) {
    GradedBasis basis;
    for (const auto& n : names) basis.add({n, 0, 0});
    LieAlgebraData g(basis);
    std::map<std::pair<int, int>, LinearCombination> collected;
    for (const auto& [a, b, c, v] : brackets) {
        int ia = g.basis().index(a);
        int ib = g.basis().index(b);
        const int ic = g.basis().index(c);
        Rational value = v;
        if (ia > ib) {
            std::swap(ia, ib);
            value = -value;
        }
        if (ia == ib) throw std::invalid_argument("bracket [" + a + "," + a + "] must vanish in degree 0");
        collected[{ia, ib}].emplace_back(ic, value);
    }
    for (auto& [ab, value] : collected) g.set_bracket(ab.first, ab.second, value);
    for (int i = 0; i < g.dim(); ++i) g.set_role(i, Role::g);
    return g;
}

LieAlgebraData build_h(const LieAlgebraData& g, const RepresentationData& rho) {
    const int r = g.dim();
    const int n = rho.dimension;
    for (int a = 0; a < r; ++a) {
        if (g.basis().degree(a) != 0 || g.basis().weight(a) != 0) {
            throw std::invalid_argument("g must sit in degree 0 and weight 0");
        }
    }
    if (static_cast<int>(rho.matrices.size()) != r) throw InvalidRepresentation("one matrix per basis element of g is required");
    for (const auto& m : rho.matrices) {
        if (static_cast<int>(m.size()) != n) throw InvalidRepresentation("representation matrix has the wrong size");
        for (const auto& row : m) {
            if (static_cast<int>(row.size()) != n) throw InvalidRepresentation("representation matrix has the wrong size");
        }
    }
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    Rational lhs = 0;
                    for (const auto& [c, v] : g.bracket(a, b)) lhs += v * rho.matrices[c][i][j];
                    Rational rhs = 0;
                    for (int k = 0; k < n; ++k) {
                        rhs += rho.matrices[a][i][k] * rho.matrices[b][k][j] - rho.matrices[b][i][k] * rho.matrices[a][k][j];
                    }
                    if (lhs != rhs) {
                        throw InvalidRepresentation("rho([" + g.basis()[a].name + "," + g.basis()[b].name +
                                                    "]) differs from the commutator at column " + std::to_string(j + 1));
                    }
                }
            }
        }
    }

    GradedBasis basis;
    for (const auto& e : g.basis().elements()) basis.add(e);
    for (int i = 0; i < n; ++i) basis.add({"psi+" + std::to_string(i + 1), 1, 1});
    LieAlgebraData h(basis);
    for (int a = 0; a < r; ++a) {
        h.set_role(a, Role::g);
        for (int b = a + 1; b < r; ++b) h.set_bracket(a, b, g.bracket(a, b));
    }
    for (int i = 0; i < n; ++i) h.set_role(r + i, Role::psi_plus);
    for (int a = 0; a < r; ++a) {
        for (int j = 0; j < n; ++j) {
            LinearCombination value;
            for (int i = 0; i < n; ++i) {
                if (sgn(rho.matrices[a][i][j]) != 0) value.emplace_back(r + i, rho.matrices[a][i][j]);
            }
            h.set_bracket(a, r + j, value);
        }
    }
    return h;
}

int DoubleData::paired_h(int i) const {
    for (int k = 0; k < dim_h(); ++k) {
        if (dual[k] == i) return k;
    }
    return -1;
}

DoubleData build_double(const LieAlgebraData& h) {
    DoubleData dd;
    const auto g_idx = h.indices_with(Role::g);
    const auto psi_idx = h.indices_with(Role::psi_plus);
    if (static_cast<int>(g_idx.size() + psi_idx.size()) != h.dim()) {
        throw std::invalid_argument("build_double needs an algebra produced by build_h");
    }
    dd.rank = static_cast<int>(g_idx.size());
    dd.dim_v = static_cast<int>(psi_idx.size());

    GradedBasis basis;
    for (const auto& e : h.basis().elements()) basis.add(e);
    std::vector<int> dual(h.dim(), -1);
    for (int k : psi_idx) {
        std::string name = h.basis()[k].name;
        if (name.rfind("psi+", 0) == 0) name = "psi-" + name.substr(4);
        else name = name + "*";
        dual[k] = basis.add({name, 2 - h.basis().degree(k), 2 - h.basis().weight(k)});
    }
    for (int k : g_idx) dual[k] = basis.add({"t_" + h.basis()[k].name, 2 - h.basis().degree(k), 2 - h.basis().weight(k)});

    LieAlgebraData d(basis);
    for (int k = 0; k < h.dim(); ++k) {
        d.set_role(k, h.role(k));
        d.set_role(dual[k], h.role(k) == Role::g ? Role::dual_g : Role::psi_minus);
    }
    for (int a = 0; a < h.dim(); ++a) {
        for (int b = a; b < h.dim(); ++b) d.set_bracket(a, b, h.bracket(a, b));
    }
    // [y, xi_k] = sum_z -(-1)^{|y||xi|} <xi_k, [y, z]> xi_z, the coadjoint action.
    for (int y = 0; y < h.dim(); ++y) {
        for (int k = 0; k < h.dim(); ++k) {
            const int sign = -sign_of_parity(h.parity(y) * d.parity(dual[k]));
            LinearCombination value;
            for (int z = 0; z < h.dim(); ++z) {
                const Rational c = h.structure_constant(y, z, k);
                if (sgn(c) != 0) value.emplace_back(dual[z], c * sign);
            }
            d.set_bracket(y, dual[k], value);
        }
    }
    for (int k = 0; k < h.dim(); ++k) {
        dd.kappa.pairing[{dual[k], k}] = 1;
        dd.kappa.pairing[{k, dual[k]}] = sign_of_parity(h.parity(k) * d.parity(dual[k]));
    }
    dd.algebra = std::move(d);
    for (int k = 0; k < h.dim(); ++k) dd.h.push_back(k);
    dd.dual = dual;
    return dd;
}

DoubleData build_double(const LieAlgebraData& g, const RepresentationData& rho) {
    DoubleData dd = build_double(build_h(g, rho));
    dd.g = g;
    dd.rho = rho;
    return dd;
}

Report check_jacobi(const LieAlgebraData& L) {
    Report report;
    if (auto violation = L.structural_violation()) {
        report.add("structure", false, *violation);
    } else {
        report.add("structure", true);
    }
    std::vector<std::string> failures;
    const int n = L.dim();
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            for (int c = b; c < n; ++c) {
                // [a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]]
                LinearCombination j = L.bracket({{a, 1}}, L.bracket(b, c));
                accumulate(j, L.bracket(L.bracket(a, b), {{c, 1}}), -1);
                accumulate(j, L.bracket({{b, 1}}, L.bracket(a, c)), -Rational(sign_of_parity(L.parity(a) * L.parity(b))));
                if (!j.empty()) {
                    failures.push_back("(" + L.basis()[a].name + "," + L.basis()[b].name + "," + L.basis()[c].name +
                                       "): " + to_string(j, L.basis()));
                }
            }
        }
    }
    std::string detail;
    for (const auto& f : failures) detail += (detail.empty() ? "" : "; ") + f;
    report.add("jacobi", failures.empty(), failures.empty() ? "0" : detail);
    return report;
}

Report check_invariant_form(const LieAlgebraData& L, const BilinearFormData& kappa) {
    Report report;
    const int n = L.dim();
    std::string bad_degree;
    std::string bad_symmetry;
    for (const auto& [ab, v] : kappa.pairing) {
        const auto [a, b] = ab;
        if (sgn(v) == 0) continue;
        if (L.basis().degree(a) + L.basis().degree(b) != 2 && bad_degree.empty()) {
            bad_degree = L.basis()[a].name + "," + L.basis()[b].name;
        }
        if (kappa(b, a) != v * sign_of_parity(L.parity(a) * L.parity(b)) && bad_symmetry.empty()) {
            bad_symmetry = L.basis()[a].name + "," + L.basis()[b].name;
        }
    }
    report.add("kappa_degree", bad_degree.empty(), bad_degree.empty() ? "2" : bad_degree);
    report.add("kappa_graded_symmetric", bad_symmetry.empty(), bad_symmetry);

    std::string bad_invariance;
    for (int a = 0; a < n && bad_invariance.empty(); ++a) {
        for (int b = 0; b < n && bad_invariance.empty(); ++b) {
            for (int c = 0; c < n; ++c) {
                Rational lhs = 0;
                for (const auto& [k, v] : L.bracket(a, b)) lhs += v * kappa(k, c);
                Rational rhs = 0;
                for (const auto& [k, v] : L.bracket(b, c)) rhs += v * kappa(a, k);
                if (lhs != rhs) {
                    bad_invariance = "(" + L.basis()[a].name + "," + L.basis()[b].name + "," + L.basis()[c].name +
                                     "): " + to_string(lhs - rhs);
                    break;
                }
            }
        }
    }
    report.add("kappa_invariant", bad_invariance.empty(), bad_invariance.empty() ? "0" : bad_invariance);

    std::vector<SparseRow> gram;
    for (int a = 0; a < n; ++a) {
        SparseRow row;
        for (int b = 0; b < n; ++b) {
            if (sgn(kappa(a, b)) != 0) row.emplace_back(b, kappa(a, b));
        }
        gram.push_back(std::move(row));
    }
    const int rank = n == 0 ? 0 : rank_of(gram);
    report.add("kappa_nondegenerate", rank == n, "rank " + std::to_string(rank) + " of " + std::to_string(n));
    return report;
}

SparseTensor classical_r(const DoubleData& dd, int order) {
    SparseTensor r(dd.algebra.basis_ptr(), 2, order);
    for (int k = 0; k < dd.dim_h(); ++k) r.add({dd.h[k], dd.dual[k]}, Rational(1));
    return r;
}

namespace {

void require_even(const SparseTensor& r) {
    if (r.arity() != 2) throw std::invalid_argument("r must have arity 2");
    for (const auto& [index, value] : r.entries()) {
        if (r.parity(index) != 0) throw std::invalid_argument("r must be even");
    }
}

}  // namespace

SparseTensor cybe_residual(const SparseTensor& r, const LieAlgebraData& L) {
    require_even(r);
    SparseTensor out(L.basis_ptr(), 3, r.order());
    for (const auto& [ij, ci] : r.entries()) {
        const int a = ij[0];
        const int b = ij[1];
        for (const auto& [kl, cj] : r.entries()) {
            const int c = kl[0];
            const int d = kl[1];
            const TruncatedSeries coeff = ci * cj;
            for (const auto& [e, v] : L.bracket(a, c)) {
                out.add({e, b, d}, coeff * Rational(v * sign_of_parity(L.parity(a) * L.parity(c))));
            }
            for (const auto& [e, v] : L.bracket(b, c)) out.add({a, e, d}, coeff * v);
            for (const auto& [e, v] : L.bracket(b, d)) {
                out.add({a, c, e}, coeff * Rational(v * sign_of_parity(L.parity(b) * L.parity(d))));
            }
        }
    }
    return out;
}

Report check_cybe(const SparseTensor& r, const LieAlgebraData& L) {
    Report report;
    const SparseTensor residual = cybe_residual(r, L);
    report.add("cybe", residual.is_zero(), residual.to_string());
    return report;
}

SparseTensor cobracket(const LieAlgebraData& L, const SparseTensor& r, int x) {
    SparseTensor out(L.basis_ptr(), 2, r.order());
    for (const auto& [ab, c] : r.entries()) {
        const int a = ab[0];
        const int b = ab[1];
        for (const auto& [e, v] : L.bracket(x, a)) out.add({e, b}, c * v);
        const Rational sign = sign_of_parity(L.parity(x) * L.parity(a));
        for (const auto& [e, v] : L.bracket(x, b)) out.add({a, e}, c * Rational(v * sign));
    }
    return out;
}

SparseTensor omega_from_r(const SparseTensor& r) {
    SparseTensor out = r + graded_flip(r);
    out *= Rational(1, 2);
    return out;
}

PositivePart positive_subalgebra(const DoubleData& dd) {
    const auto& d = dd.algebra;
    PositivePart out;
    GradedBasis basis;
    std::vector<int> local(d.dim(), -1);
    for (int i = 0; i < d.dim(); ++i) {
        if (d.basis().degree(i) > 0) {
            local[i] = basis.add(d.basis()[i]);
            out.embedding.push_back(i);
        }
    }
    LieAlgebraData p(basis);
    for (int a = 0; a < p.dim(); ++a) {
        p.set_role(a, d.role(out.embedding[a]));
        for (int b = a; b < p.dim(); ++b) {
            LinearCombination value;
            for (const auto& [c, v] : d.bracket(out.embedding[a], out.embedding[b])) {
                if (local[c] < 0) throw std::logic_error("positive part is not closed under the bracket");
                value.emplace_back(local[c], v);
            }
            p.set_bracket(a, b, value);
        }
    }
    out.algebra = std::move(p);
    return out;
}

Report check_semidirect(const DoubleData& dd, const PositivePart& positive) {
    Report report;
    const auto& d = dd.algebra;
    std::set<int> in_positive(positive.embedding.begin(), positive.embedding.end());
    std::string leak;
    for (int a = 0; a < d.dim() && leak.empty(); ++a) {
        for (int e : positive.embedding) {
            for (const auto& [c, v] : d.bracket(a, e)) {
                if (in_positive.count(c) == 0) {
                    leak = "[" + d.basis()[a].name + "," + d.basis()[e].name + "]";
                    break;
                }
            }
        }
    }
    report.add("positive_ideal", leak.empty(), leak);
    const int complement = d.dim() - static_cast<int>(positive.embedding.size());
    report.add("positive_complement_is_g", complement == dd.rank,
               std::to_string(complement) + " degree-0 elements");
    return report;
}

}  // namespace dbl
