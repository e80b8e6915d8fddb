#include "dbl/module.hpp"

#include <algorithm>

namespace dbl {

SeriesMatrix::SeriesMatrix(int rows, int cols, int order) : rows_(rows), cols_(cols), order_(order) {}

SeriesMatrix SeriesMatrix::identity(int n, int order) {
    SeriesMatrix out(n, n, order);
    for (int i = 0; i < n; ++i) out.add(i, i, Rational(1));
    return out;
}

void SeriesMatrix::add(int row, int col, const TruncatedSeries& value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw std::out_of_range("matrix entry out of range");
    if (value.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({row, col}, order_);
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
}

void SeriesMatrix::add(int row, int col, const Rational& value, int power) {
    if (power >= order_) return;
    add(row, col, TruncatedSeries::monomial(order_, power, value));
}

TruncatedSeries SeriesMatrix::at(int row, int col) const {
    const auto it = entries_.find({row, col});
    return it == entries_.end() ? TruncatedSeries(order_) : it->second;
}

SeriesMatrix& SeriesMatrix::operator+=(const SeriesMatrix& other) {
    for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
    return *this;
}

SeriesMatrix& SeriesMatrix::operator-=(const SeriesMatrix& other) {
    for (const auto& [key, v] : other.entries_) add(key.first, key.second, -v);
    return *this;
}

SeriesMatrix& SeriesMatrix::operator*=(const TruncatedSeries& scalar) {
    Entries scaled;
    for (const auto& [key, v] : entries_) {
        TruncatedSeries product = v * scalar;
        if (!product.is_zero()) scaled.emplace(key, std::move(product));
    }
    entries_ = std::move(scaled);
    return *this;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not compose");
    std::map<int, std::vector<std::pair<int, const TruncatedSeries*>>> by_column;
    for (const auto& [key, v] : a.entries_) by_column[key.second].emplace_back(key.first, &v);
    SeriesMatrix out(a.rows_, b.cols_, a.order_);
    for (const auto& [key, v] : b.entries_) {
        const auto it = by_column.find(key.first);
        if (it == by_column.end()) continue;
        for (const auto& [row, left] : it->second) out.add(row, key.second, *left * v);
    }
    return out;
}

SeriesMatrix SeriesMatrix::hbar_component(int power) const {
    SeriesMatrix out(rows_, cols_, order_);
    for (const auto& [key, v] : entries_) {
        if (power < v.order()) out.add(key.first, key.second, v[power]);
    }
    return out;
}

std::string SeriesMatrix::describe(std::size_t limit) const {
    if (entries_.empty()) return "0";
    std::string out;
    std::size_t shown = 0;
    for (const auto& [key, v] : entries_) {
        if (shown++ == limit) {
            out += "; ...";
            break;
        }
        if (!out.empty()) out += "; ";
        out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "): " + v.to_string();
    }
    return out;
}

SeriesMatrix kronecker(const SeriesMatrix& a, const SeriesMatrix& b, int b_parity, const std::vector<int>& left_parities) {
    SeriesMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.order());
    for (const auto& [ka, va] : a.entries()) {
        const int sign = sign_of_parity(b_parity * left_parities.at(ka.second));
        for (const auto& [kb, vb] : b.entries()) {
            out.add(ka.first * b.rows() + kb.first, ka.second * b.cols() + kb.second, va * vb * Rational(sign));
        }
    }
    return out;
}

SeriesMatrix swap_matrix(const std::vector<int>& left_parities, const std::vector<int>& right_parities, int order) {
    const int m = static_cast<int>(left_parities.size());
    const int n = static_cast<int>(right_parities.size());
    SeriesMatrix out(m * n, m * n, order);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            out.add(j * m + i, i * n + j, Rational(sign_of_parity(left_parities[i] * right_parities[j])));
        }
    }
    return out;
}

SeriesMatrix exp_hbar(const SeriesMatrix& x, const Rational& scale) {
    SeriesMatrix step = x;
    step *= TruncatedSeries::monomial(x.order(), 1, scale);
    SeriesMatrix out = SeriesMatrix::identity(x.rows(), x.order());
    SeriesMatrix power = out;
    for (int k = 1; k < x.order(); ++k) {
        power = power * step;
        power *= TruncatedSeries(x.order(), Rational(1, k));
        out += power;
    }
    return out;
}

FiniteModule::FiniteModule(std::string name, LieAlgebraData algebra, GradedBasis basis, int order)
    : name_(std::move(name)),
      algebra_(std::move(algebra)),
      basis_(std::move(basis)),
      order_(order),
      actions_(algebra_.dim(), SeriesMatrix(basis_.size(), basis_.size(), order)),
      differential_(basis_.size(), basis_.size(), order) {}

std::vector<int> FiniteModule::parities() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i) out.push_back(basis_.parity(i));
    return out;
}

void FiniteModule::set_action(int generator, SeriesMatrix value) {
    if (value.rows() != dim() || value.cols() != dim()) throw InvalidModule("action matrix has the wrong shape");
    actions_.at(generator) = std::move(value);
}

void FiniteModule::set_differential(SeriesMatrix value) {
    if (value.rows() != dim() || value.cols() != dim()) throw InvalidModule("differential has the wrong shape");
    differential_ = std::move(value);
}

namespace {

// First entry whose hbar-adjusted bidegree is not (source) + shift.
std::string grading_violation(const SeriesMatrix& m, const GradedBasis& target, const GradedBasis& source, int degree_shift,
                              int weight_shift) {
    for (const auto& [key, v] : m.entries()) {
        for (int k = 0; k < v.order(); ++k) {
            if (sgn(v[k]) == 0) continue;
            const int degree = target.degree(key.first) + k * kHbarDegree;
            const int weight = target.weight(key.first) + k * kHbarWeight;
            if (degree != source.degree(key.second) + degree_shift || weight != source.weight(key.second) + weight_shift) {
                return source[key.second].name + " -> hbar^" + std::to_string(k) + " " + target[key.first].name;
            }
        }
    }
    return {};
}

}  // namespace

Report check_module(const FiniteModule& module) {
    Report report;
    const auto& L = module.algebra();
    const auto& B = module.basis();
    std::string grading;
    for (int e = 0; e < L.dim() && grading.empty(); ++e) {
        grading = grading_violation(module.action(e), B, B, L.basis().degree(e), L.basis().weight(e));
        if (!grading.empty()) grading = L.basis()[e].name + ": " + grading;
    }
    if (grading.empty()) {
        grading = grading_violation(module.differential(), B, B, 1, 0);
        if (!grading.empty()) grading = "d: " + grading;
    }
    report.add("module_bidegrees", grading.empty(), grading.empty() ? "0" : grading);

    std::string brackets;
    for (int a = 0; a < L.dim() && brackets.empty(); ++a) {
        for (int b = a; b < L.dim() && brackets.empty(); ++b) {
            SeriesMatrix residual = module.action(a) * module.action(b);
            SeriesMatrix swapped = module.action(b) * module.action(a);
            swapped *= TruncatedSeries(module.order(), Rational(sign_of_parity(L.parity(a) * L.parity(b))));
            residual -= swapped;
            for (const auto& [c, f] : L.bracket(a, b)) {
                SeriesMatrix term = module.action(c);
                term *= TruncatedSeries(module.order(), f);
                residual -= term;
            }
            if (!residual.is_zero()) {
                brackets = "[" + L.basis()[a].name + "," + L.basis()[b].name + "]: " + residual.describe();
            }
        }
    }
    report.add("module_brackets", brackets.empty(), brackets.empty() ? "0" : brackets);

    const SeriesMatrix& d = module.differential();
    const SeriesMatrix square = d * d;
    report.add("module_d_squared", square.is_zero(), square.describe());
    std::string commute;
    for (int e = 0; e < L.dim() && commute.empty(); ++e) {
        SeriesMatrix residual = d * module.action(e);
        SeriesMatrix other = module.action(e) * d;
        other *= TruncatedSeries(module.order(), Rational(sign_of_parity(L.parity(e))));
        residual -= other;
        if (!residual.is_zero()) commute = L.basis()[e].name + ": " + residual.describe();
    }
    report.add("module_d_equivariant", commute.empty(), commute.empty() ? "0" : commute);
    return report;
}

void validate(const FiniteModule& module) {
    const Report report = check_module(module);
    if (const auto* failure = report.first_failure()) {
        throw InvalidModule("module " + module.name() + ": " + failure->name + " violated at " + failure->detail);
    }
}

FiniteModule trivial_module(const LieAlgebraData& algebra, int order) {
    return FiniteModule("trivial", algebra, GradedBasis({{"1", 0, 0}}), order);
}

FiniteModule adjoint_module(const LieAlgebraData& algebra, int order) {
    FiniteModule out("adjoint", algebra, algebra.basis(), order);
    for (int e = 0; e < algebra.dim(); ++e) {
        SeriesMatrix m(algebra.dim(), algebra.dim(), order);
        for (int j = 0; j < algebra.dim(); ++j) {
            for (const auto& [i, f] : algebra.bracket(e, j)) m.add(i, j, f);
        }
        out.set_action(e, std::move(m));
    }
    return out;
}

FiniteModule tensor_product(const FiniteModule& left, const FiniteModule& right) {
    GradedBasis basis;
    for (const auto& a : left.basis().elements()) {
        for (const auto& b : right.basis().elements()) {
            basis.add({a.name + "(x)" + b.name, a.degree + b.degree, a.weight + b.weight});
        }
    }
    FiniteModule out(left.name() + "(x)" + right.name(), left.algebra(), basis, left.order());
    const auto lp = left.parities();
    const SeriesMatrix id_left = SeriesMatrix::identity(left.dim(), left.order());
    const SeriesMatrix id_right = SeriesMatrix::identity(right.dim(), right.order());
    for (int e = 0; e < left.algebra().dim(); ++e) {
        const int p = left.algebra().parity(e);
        out.set_action(e, kronecker(left.action(e), id_right, 0, lp) + kronecker(id_left, right.action(e), p, lp));
    }
    out.set_differential(kronecker(left.differential(), id_right, 0, lp) + kronecker(id_left, right.differential(), 1, lp));
    return out;
}

SeriesMatrix act_monomial(const FiniteModule& module, const Monomial& word) {
    SeriesMatrix out = SeriesMatrix::identity(module.dim(), module.order());
    for (int g : word) out = out * module.action(g);
    return out;
}

namespace {

int monomial_parity(const LieAlgebraData& L, const Monomial& m) {
    int p = 0;
    for (int g : m) p += L.parity(g);
    return p % 2;
}

}  // namespace

SeriesMatrix act(const FiniteModule& module, const UEAElement& value) {
    SeriesMatrix out(module.dim(), module.dim(), module.order());
    for (const auto& [key, s] : value.terms()) {
        SeriesMatrix term = act_monomial(module, key.at(0));
        term *= s;
        out += term;
    }
    return out;
}

SeriesMatrix act(const FiniteModule& left, const FiniteModule& right, const UEAElement& value) {
    const auto lp = left.parities();
    SeriesMatrix out(left.dim() * right.dim(), left.dim() * right.dim(), left.order());
    for (const auto& [key, s] : value.terms()) {
        SeriesMatrix term = kronecker(act_monomial(left, key.at(0)), act_monomial(right, key.at(1)),
                                      monomial_parity(right.algebra(), key.at(1)), lp);
        term *= s;
        out += term;
    }
    return out;
}

FiniteComplex module_complex(const FiniteModule& module, int weight, const std::vector<int>& g_generators) {
    const auto& B = module.basis();
    std::map<int, std::vector<std::pair<int, int>>> by_degree;  // (power, basis index)
    std::map<std::pair<int, int>, std::pair<int, int>> position;  // (power, index) -> (degree, slot)
    for (int b = 0; b < module.dim(); ++b) {
        const int twice = B.weight(b) - weight;
        if (twice < 0 || twice % 2 != 0 || twice / 2 >= module.order()) continue;
        const int k = twice / 2;
        const int degree = B.degree(b) - B.weight(b);
        position[{k, b}] = {degree, static_cast<int>(by_degree[degree].size())};
        by_degree[degree].emplace_back(k, b);
    }
    auto rows_of = [&](const SeriesMatrix& m, int degree, int target_degree) {
        std::vector<SparseRow> rows;
        for (const auto& [k, b] : by_degree.at(degree)) {
            std::map<int, Rational> row;
            for (const auto& [key, s] : m.entries()) {
                if (key.second != b) continue;
                for (int l = 0; k + l < module.order(); ++l) {
                    if (sgn(s[l]) == 0) continue;
                    const auto it = position.find({k + l, key.first});
                    if (it == position.end() || it->second.first != target_degree) {
                        throw std::logic_error("module map leaves its weight block");
                    }
                    row[it->second.second] += s[l];
                }
            }
            SparseRow sparse;
            for (const auto& [c, v] : row) {
                if (sgn(v) != 0) sparse.emplace_back(c, v);
            }
            rows.push_back(std::move(sparse));
        }
        return rows;
    };
    FiniteComplex out;
    for (const auto& [degree, list] : by_degree) {
        out.set_dimension(degree, static_cast<int>(list.size()));
        if (by_degree.count(degree + 1)) out.set_differential(degree, rows_of(module.differential(), degree, degree + 1));
    }
    for (int a : g_generators) {
        std::map<int, std::vector<SparseRow>> action;
        for (const auto& [degree, list] : by_degree) action[degree] = rows_of(module.action(a), degree, degree);
        out.add_action(std::move(action));
    }
    return out;
}

Report check_module_map(const ModuleMap& map, const FiniteModule& source, const FiniteModule& target) {
    Report report;
    const bool shape = map.matrix.rows() == target.dim() && map.matrix.cols() == source.dim();
    report.add(map.name + "_shape", shape, std::to_string(map.matrix.rows()) + "x" + std::to_string(map.matrix.cols()));
    if (!shape) return report;
    const std::string grading = grading_violation(map.matrix, target.basis(), source.basis(), 0, 0);
    report.add(map.name + "_bidegree", grading.empty(), grading.empty() ? "0" : grading);
    std::string intertwines;
    for (int e = 0; e < source.algebra().dim() && intertwines.empty(); ++e) {
        const SeriesMatrix residual = target.action(e) * map.matrix - map.matrix * source.action(e);
        if (!residual.is_zero()) intertwines = source.algebra().basis()[e].name + ": " + residual.describe();
    }
    report.add(map.name + "_equivariant", intertwines.empty(), intertwines.empty() ? "0" : intertwines);
    const SeriesMatrix chain = target.differential() * map.matrix - map.matrix * source.differential();
    report.add(map.name + "_chain_map", chain.is_zero(), chain.describe());
    return report;
}

Polynomial series_to_polynomial(const TruncatedSeries& value, std::optional<int> hbar) {
    Polynomial out;
    for (int k = 0; k < value.order(); ++k) {
        if (sgn(value[k]) == 0) continue;
        if (k > 0 && !hbar) throw std::logic_error("hbar-dependent entry over an algebra without hbar");
        out[Monomial(k, k > 0 ? *hbar : 0)] += value[k];
    }
    return out;
}

ModuleVector module_generator(const DGModule& module, int j) {
    ModuleVector out(module.generators.size());
    out.at(j) = {{Monomial{}, Rational(1)}};
    return out;
}

bool is_zero(const ModuleVector& value) {
    return std::all_of(value.begin(), value.end(), [](const Polynomial& p) { return p.empty(); });
}

std::string to_string(const ModuleVector& value, const DGModule& module) {
    std::string out;
    for (std::size_t j = 0; j < value.size(); ++j) {
        if (value[j].empty()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(value[j], module.algebra->generators()) + ") " + module.generators[static_cast<int>(j)].name;
    }
    return out.empty() ? "0" : out;
}

ModuleVector apply_differential(const DGModule& module, const ModuleVector& value) {
    const auto& A = *module.algebra;
    ModuleVector out(value.size());
    for (std::size_t j = 0; j < value.size(); ++j) {
        if (value[j].empty()) continue;
        dbl::accumulate(out[j], A.d(value[j]));
        for (const auto& [m, c] : value[j]) {
            const Polynomial f{{m, c * sign_of_parity(A.degree(m))}};
            const ModuleVector& image = module.differential[j];
            for (std::size_t i = 0; i < image.size(); ++i) {
                if (!image[i].empty()) dbl::accumulate(out[i], A.multiply(f, image[i]));
            }
        }
    }
    return out;
}

ModuleVector apply_action(const DGModule& module, int a, const ModuleVector& value) {
    const auto& A = *module.algebra;
    ModuleVector out(value.size());
    for (std::size_t j = 0; j < value.size(); ++j) {
        if (value[j].empty()) continue;
        dbl::accumulate(out[j], A.act(a, value[j]));
        const ModuleVector& image = module.actions.at(a).at(j);
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (!image[i].empty()) dbl::accumulate(out[i], A.multiply(value[j], image[i]));
        }
    }
    return out;
}

ModuleVector apply_matrix(const DGModule& target, const SeriesMatrix& matrix, const ModuleVector& value,
                          std::optional<int> hbar) {
    ModuleVector out(target.generators.size());
    for (const auto& [key, s] : matrix.entries()) {
        const Polynomial& f = value.at(key.second);
        if (f.empty()) continue;
        dbl::accumulate(out.at(key.first), target.algebra->multiply(f, series_to_polynomial(s, hbar)));
    }
    return out;
}

Report check_dg_module(const DGModule& module, const std::string& prefix) {
    Report report;
    const auto& A = *module.algebra;
    const auto& G = module.generators;
    std::string square;
    std::string grading;
    for (int j = 0; j < G.size(); ++j) {
        const ModuleVector twice = apply_differential(module, module.differential[j]);
        if (!is_zero(twice) && square.empty()) square = G[j].name + ": " + to_string(twice, module);
        for (int i = 0; i < G.size(); ++i) {
            for (const auto& [m, c] : module.differential[j][i]) {
                if ((A.degree(m) + G.degree(i) != G.degree(j) + 1 || A.weight(m) + G.weight(i) != G.weight(j)) &&
                    grading.empty()) {
                    grading = G[j].name + " -> " + G[i].name;
                }
            }
        }
    }
    report.add(prefix + "d_squared", square.empty(), square.empty() ? "0" : square);
    report.add(prefix + "d_bidegree", grading.empty(), grading.empty() ? "(1,0)" : grading);
    return report;
}

DGModule tensor_product(const DGModule& left, const DGModule& right) {
    if (left.algebra != right.algebra) throw std::invalid_argument("tensor product over different algebras");
    DGModule out;
    out.algebra = left.algebra;
    const auto& A = *left.algebra;
    const int n = right.generators.size();
    for (const auto& a : left.generators.elements()) {
        for (const auto& b : right.generators.elements()) {
            out.generators.add({a.name + "(x)" + b.name, a.degree + b.degree, a.weight + b.weight});
        }
    }
    const int size = out.generators.size();
    auto image_of = [&](const std::vector<ModuleVector>& lmaps, const std::vector<ModuleVector>& rmaps, int j, int k,
                        bool sign_right) {
        ModuleVector v(size);
        for (int i = 0; i < left.generators.size(); ++i) dbl::accumulate(v[i * n + k], lmaps[j][i]);
        const int gp = left.generators.parity(j);
        for (int l = 0; l < n; ++l) {
            for (const auto& [m, c] : rmaps[k][l]) {
                const int sign = sign_right ? sign_of_parity(gp * (1 + A.parity(m))) : sign_of_parity(gp * A.parity(m));
                v[j * n + l][m] += c * sign;
                if (sgn(v[j * n + l][m]) == 0) v[j * n + l].erase(m);
            }
        }
        return v;
    };
    for (int j = 0; j < left.generators.size(); ++j) {
        for (int k = 0; k < n; ++k) out.differential.push_back(image_of(left.differential, right.differential, j, k, true));
    }
    if (!left.actions.empty() && left.actions.size() == right.actions.size()) {
        out.actions.resize(left.actions.size());
        for (std::size_t a = 0; a < left.actions.size(); ++a) {
            for (int j = 0; j < left.generators.size(); ++j) {
                for (int k = 0; k < n; ++k) out.actions[a].push_back(image_of(left.actions[a], right.actions[a], j, k, false));
            }
        }
    }
    return out;
}

FiniteComplex dg_module_complex(const DGModule& module, int weight, bool with_actions) {
    const auto& A = *module.algebra;
    const auto& G = module.generators;
    std::map<int, std::vector<Monomial>> monomials;
    std::map<int, std::vector<std::pair<int, Monomial>>> by_degree;
    std::map<std::pair<int, Monomial>, std::pair<int, int>> position;
    for (int j = 0; j < G.size(); ++j) {
        const int w = weight - G.weight(j);
        if (w < 0) continue;
        if (!monomials.count(w)) monomials[w] = A.monomials(w);
        for (const auto& m : monomials[w]) {
            const int p = A.degree(m) + G.degree(j);
            position[{j, m}] = {p, static_cast<int>(by_degree[p].size())};
            by_degree[p].emplace_back(j, m);
        }
    }
    auto rows_of = [&](int degree, int target_degree, const auto& image) {
        std::vector<SparseRow> rows;
        for (const auto& [j, m] : by_degree.at(degree)) {
            ModuleVector v(G.size());
            v[j] = {{m, Rational(1)}};
            const ModuleVector out = image(v);
            SparseRow row;
            for (int i = 0; i < G.size(); ++i) {
                for (const auto& [mono, c] : out[i]) {
                    const auto it = position.find({i, mono});
                    if (it == position.end() || it->second.first != target_degree) {
                        throw std::logic_error("module differential leaves its weight block");
                    }
                    row.emplace_back(it->second.second, c);
                }
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
        return rows;
    };
    FiniteComplex out;
    for (const auto& [p, list] : by_degree) {
        out.set_dimension(p, static_cast<int>(list.size()));
        if (by_degree.count(p + 1)) {
            out.set_differential(p, rows_of(p, p + 1, [&](const ModuleVector& v) { return apply_differential(module, v); }));
        }
    }
    if (with_actions) {
        for (std::size_t a = 0; a < module.actions.size(); ++a) {
            std::map<int, std::vector<SparseRow>> action;
            for (const auto& [p, list] : by_degree) {
                action[p] = rows_of(p, p, [&](const ModuleVector& v) { return apply_action(module, static_cast<int>(a), v); });
            }
            out.add_action(std::move(action));
        }
    }
    return out;
}

}  // namespace dbl
