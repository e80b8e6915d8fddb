#include "dbl/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dbl/linalg.hpp"

namespace dbl {

namespace {

LieAlgebraData restrict_to_h(const DoubleData& dd) {
    GradedBasis basis;
    for (int k = 0; k < dd.dim_h(); ++k) basis.add(dd.algebra.basis()[dd.h[k]]);
    LieAlgebraData h(basis);
    for (int a = 0; a < dd.dim_h(); ++a) {
        h.set_role(a, dd.algebra.role(dd.h[a]));
        for (int b = a; b < dd.dim_h(); ++b) {
            LinearCombination value;
            for (const auto& [c, v] : dd.algebra.bracket(dd.h[a], dd.h[b])) {
                if (c >= dd.dim_h()) throw std::logic_error("h is not closed under the bracket");
                value.emplace_back(c, v);
            }
            h.set_bracket(a, b, value);
        }
    }
    return h;
}

// Sign and sorted positions of a product of odd/even factors.
std::pair<int, Monomial> sort_with_sign(const Monomial& factors, const GradedBasis& basis) {
    std::vector<int> perm(factors.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return factors[a] < factors[b]; });
    std::vector<int> parities;
    for (int f : factors) parities.push_back(basis.parity(f));
    Monomial sorted;
    for (int p : perm) sorted.push_back(factors[p]);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1] && basis.parity(sorted[i]) == 1) return {0, sorted};
    }
    return {koszul_sign(perm, parities), sorted};
}

std::string describe_residual(const Uea& uea, const UEAElement& residual) {
    if (residual.is_zero()) return "0";
    int lowest = residual.order();
    for (const auto& [key, c] : residual.terms()) lowest = std::min(lowest, c.valuation());
    int block = -1;
    UEAElement part(residual.arity(), residual.order());
    for (const auto& [key, c] : residual.terms()) {
        if (c.valuation() != lowest) continue;
        const int w = uea.weight(key);
        if (block < 0 || w < block) block = w;
    }
    for (const auto& [key, c] : residual.terms()) {
        if (uea.weight(key) == block) part.add(key, TruncatedSeries::monomial(c.order(), lowest, c[lowest]));
    }
    return "hbar^" + std::to_string(lowest) + " weight " + std::to_string(block) + ": " + part.to_string(uea.basis());
}

void add_equality(Report& report, const std::string& name, const Uea& uea, const UEAElement& lhs,
                  const UEAElement& rhs) {
    const UEAElement residual = lhs - rhs;
    report.add(name, residual.is_zero(), describe_residual(uea, residual));
}

}  // namespace

DualPairing::DualPairing(const DoubleData& dd) : uea_(restrict_to_h(dd), 1) {}

const UEAElement& DualPairing::symmetrize(const Monomial& u) const {
    if (const auto it = sym_cache_.find(u); it != sym_cache_.end()) return it->second;
    const int m = static_cast<int>(u.size());
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> parities;
    for (int g : u) parities.push_back(uea_.basis().parity(g));
    UEAElement out(1, 1);
    Rational count = 0;
    do {
        std::vector<int> word;
        for (int p : perm) word.push_back(u[p]);
        out += uea_.normal_form(word, TruncatedSeries(1, koszul_sign(perm, parities)));
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out *= 1 / count;
    return sym_cache_.emplace(u, std::move(out)).first->second;
}

Rational DualPairing::norm(const Monomial& u) const {
    if (u.empty()) return 1;
    if (const auto it = norm_cache_.find(u); it != norm_cache_.end()) return it->second;
    const int j = u.back();
    const Monomial rest(u.begin(), u.end() - 1);
    const auto multiplicity = std::count(u.begin(), u.end(), j);
    const Rational value =
        norm(rest) * Rational(multiplicity) * sign_of_parity(uea_.basis().parity(j) * uea_.parity(rest));
    norm_cache_.emplace(u, value);
    return value;
}

const std::map<Monomial, Rational>& DualPairing::desymmetrize(const Monomial& pbw) const {
    if (const auto it = desym_cache_.find(pbw); it != desym_cache_.end()) return it->second;
    std::map<Monomial, Rational> out{{pbw, Rational(1)}};
    if (!pbw.empty()) {
        for (const auto& [key, c] : symmetrize(pbw).terms()) {
            if (key[0] == pbw) continue;
            for (const auto& [v, w] : desymmetrize(key[0])) {
                auto& slot = out[v];
                slot -= c[0] * w;
                if (sgn(slot) == 0) out.erase(v);
            }
        }
    }
    return desym_cache_.emplace(pbw, std::move(out)).first->second;
}

Rational DualPairing::pair(const Monomial& pbw, const Monomial& dual) const {
    const auto& coords = desymmetrize(pbw);
    const auto it = coords.find(dual);
    return it == coords.end() ? Rational(0) : it->second * norm(dual);
}

TruncatedSeries DualPairing::pair(const UEAElement& a, const DualPolynomial& f) const {
    if (a.arity() != 1) throw std::invalid_argument("pair needs an arity-1 element");
    TruncatedSeries out(a.order());
    for (const auto& [key, c] : a.terms()) {
        for (const auto& [v, fv] : f) {
            const Rational p = pair(key[0], v);
            if (sgn(p) != 0) out += c * Rational(p * fv);
        }
    }
    return out;
}

std::vector<Monomial> enumerate_monomials(const GradedBasis& basis, const std::vector<int>& generators, int max_length) {
    std::vector<Monomial> out{{}};
    std::vector<Monomial> frontier{{}};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            for (int g : generators) {
                if (!m.empty() && (g < m.back() || (g == m.back() && basis.parity(g) == 1))) continue;
                Monomial m2 = m;
                m2.push_back(g);
                next.push_back(std::move(m2));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

HopfDouble::HopfDouble(const DoubleData& dd, int order, std::optional<int> max_weight)
    : dd_(dd), uea_(dd.algebra, order, max_weight), pairing_(dd) {
    const int n = dd.algebra.dim();
    const int N = order;
    generator_coproduct_.assign(n, UEAElement(2, N));
    for (int k = 0; k < dd.dim_h(); ++k) {
        const int g = dd.h[k];
        generator_coproduct_[g] = uea_.tensor({uea_.generator(g), uea_.one()}) + uea_.tensor({uea_.one(), uea_.generator(g)});
    }

    // Delta(T^i) = sum_{u,w} pi_1(sym(w) sym(u))_i / (d_u d_w) T^u (x) T^w, T = hbar t.
    std::vector<int> h_positions(dd.dim_h());
    std::iota(h_positions.begin(), h_positions.end(), 0);
    const GradedBasis& hb = pairing_.uea().basis();
    int max_h_weight = 0;
    for (int k = 0; k < dd.dim_h(); ++k) max_h_weight = std::max(max_h_weight, hb.weight(k));
    std::vector<Monomial> monomials;
    for (auto& m : enumerate_monomials(hb, h_positions, N)) {
        if (pairing_.uea().weight(m) <= max_h_weight) monomials.push_back(std::move(m));
    }
    auto dual_word = [&](const Monomial& u) {
        std::vector<int> word;
        for (int k : u) word.push_back(dd.dual[k]);
        return uea_.normal_form(word, TruncatedSeries(N, 1));
    };
    std::map<Monomial, UEAElement> dual_monomials;
    for (const auto& u : monomials) dual_monomials.emplace(u, dual_word(u));

    for (const auto& u : monomials) {
        for (const auto& w : monomials) {
            const int length = static_cast<int>(u.size() + w.size());
            if (length < 1 || length > N) continue;
            if (pairing_.uea().weight(u) + pairing_.uea().weight(w) > max_h_weight) continue;
            const UEAElement product = pairing_.uea().multiply(pairing_.symmetrize(w), pairing_.symmetrize(u));
            std::map<int, Rational> linear;
            for (const auto& [key, c] : product.terms()) {
                for (const auto& [v, x] : pairing_.desymmetrize(key[0])) {
                    if (v.size() == 1) linear[v[0]] += c[0] * x;
                }
            }
            const Rational denominator = pairing_.norm(u) * pairing_.norm(w);
            for (const auto& [i, value] : linear) {
                if (sgn(value) == 0) continue;
                UEAElement term = uea_.tensor({dual_monomials.at(u), dual_monomials.at(w)});
                term *= TruncatedSeries::monomial(N, length - 1, value / denominator);
                generator_coproduct_[dd.dual[i]] += term;
            }
        }
    }

    UEAElement r = uea_.from_tensor(classical_r(dd, N));
    r *= TruncatedSeries::monomial(N, 1);
    r_matrix_ = uea_.exp(r);
}

void HopfDouble::set_coproduct_generator(int g, UEAElement value) {
    generator_coproduct_.at(g) = std::move(value);
    coproduct_cache_.clear();
}

const UEAElement& HopfDouble::monomial_coproduct(const Monomial& m) const {
    if (const auto it = coproduct_cache_.find(m); it != coproduct_cache_.end()) return it->second;
    UEAElement value = m.empty() ? uea_.one(2)
                                 : uea_.multiply(monomial_coproduct(Monomial(m.begin(), m.end() - 1)),
                                                 generator_coproduct_.at(m.back()));
    return coproduct_cache_.emplace(m, std::move(value)).first->second;
}

UEAElement HopfDouble::coproduct(const UEAElement& value, int slot) const {
    const int k = value.arity();
    UEAElement out(k + 1, order());
    for (const auto& [key, c] : value.terms()) {
        for (const auto& [k2, c2] : monomial_coproduct(key.at(slot)).terms()) {
            UEAElement::Key key2;
            for (int s = 0; s < k; ++s) {
                if (s == slot) {
                    key2.push_back(k2[0]);
                    key2.push_back(k2[1]);
                } else {
                    key2.push_back(key[s]);
                }
            }
            if (uea_.max_weight() && uea_.weight(key2) > *uea_.max_weight()) continue;
            out.add(key2, c * c2);
        }
    }
    return out;
}

const UEAElement& HopfDouble::monomial_antipode(const Monomial& m) const {
    if (const auto it = antipode_cache_.find(m); it != antipode_cache_.end()) return it->second;
    // S(g_1...g_k) = (-1)^{sum_{i<j}|g_i||g_j|} S(g_k)...S(g_1), S(g) = -g.
    int exponent = static_cast<int>(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) exponent += uea_.basis().parity(m[i]) * uea_.basis().parity(m[j]);
    }
    const std::vector<int> word(m.rbegin(), m.rend());
    UEAElement value = uea_.normal_form(word, TruncatedSeries(order(), sign_of_parity(exponent)));
    return antipode_cache_.emplace(m, std::move(value)).first->second;
}

UEAElement HopfDouble::antipode(const UEAElement& value, int slot) const {
    UEAElement out(value.arity(), order());
    for (const auto& [key, c] : value.terms()) {
        for (const auto& [k2, c2] : monomial_antipode(key.at(slot)).terms()) {
            UEAElement::Key key2 = key;
            key2[slot] = k2[0];
            out.add(key2, c * c2);
        }
    }
    return out;
}

UEAElement HopfDouble::counit(const UEAElement& value) const {
    UEAElement out(1, order());
    const UEAElement::Key unit{Monomial{}};
    out.add(unit, value.coefficient(unit));
    return out;
}

UEAElement HopfDouble::cross_relation(int dual_generator, int h_generator) const {
    const UEAElement first = coproduct_generator(dual_generator).hbar_component(1);
    const auto& B = uea_.basis();
    const Monomial ti{dd_.dual.at(h_generator)};
    UEAElement out(1, order());
    for (int k = 0; k < dd_.dim_h(); ++k) {
        const Monomial tk{dd_.dual[k]};
        Rational value = first.coefficient({tk, ti})[0];
        const Rational swapped = first.coefficient({ti, tk})[0];
        value -= swapped * sign_of_parity(B.parity(dd_.h[h_generator]) * B.parity(dd_.h[k]));
        out.add(UEAElement::Key{tk}, value);
    }
    return out;
}

UEAElement HopfDouble::casimir() const { return dbl::casimir(uea_, dd_); }

UEAElement HopfDouble::ribbon() const {
    UEAElement exponent = casimir();
    exponent *= TruncatedSeries::monomial(order(), 1, -1);
    return uea_.exp(exponent);
}

UEAElement HopfDouble::drinfeld_u() const { return uea_.multiply_slots(antipode(r_matrix_, 0)); }

Report check_dual_coproduct(const HopfDouble& A) {
    Report report;
    const auto& dd = A.data();
    const Uea& U = A.uea();
    const auto& B = U.basis();
    const int N = A.order();
    const DualPairing& P = A.pairing();
    const GradedBasis& hb = P.uea().basis();

    UEAElement residual0(2, N);
    UEAElement residual1(2, N);
    for (int i = 0; i < dd.dim_h(); ++i) {
        const int ti = dd.dual[i];
        const UEAElement& delta = A.coproduct_generator(ti);
        UEAElement expected0 = U.tensor({U.generator(ti), U.one()}) + U.tensor({U.one(), U.generator(ti)});
        residual0 += delta.hbar_component(0) - expected0;
        // -1/2 sum_{j,k} (-1)^{|x_j||x_k|} f_{jk}^i t^j (x) t^k
        UEAElement expected1(2, N);
        for (int j = 0; j < dd.dim_h(); ++j) {
            for (int k = 0; k < dd.dim_h(); ++k) {
                const Rational f = dd.algebra.structure_constant(dd.h[j], dd.h[k], dd.h[i]);
                if (sgn(f) == 0) continue;
                const Rational coef = -f / 2 * sign_of_parity(B.parity(dd.h[j]) * B.parity(dd.h[k]));
                expected1 += U.tensor({U.generator(dd.dual[j]), U.generator(dd.dual[k])}) * coef;
            }
        }
        residual1 += delta.hbar_component(1) - expected1;
    }
    report.add("coproduct_order0", residual0.is_zero(), describe_residual(U, residual0));
    report.add("coproduct_order1_closed_form", residual1.is_zero(), describe_residual(U, residual1));

    // (a (x) b, Delta T^i) = (-1)^{|a||b|} (b a, T^i) for PBW monomials of U(h).
    std::vector<int> h_positions(dd.dim_h());
    std::iota(h_positions.begin(), h_positions.end(), 0);
    const int sample_length = std::min(3, N);
    const auto samples = enumerate_monomials(hb, h_positions, sample_length);
    auto t_weight = [&](const Monomial& m) {
        int w = 0;
        for (int k : m) w += B.weight(dd.dual[k]);
        return w;
    };
    // PBW dual monomial of U(d) -> (sign, sorted h positions).
    auto to_h_positions = [&](const Monomial& m) {
        Monomial positions;
        for (int g : m) positions.push_back(dd.paired_h(g));
        return sort_with_sign(positions, hb);
    };
    std::string definition_failure;
    int definition_checked = 0;
    for (const auto& a : samples) {
        for (const auto& b : samples) {
            if (a.size() + b.size() > static_cast<std::size_t>(sample_length) || a.size() + b.size() == 0) continue;
            if (U.max_weight() && t_weight(a) + t_weight(b) > *U.max_weight()) continue;
            const UEAElement ba = P.uea().multiply(P.uea().normal_form(b, TruncatedSeries(1, 1)),
                                                   P.uea().normal_form(a, TruncatedSeries(1, 1)));
            const int ab_sign = sign_of_parity(P.uea().parity(a) * P.uea().parity(b));
            for (int i = 0; i < dd.dim_h() && definition_failure.empty(); ++i) {
                Rational rhs = 0;
                for (const auto& [key, c] : ba.terms()) rhs += c[0] * P.pair(key[0], Monomial{i});
                rhs *= ab_sign;
                TruncatedSeries lhs(N);
                bool bad_power = false;
                for (const auto& [key, c] : A.coproduct_generator(dd.dual[i]).terms()) {
                    const auto [s1, u] = to_h_positions(key[0]);
                    const auto [s2, w] = to_h_positions(key[1]);
                    const Rational pa = P.pair(a, u);
                    const Rational pb = P.pair(b, w);
                    if (sgn(pa) == 0 || sgn(pb) == 0) continue;
                    // T^u (x) T^w carries hbar^{|u|+|w|}; Delta(T^i) = hbar Delta(t^i).
                    const int power = static_cast<int>(u.size() + w.size()) - 1;
                    for (int k = 0; k < N; ++k) {
                        if (sgn(c[k]) == 0) continue;
                        if (k != power) {
                            bad_power = true;
                            continue;
                        }
                        const int sign = s1 * s2 * sign_of_parity(P.uea().parity(b) * P.uea().parity(u));
                        lhs.add(0, c[k] * pa * pb * sign);
                    }
                }
                ++definition_checked;
                if (bad_power || lhs[0] != rhs) {
                    definition_failure = "(" + to_string(lhs[0]) + " vs " + to_string(rhs) + ") at T^" + hb[i].name;
                }
            }
        }
    }
    report.add("coproduct_pairing_definition", definition_failure.empty(),
               definition_failure.empty() ? std::to_string(definition_checked) + " samples" : definition_failure);

    // (a, f g) = (Delta0 a, f (x) g).
    std::string product_failure;
    for (const auto& a : samples) {
        if (a.empty()) continue;
        const UEAElement delta = P.uea().coproduct0(P.uea().normal_form(a, TruncatedSeries(1, 1)));
        for (const auto& f : samples) {
            for (const auto& g : samples) {
                if (f.size() + g.size() != a.size() || !product_failure.empty()) continue;
                Monomial fg = f;
                fg.insert(fg.end(), g.begin(), g.end());
                const auto [sign, v] = sort_with_sign(fg, hb);
                const Rational lhs = sign == 0 ? Rational(0) : P.pair(a, v) * sign;
                Rational rhs = 0;
                for (const auto& [key, c] : delta.terms()) {
                    rhs += c[0] * P.pair(key[0], f) * P.pair(key[1], g) *
                           sign_of_parity(P.uea().parity(key[1]) * P.uea().parity(f));
                }
                if (lhs != rhs) product_failure = "a=" + std::to_string(a.size()) + "-fold: " + to_string(lhs - rhs);
            }
        }
    }
    report.add("pairing_product_rule", product_failure.empty(), product_failure.empty() ? "0" : product_failure);

    // Block nondegeneracy: PBW monomials against T-monomials of equal weight and length.
    std::map<std::pair<int, std::size_t>, std::vector<Monomial>> blocks;
    for (const auto& m : enumerate_monomials(hb, h_positions, N)) {
        if (U.max_weight() && t_weight(m) > *U.max_weight()) continue;
        blocks[{P.uea().weight(m), m.size()}].push_back(m);
    }
    std::string degenerate;
    for (const auto& [block, members] : blocks) {
        std::vector<SparseRow> rows;
        for (const auto& a : members) {
            SparseRow row;
            for (std::size_t c = 0; c < members.size(); ++c) {
                const Rational p = P.pair(a, members[c]);
                if (sgn(p) != 0) row.emplace_back(static_cast<int>(c), p);
            }
            rows.push_back(std::move(row));
        }
        if (rank_of(rows) != static_cast<int>(members.size())) {
            degenerate = "weight " + std::to_string(block.first) + " length " + std::to_string(block.second);
            break;
        }
    }
    report.add("pairing_nondegenerate", degenerate.empty(),
               degenerate.empty() ? std::to_string(blocks.size()) + " blocks" : degenerate);
    return report;
}

Report check_cross_relations(const HopfDouble& A) {
    Report report;
    const auto& dd = A.data();
    const Uea& U = A.uea();
    UEAElement residual(1, A.order());
    for (int j = 0; j < dd.dim_h(); ++j) {
        for (int i = 0; i < dd.dim_h(); ++i) {
            const UEAElement expected = U.element(dd.algebra.bracket(dd.dual[j], dd.h[i]));
            residual += A.cross_relation(dd.dual[j], i) - expected;
        }
    }
    report.add("cross_relations", residual.is_zero(), describe_residual(U, residual));
    return report;
}

Report verify_hopf_axioms(const HopfDouble& A) {
    Report report;
    const Uea& U = A.uea();
    const int n = U.basis().size();
    const int N = A.order();

    UEAElement coassoc(3, N), counit_left(1, N), counit_right(1, N), antipode_left(1, N), antipode_right(1, N);
    UEAElement involutive(1, N), quasi(2, N), homomorphism(2, N);
    for (int g = 0; g < n; ++g) {
        const UEAElement x = U.generator(g);
        const UEAElement& delta = A.coproduct_generator(g);
        coassoc += A.coproduct(delta, 0) - A.coproduct(delta, 1);
        counit_left += A.counit_slot(delta, 0) - x;
        counit_right += A.counit_slot(delta, 1) - x;
        antipode_left += U.multiply_slots(A.antipode(delta, 0));
        antipode_right += U.multiply_slots(A.antipode(delta, 1));
        involutive += A.antipode(A.antipode(x)) - x;
        quasi += U.multiply(A.r_matrix(), delta) - U.multiply(U.flip(delta), A.r_matrix());
        for (int h = g; h < n; ++h) {
            const UEAElement bracket = U.element(U.algebra().bracket(g, h));
            homomorphism += A.coproduct(bracket) - U.commutator(delta, A.coproduct_generator(h));
        }
    }
    add_equality(report, "coassociative", U, coassoc, UEAElement(3, N));
    add_equality(report, "counit_left", U, counit_left, UEAElement(1, N));
    add_equality(report, "counit_right", U, counit_right, UEAElement(1, N));
    add_equality(report, "antipode_left", U, antipode_left, UEAElement(1, N));
    add_equality(report, "antipode_right", U, antipode_right, UEAElement(1, N));
    add_equality(report, "antipode_involutive", U, involutive, UEAElement(1, N));
    add_equality(report, "coproduct_respects_brackets", U, homomorphism, UEAElement(2, N));
    add_equality(report, "quasi_cocommutative", U, quasi, UEAElement(2, N));

    const UEAElement& R = A.r_matrix();
    const UEAElement R12 = U.embed(R, {0, 1}, 3);
    const UEAElement R13 = U.embed(R, {0, 2}, 3);
    const UEAElement R23 = U.embed(R, {1, 2}, 3);
    add_equality(report, "hexagon_left", U, A.coproduct(R, 0), U.multiply(R13, R23));
    add_equality(report, "hexagon_right", U, A.coproduct(R, 1), U.multiply(R13, R12));
    add_equality(report, "quantum_yang_baxter", U, U.multiply({R12, R13, R23}), U.multiply({R23, R13, R12}));

    // R is the canonical element sum_u sym(y^u) (x) T^u / d_u.
    const auto& dd = A.data();
    const DualPairing& P = A.pairing();
    std::vector<int> h_positions(dd.dim_h());
    std::iota(h_positions.begin(), h_positions.end(), 0);
    UEAElement canonical(2, N);
    for (const auto& u : enumerate_monomials(P.uea().basis(), h_positions, N - 1)) {
        UEAElement left(1, N);
        for (const auto& [key, c] : P.symmetrize(u).terms()) left.add(key, c[0]);
        std::vector<int> word;
        for (int k : u) word.push_back(dd.dual[k]);
        const UEAElement right = U.normal_form(
            word, TruncatedSeries::monomial(N, static_cast<int>(u.size()), 1 / P.norm(u)));
        canonical += U.tensor({left, right});
    }
    add_equality(report, "r_canonical_element", U, R, canonical);

    UEAElement r_first = R.hbar_component(1);
    UEAElement r_expected = U.from_tensor(classical_r(dd, N));
    add_equality(report, "r_first_order", U, r_first, r_expected);
    return report;
}

Report verify_ribbon(const HopfDouble& A) {
    Report report;
    const Uea& U = A.uea();
    const int N = A.order();
    const UEAElement theta = A.ribbon();

    UEAElement central(1, N);
    for (int g = 0; g < U.basis().size(); ++g) central += U.commutator(theta, U.generator(g));
    add_equality(report, "theta_central", U, central, UEAElement(1, N));
    add_equality(report, "theta_antipode", U, A.antipode(theta), theta);
    add_equality(report, "theta_counit", U, A.counit(theta), U.one());

    const UEAElement u = A.drinfeld_u();
    add_equality(report, "theta_squared", U, U.multiply(theta, theta), U.multiply(u, A.antipode(u)));

    const UEAElement theta_inverse = U.inverse(theta);
    const UEAElement lhs = U.multiply(A.coproduct(theta), U.tensor({theta_inverse, theta_inverse}));
    const UEAElement& R = A.r_matrix();
    const UEAElement rhs = U.multiply(U.inverse(R), U.inverse(U.flip(R)));
    add_equality(report, "theta_coproduct", U, lhs, rhs);
    return report;
}

}  // namespace dbl
