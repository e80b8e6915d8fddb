#include "dbl/uea.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbl {

UEAElement::UEAElement(int arity, int order) : arity_(arity), order_(order) {
    if (arity < 1) throw std::invalid_argument("UEA element arity must be at least 1");
    if (order < 1) throw std::invalid_argument("truncation order must be positive");
}

void UEAElement::add(const Key& key, const TruncatedSeries& value) {
    if (static_cast<int>(key.size()) != arity_) throw std::invalid_argument("UEA key arity mismatch");
    if (value.order() != order_) throw std::invalid_argument("series order mismatch");
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void UEAElement::add(const Key& key, const Rational& value) { add(key, TruncatedSeries(order_, value)); }

TruncatedSeries UEAElement::coefficient(const Key& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? TruncatedSeries(order_) : it->second;
}

void UEAElement::require_same_shape(const UEAElement& other) const {
    if (other.arity_ != arity_ || other.order_ != order_) throw std::invalid_argument("UEA element shape mismatch");
}

UEAElement& UEAElement::operator+=(const UEAElement& other) {
    require_same_shape(other);
    for (const auto& [key, value] : other.terms_) add(key, value);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& other) {
    require_same_shape(other);
    for (const auto& [key, value] : other.terms_) add(key, -value);
    return *this;
}

UEAElement& UEAElement::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, value] : terms_) value *= scalar;
    return *this;
}

UEAElement& UEAElement::operator*=(const TruncatedSeries& scalar) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= scalar;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

int UEAElement::valuation() const {
    int v = order_;
    for (const auto& [key, value] : terms_) v = std::min(v, value.valuation());
    return v;
}

UEAElement UEAElement::truncated(int power) const {
    UEAElement out(arity_, order_);
    for (const auto& [key, value] : terms_) {
        TruncatedSeries s = value;
        for (int k = power; k < order_; ++k) s.set(k, 0);
        out.add(key, s);
    }
    return out;
}

UEAElement UEAElement::hbar_component(int power) const {
    UEAElement out(arity_, order_);
    for (const auto& [key, value] : terms_) out.add(key, value[power]);
    return out;
}

std::string UEAElement::to_string(const GradedBasis& basis) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, value] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + value.to_string() + ") ";
        for (int s = 0; s < arity_; ++s) {
            if (s > 0) out += "|";
            if (key[s].empty()) out += "1";
            for (std::size_t i = 0; i < key[s].size(); ++i) {
                if (i > 0) out += "*";
                out += basis[key[s][i]].name;
            }
        }
    }
    return out;
}

Uea::Uea(LieAlgebraData algebra, int order, std::optional<int> max_weight)
    : algebra_(std::make_shared<const LieAlgebraData>(std::move(algebra))), order_(order), max_weight_(max_weight) {
    if (order < 1) throw std::invalid_argument("truncation order must be positive");
}

int Uea::parity(const Monomial& m) const {
    int p = 0;
    for (int g : m) p += basis().parity(g);
    return p % 2;
}

int Uea::degree(const Monomial& m) const {
    int d = 0;
    for (int g : m) d += basis().degree(g);
    return d;
}

int Uea::weight(const Monomial& m) const {
    int w = 0;
    for (int g : m) w += basis().weight(g);
    return w;
}

int Uea::parity(const UEAElement::Key& key) const {
    int p = 0;
    for (const auto& m : key) p += parity(m);
    return p % 2;
}

int Uea::weight(const UEAElement::Key& key) const {
    int w = 0;
    for (const auto& m : key) w += weight(m);
    return w;
}

UEAElement Uea::one(int arity) const { return scalar(TruncatedSeries(order_, 1), arity); }

UEAElement Uea::scalar(const TruncatedSeries& value, int arity) const {
    UEAElement out(arity, order_);
    out.add(UEAElement::Key(arity), value);
    return out;
}

UEAElement Uea::generator(int index) const {
    if (index < 0 || index >= basis().size()) throw std::invalid_argument("generator index out of range");
    UEAElement out(1, order_);
    if (!pruned(basis().weight(index))) out.add(Monomial{index}, TruncatedSeries(order_, 1));
    return out;
}

UEAElement Uea::element(const LinearCombination& value) const {
    UEAElement out(1, order_);
    for (const auto& [i, c] : value) {
        if (!pruned(basis().weight(i))) out.add(UEAElement::Key{{i}}, c);
    }
    return out;
}

UEAElement Uea::tensor(const std::vector<UEAElement>& factors) const {
    if (factors.empty()) throw std::invalid_argument("tensor of no factors");
    UEAElement out(static_cast<int>(factors.size()), order_);
    // Keys are built slot by slot; the result is a plain outer product since
    // a_1 (x) ... (x) a_k carries no sign.
    std::vector<std::pair<UEAElement::Key, TruncatedSeries>> partial{{{}, TruncatedSeries(order_, 1)}};
    for (const auto& f : factors) {
        if (f.arity() != 1) throw std::invalid_argument("tensor factors must have arity 1");
        std::vector<std::pair<UEAElement::Key, TruncatedSeries>> next;
        for (const auto& [key, coef] : partial) {
            for (const auto& [fk, fc] : f.terms()) {
                auto k = key;
                k.push_back(fk[0]);
                next.emplace_back(std::move(k), coef * fc);
            }
        }
        partial = std::move(next);
    }
    for (const auto& [key, coef] : partial) {
        if (!pruned(weight(key))) out.add(key, coef);
    }
    return out;
}

const std::map<Monomial, Rational>& Uea::monomial_times_generator(const Monomial& m, int g) const {
    const auto cache_key = std::make_pair(m, g);
    if (const auto it = generator_cache_.find(cache_key); it != generator_cache_.end()) return it->second;

    std::map<Monomial, Rational> result;
    const auto& L = algebra();
    auto add_to = [&result](const Monomial& key, const Rational& v) {
        auto& slot = result[key];
        slot += v;
        if (sgn(slot) == 0) result.erase(key);
    };
    if (m.empty() || m.back() < g || (m.back() == g && L.parity(g) == 0)) {
        Monomial out = m;
        out.push_back(g);
        result.emplace(std::move(out), 1);
    } else {
        const int h = m.back();
        const Monomial rest(m.begin(), m.end() - 1);
        if (h == g) {
            // odd square: g g = 1/2 [g,g]
            for (const auto& [c, v] : L.bracket(g, g)) {
                for (const auto& [key, w] : monomial_times_generator(rest, c)) add_to(key, w * v / 2);
            }
        } else {
            // h g = (-1)^{|h||g|} g h + [h,g]
            const Rational sign = sign_of_parity(L.parity(h) * L.parity(g));
            const auto first = monomial_times_generator(rest, g);
            for (const auto& [key, w] : first) {
                for (const auto& [key2, w2] : monomial_times_generator(key, h)) add_to(key2, w * w2 * sign);
            }
            for (const auto& [c, v] : L.bracket(h, g)) {
                for (const auto& [key, w] : monomial_times_generator(rest, c)) add_to(key, w * v);
            }
        }
    }
    return generator_cache_.emplace(cache_key, std::move(result)).first->second;
}

const std::map<Monomial, Rational>& Uea::monomial_product(const Monomial& a, const Monomial& b) const {
    const auto cache_key = std::make_pair(a, b);
    if (const auto it = product_cache_.find(cache_key); it != product_cache_.end()) return it->second;
    std::map<Monomial, Rational> current{{a, Rational(1)}};
    for (int g : b) {
        std::map<Monomial, Rational> next;
        for (const auto& [key, v] : current) {
            for (const auto& [key2, w] : monomial_times_generator(key, g)) {
                auto& slot = next[key2];
                slot += v * w;
                if (sgn(slot) == 0) next.erase(key2);
            }
        }
        current = std::move(next);
    }
    return product_cache_.emplace(cache_key, std::move(current)).first->second;
}

UEAElement Uea::normal_form(const std::vector<int>& word, const TruncatedSeries& coefficient) const {
    UEAElement out(1, order_);
    int w = 0;
    for (int g : word) w += basis().weight(g);
    if (pruned(w)) return out;
    std::map<Monomial, Rational> current{{Monomial{}, Rational(1)}};
    for (int g : word) {
        std::map<Monomial, Rational> next;
        for (const auto& [key, v] : current) {
            for (const auto& [key2, x] : monomial_times_generator(key, g)) {
                auto& slot = next[key2];
                slot += v * x;
                if (sgn(slot) == 0) next.erase(key2);
            }
        }
        current = std::move(next);
    }
    for (const auto& [key, v] : current) out.add(UEAElement::Key{key}, coefficient * v);
    return out;
}

UEAElement Uea::multiply(const UEAElement& a, const UEAElement& b) const {
    if (a.arity() != b.arity() || a.order() != order_ || b.order() != order_) {
        throw std::invalid_argument("UEA multiply: shape mismatch");
    }
    const int k = a.arity();
    UEAElement out(k, order_);
    std::vector<int> parity_a(k);
    std::vector<int> parity_b(k);
    for (const auto& [ka, ca] : a.terms()) {
        const int va = ca.valuation();
        for (int s = 0; s < k; ++s) parity_a[s] = parity(ka[s]);
        const int wa = weight(ka);
        for (const auto& [kb, cb] : b.terms()) {
            if (va + cb.valuation() >= order_) continue;
            if (pruned(wa + weight(kb))) continue;
            int exponent = 0;
            for (int s = 0; s < k; ++s) {
                parity_b[s] = parity(kb[s]);
                for (int t = s + 1; t < k; ++t) exponent += parity_a[t] * parity_b[s];
            }
            TruncatedSeries coef = ca * cb;
            if (exponent % 2) coef = -coef;
            if (coef.is_zero()) continue;

            std::vector<std::pair<UEAElement::Key, Rational>> partial{{{}, Rational(1)}};
            for (int s = 0; s < k; ++s) {
                const auto& prod = monomial_product(ka[s], kb[s]);
                std::vector<std::pair<UEAElement::Key, Rational>> next;
                next.reserve(partial.size() * prod.size());
                for (const auto& [key, v] : partial) {
                    for (const auto& [m, w] : prod) {
                        auto key2 = key;
                        key2.push_back(m);
                        next.emplace_back(std::move(key2), v * w);
                    }
                }
                partial = std::move(next);
            }
            for (const auto& [key, v] : partial) out.add(key, coef * v);
        }
    }
    return out;
}

UEAElement Uea::multiply(const std::vector<UEAElement>& factors) const {
    if (factors.empty()) throw std::invalid_argument("product of no factors");
    UEAElement out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = multiply(out, factors[i]);
    return out;
}

UEAElement Uea::commutator(const UEAElement& a, const UEAElement& b) const {
    UEAElement out = multiply(a, b);
    UEAElement a_even(a.arity(), order_), a_odd(a.arity(), order_), b_even(b.arity(), order_), b_odd(b.arity(), order_);
    for (const auto& [key, c] : a.terms()) (parity(key) ? a_odd : a_even).add(key, c);
    for (const auto& [key, c] : b.terms()) (parity(key) ? b_odd : b_even).add(key, c);
    out -= multiply(b, a_even);
    out -= multiply(b_even, a_odd);
    out += multiply(b_odd, a_odd);
    return out;
}

UEAElement Uea::permute(const UEAElement& value, const std::vector<int>& permutation) const {
    const int k = value.arity();
    if (static_cast<int>(permutation.size()) != k) throw std::invalid_argument("permute: arity mismatch");
    UEAElement out(k, order_);
    std::vector<int> degrees(k);
    for (const auto& [key, c] : value.terms()) {
        UEAElement::Key key2(k);
        for (int s = 0; s < k; ++s) {
            degrees[s] = parity(key[s]);
            key2[s] = key[permutation[s]];
        }
        const int sign = koszul_sign(permutation, degrees);
        out.add(key2, sign > 0 ? c : -c);
    }
    return out;
}

UEAElement Uea::embed(const UEAElement& value, const std::vector<int>& positions, int arity) const {
    if (static_cast<int>(positions.size()) != value.arity()) throw std::invalid_argument("embed: arity mismatch");
    UEAElement out(arity, order_);
    for (const auto& [key, c] : value.terms()) {
        UEAElement::Key key2(arity);
        // Slots must stay in their relative order so no Koszul sign arises.
        for (int s = 0; s < value.arity(); ++s) {
            if (s > 0 && positions[s] <= positions[s - 1]) throw std::invalid_argument("embed: positions must increase");
            key2.at(positions[s]) = key[s];
        }
        out.add(key2, c);
    }
    return out;
}

UEAElement Uea::multiply_slots(const UEAElement& value) const {
    if (value.arity() != 2) throw std::invalid_argument("multiply_slots needs arity 2");
    UEAElement out(1, order_);
    for (const auto& [key, c] : value.terms()) {
        for (const auto& [m, v] : monomial_product(key[0], key[1])) out.add(UEAElement::Key{m}, c * v);
    }
    return out;
}

UEAElement Uea::counit_slot(const UEAElement& value, int slot) const {
    if (value.arity() < 2) throw std::invalid_argument("counit_slot needs arity at least 2");
    UEAElement out(value.arity() - 1, order_);
    for (const auto& [key, c] : value.terms()) {
        if (!key.at(slot).empty()) continue;
        UEAElement::Key key2 = key;
        key2.erase(key2.begin() + slot);
        out.add(key2, c);
    }
    return out;
}

UEAElement Uea::coproduct0(const UEAElement& value, int slot) const {
    const int k = value.arity();
    if (slot < 0 || slot >= k) throw std::invalid_argument("coproduct0: slot out of range");
    UEAElement out(k + 1, order_);
    for (const auto& [key, c] : value.terms()) {
        const Monomial& m = key[slot];
        const int n = static_cast<int>(m.size());
        // Each generator goes left or right; a left factor passing earlier right factors gives the sign.
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            Monomial left;
            Monomial right;
            int exponent = 0;
            int right_parity = 0;
            for (int i = 0; i < n; ++i) {
                const int p = basis().parity(m[i]);
                if (mask & (1UL << i)) {
                    right.push_back(m[i]);
                    right_parity += p;
                } else {
                    left.push_back(m[i]);
                    exponent += p * right_parity;
                }
            }
            UEAElement::Key key2;
            for (int s = 0; s < k; ++s) {
                if (s == slot) {
                    key2.push_back(left);
                    key2.push_back(right);
                } else {
                    key2.push_back(key[s]);
                }
            }
            out.add(key2, exponent % 2 ? -c : c);
        }
    }
    return out;
}

UEAElement Uea::exp(const UEAElement& value) const {
    if (!value.is_zero() && value.valuation() < 1) throw std::domain_error("exp needs an hbar-divisible argument");
    UEAElement sum = one(value.arity());
    UEAElement power = one(value.arity());
    for (int k = 1; k < order_; ++k) {
        power = multiply(power, value);
        power *= Rational(1, k);
        if (power.is_zero()) break;
        sum += power;
    }
    return sum;
}

UEAElement Uea::inverse(const UEAElement& value) const {
    UEAElement rest = value - one(value.arity());
    if (!rest.is_zero() && rest.valuation() < 1) {
        throw std::domain_error("inverse needs a value congruent to 1 mod hbar");
    }
    UEAElement minus_rest = rest * Rational(-1);
    UEAElement sum = one(value.arity());
    UEAElement power = one(value.arity());
    for (int k = 1; k < order_; ++k) {
        power = multiply(power, minus_rest);
        if (power.is_zero()) break;
        sum += power;
    }
    return sum;
}

UEAElement Uea::from_tensor(const SparseTensor& value) const {
    if (!(value.basis(0) == basis())) throw std::invalid_argument("from_tensor: basis mismatch");
    UEAElement out(value.arity(), order_);
    for (const auto& [index, c] : value.entries()) {
        UEAElement::Key key;
        for (int i : index) key.push_back(Monomial{i});
        TruncatedSeries s(order_);
        for (int k = 0; k < std::min(order_, c.order()); ++k) s.set(k, c[k]);
        if (!pruned(weight(key))) out.add(key, s);
    }
    return out;
}

UEAElement casimir(const Uea& uea, const DoubleData& dd) {
    UEAElement out(1, uea.order());
    const TruncatedSeries half(uea.order(), Rational(1, 2));
    for (int k = 0; k < dd.dim_h(); ++k) {
        const int h = dd.h[k];
        const int d = dd.dual[k];
        out += uea.normal_form({h, d}, half);
        const TruncatedSeries sign(uea.order(), Rational(sign_of_parity(uea.basis().parity(h)), 2));
        out += uea.normal_form({d, h}, sign);
    }
    return out;
}

Report check_casimir_central(const Uea& uea, const UEAElement& casimir) {
    Report report;
    std::string failures;
    for (int g = 0; g < uea.basis().size(); ++g) {
        const UEAElement c = uea.commutator(casimir, uea.generator(g));
        if (!c.is_zero()) failures += (failures.empty() ? "" : "; ") + uea.basis()[g].name + ": " + c.to_string(uea.basis());
    }
    report.add("casimir_central", failures.empty(), failures.empty() ? "0" : failures);
    return report;
}

UEAElement omega(const Uea& uea, const SparseTensor& r) {
    UEAElement rt = uea.from_tensor(r);
    UEAElement out = rt + uea.flip(rt);
    out *= Rational(1, 2);
    return out;
}

UEAElement omega_from_casimir(const Uea& uea, const UEAElement& casimir) {
    UEAElement out = uea.coproduct0(casimir);
    out -= uea.tensor({casimir, uea.one()});
    out -= uea.tensor({uea.one(), casimir});
    out *= Rational(1, 2);
    return out;
}

Report check_omega_identity(const DoubleData& dd, int order) {
    Report report;
    const Uea uea(dd.algebra, order);
    const SparseTensor r = classical_r(dd, order);
    const UEAElement lhs = omega(uea, r);
    const UEAElement rhs = omega_from_casimir(uea, casimir(uea, dd));
    report.add("omega_identity", lhs == rhs, (lhs - rhs).to_string(uea.basis()));
    return report;
}

}  // namespace dbl
