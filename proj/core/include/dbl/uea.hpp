#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbl/check.hpp"
#include "dbl/lie.hpp"
#include "dbl/series.hpp"
#include "dbl/sparse_tensor.hpp"

namespace dbl {

// PBW monomial: nondecreasing basis indices, each odd index at most once.
using Monomial = std::vector<int>;

// Element of U^{(x) arity} with truncated-series coefficients; arity 1 is U itself.
class UEAElement {
  public:
    using Key = std::vector<Monomial>;
    using Terms = std::map<Key, TruncatedSeries>;

    explicit UEAElement(int arity = 1, int order = kDefaultTruncationOrder);

    int arity() const { return arity_; }
    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds to a term; a term that becomes zero is erased.
    void add(const Key& key, const TruncatedSeries& value);
    void add(const Key& key, const Rational& value);
    void add(const Monomial& monomial, const TruncatedSeries& value) { add(Key{monomial}, value); }
    TruncatedSeries coefficient(const Key& key) const;

    UEAElement& operator+=(const UEAElement& other);
    UEAElement& operator-=(const UEAElement& other);
    UEAElement& operator*=(const Rational& scalar);
    UEAElement& operator*=(const TruncatedSeries& scalar);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(UEAElement a, const Rational& s) { return a *= s; }
    friend bool operator==(const UEAElement& a, const UEAElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    // Lowest hbar power present, order() for zero.
    int valuation() const;
    // Drops every coefficient of hbar^k with k >= power.
    UEAElement truncated(int power) const;
    // The hbar^power coefficient as an element with constant coefficients.
    UEAElement hbar_component(int power) const;

    std::string to_string(const GradedBasis& basis) const;

  private:
    void require_same_shape(const UEAElement& other) const;

    int arity_;
    int order_;
    Terms terms_;
};

// U(L)[[hbar]] mod hbar^N with memoized PBW rewriting.  The rewriting cache
// makes an instance unsafe to share between threads.
class Uea {
  public:
    Uea(LieAlgebraData algebra, int order, std::optional<int> max_weight = std::nullopt);

    const LieAlgebraData& algebra() const { return *algebra_; }
    const GradedBasis& basis() const { return algebra_->basis(); }
    int order() const { return order_; }
    const std::optional<int>& max_weight() const { return max_weight_; }

    int parity(const Monomial& m) const;
    int degree(const Monomial& m) const;
    int weight(const Monomial& m) const;
    int parity(const UEAElement::Key& key) const;
    int weight(const UEAElement::Key& key) const;

    UEAElement one(int arity = 1) const;
    UEAElement scalar(const TruncatedSeries& value, int arity = 1) const;
    UEAElement generator(int index) const;
    UEAElement element(const LinearCombination& value) const;
    // a_1 (x) ... (x) a_k of arity-1 elements.
    UEAElement tensor(const std::vector<UEAElement>& factors) const;

    UEAElement normal_form(const std::vector<int>& word, const TruncatedSeries& coefficient) const;
    UEAElement multiply(const UEAElement& a, const UEAElement& b) const;
    UEAElement multiply(const std::vector<UEAElement>& factors) const;
    // Graded commutator, termwise on homogeneous parts.
    UEAElement commutator(const UEAElement& a, const UEAElement& b) const;

    // Product of two PBW monomials with rational coefficients.
    const std::map<Monomial, Rational>& monomial_product(const Monomial& a, const Monomial& b) const;

    // Slot i of the result is slot permutation[i] of the input, with the Koszul sign.
    UEAElement permute(const UEAElement& value, const std::vector<int>& permutation) const;
    UEAElement flip(const UEAElement& value) const { return permute(value, {1, 0}); }
    // Slot j of value goes to slot positions[j] of an arity-`arity` tensor; the others are 1.
    UEAElement embed(const UEAElement& value, const std::vector<int>& positions, int arity) const;
    // Slot-wise product of an arity-2 element: a (x) b -> a b.
    UEAElement multiply_slots(const UEAElement& value) const;
    // Applies the counit (1 on the empty monomial, 0 otherwise) to one slot.
    UEAElement counit_slot(const UEAElement& value, int slot) const;

    // Standard coproduct: generators primitive, applied to one slot.
    UEAElement coproduct0(const UEAElement& value, int slot = 0) const;

    // Sum_{k<N} value^k / k!; value must be divisible by hbar.
    UEAElement exp(const UEAElement& value) const;
    // Inverse of a value with invertible constant part 1 + (hbar-divisible).
    UEAElement inverse(const UEAElement& value) const;

    // Lie-algebra tensor as a tensor of degree-one monomials.
    UEAElement from_tensor(const SparseTensor& value) const;

  private:
    bool pruned(int weight) const { return max_weight_ && weight > *max_weight_; }
    const std::map<Monomial, Rational>& monomial_times_generator(const Monomial& m, int g) const;

    std::shared_ptr<const LieAlgebraData> algebra_;
    int order_;
    std::optional<int> max_weight_;
    mutable std::map<std::pair<Monomial, int>, std::map<Monomial, Rational>> generator_cache_;
    mutable std::map<std::pair<Monomial, Monomial>, std::map<Monomial, Rational>> product_cache_;
};

// C = 1/2 sum_k (h_k dual_k + (-1)^{|h_k|} dual_k h_k) in PBW normal form.
UEAElement casimir(const Uea& uea, const DoubleData& dd);
Report check_casimir_central(const Uea& uea, const UEAElement& casimir);

// 1/2 (r + r^21) as a tensor of generators.
UEAElement omega(const Uea& uea, const SparseTensor& r);
// 1/2 (Delta0(C) - C (x) 1 - 1 (x) C); equal to omega(r) by the identity.
UEAElement omega_from_casimir(const Uea& uea, const UEAElement& casimir);
Report check_omega_identity(const DoubleData& dd, int order = 1);

}  // namespace dbl
