#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dbl/check.hpp"
#include "dbl/lie.hpp"
#include "dbl/uea.hpp"

namespace dbl {

// Polynomial in the generators T^k = hbar t^k of S(h*), keyed by sorted h positions.
using DualPolynomial = std::map<Monomial, Rational>;

// Pairing between U(h) and S(h*) through the total symmetrization map, with
// (h_a, T^b) = delta_a^b and (a, f g) = (Delta0 a, f (x) g).
class DualPairing {
  public:
    explicit DualPairing(const DoubleData& dd);

    const Uea& uea() const { return uea_; }
    int dim() const { return uea_.basis().size(); }

    // sym(y^u) in PBW form; u is a sorted list of h positions.
    const UEAElement& symmetrize(const Monomial& u) const;
    // (sym(y^u), T^u): the only nonzero pairing of sym(y^u) with a T-monomial.
    Rational norm(const Monomial& u) const;
    // Coordinates of a PBW monomial of U(h) in the basis sym(y^u).
    const std::map<Monomial, Rational>& desymmetrize(const Monomial& pbw) const;

    TruncatedSeries pair(const UEAElement& a, const DualPolynomial& f) const;
    Rational pair(const Monomial& pbw, const Monomial& dual) const;

  private:
    Uea uea_;
    mutable std::map<Monomial, UEAElement> sym_cache_;
    mutable std::map<Monomial, Rational> norm_cache_;
    mutable std::map<Monomial, std::map<Monomial, Rational>> desym_cache_;
};

// Sorted monomials in the given generators of length at most max_length, odd ones at most once.
std::vector<Monomial> enumerate_monomials(const GradedBasis& basis, const std::vector<int>& generators, int max_length);

// U(d)[[hbar]] with the coproduct dual to U(h)^op, S = -1 on generators and R = exp(hbar r).
class HopfDouble {
  public:
    HopfDouble(const DoubleData& dd, int order, std::optional<int> max_weight);

    const DoubleData& data() const { return dd_; }
    const Uea& uea() const { return uea_; }
    int order() const { return uea_.order(); }
    const DualPairing& pairing() const { return pairing_; }

    const UEAElement& coproduct_generator(int g) const { return generator_coproduct_.at(g); }
    // Replaces the coproduct of a generator; used to inject faults.
    void set_coproduct_generator(int g, UEAElement value);

    UEAElement coproduct(const UEAElement& value, int slot = 0) const;
    UEAElement antipode(const UEAElement& value, int slot = 0) const;
    UEAElement counit(const UEAElement& value) const;  // arity 1 to scalars
    UEAElement counit_slot(const UEAElement& value, int slot) const { return uea_.counit_slot(value, slot); }

    const UEAElement& r_matrix() const { return r_matrix_; }
    // [t^j, x_i] read off the first-order coproduct of t^j.
    UEAElement cross_relation(int dual_generator, int h_generator) const;

    UEAElement casimir() const;
    UEAElement ribbon() const;  // exp(-hbar C)
    UEAElement drinfeld_u() const;  // mult (S (x) 1)(R)

  private:
    const UEAElement& monomial_coproduct(const Monomial& m) const;
    const UEAElement& monomial_antipode(const Monomial& m) const;

    DoubleData dd_;
    Uea uea_;
    DualPairing pairing_;
    std::vector<UEAElement> generator_coproduct_;
    UEAElement r_matrix_;
    mutable std::map<Monomial, UEAElement> coproduct_cache_;
    mutable std::map<Monomial, UEAElement> antipode_cache_;
};

// First-order closed form from the BCH series, the defining pairing identity
// on PBW samples, both Hopf-pairing identities and block nondegeneracy.
Report check_dual_coproduct(const HopfDouble& A);
Report check_cross_relations(const HopfDouble& A);
Report verify_hopf_axioms(const HopfDouble& A);
Report verify_ribbon(const HopfDouble& A);

}  // namespace dbl
