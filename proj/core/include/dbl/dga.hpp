#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbl/check.hpp"
#include "dbl/complex.hpp"
#include "dbl/graded.hpp"
#include "dbl/lie.hpp"
#include "dbl/uea.hpp"

namespace dbl {

// Graded-commutative polynomial: sorted generator indices (odd ones at most once) -> coefficient.
using Polynomial = std::map<Monomial, Rational>;

void accumulate(Polynomial& target, const Polynomial& source, const Rational& scale = 1);
std::string to_string(const Polynomial& value, const GradedBasis& generators);

// Free graded-commutative algebra with a derivation d and a g-action by
// even derivations, both given on generators.
class CommutativeDGA {
  public:
    CommutativeDGA() = default;
    explicit CommutativeDGA(GradedBasis generators, int action_count = 0);

    const GradedBasis& generators() const { return generators_; }
    int size() const { return generators_.size(); }
    int action_count() const { return static_cast<int>(actions_.size()); }

    void set_differential(int g, Polynomial value) { differential_.at(g) = std::move(value); }
    const Polynomial& differential(int g) const { return differential_.at(g); }
    void set_action(int a, int g, Polynomial value) { actions_.at(a).at(g) = std::move(value); }
    const Polynomial& action(int a, int g) const { return actions_.at(a).at(g); }

    // Declares a central even generator h with h^order = 0.
    void set_hbar(int g, int order);
    const std::optional<std::pair<int, int>>& hbar() const { return hbar_; }

    Polynomial generator(int g) const { return {{Monomial{g}, Rational(1)}}; }
    int degree(const Monomial& m) const;
    int weight(const Monomial& m) const;
    int parity(const Monomial& m) const;

    // Product of monomials with the Koszul sign; 0 when an odd generator repeats.
    std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
    Polynomial d(const Polynomial& p) const;
    Polynomial act(int a, const Polynomial& p) const;

    // All monomials of the given weight; throws std::domain_error when an even
    // generator has weight <= 0 or any generator has negative weight.
    std::vector<Monomial> monomials(int weight) const;

  private:
    Polynomial apply_derivation(const Monomial& m, const std::vector<Polynomial>& images, bool odd) const;

    GradedBasis generators_;
    std::vector<Polynomial> differential_;
    std::vector<std::vector<Polynomial>> actions_;
    std::optional<std::pair<int, int>> hbar_;
};

// Generators v_i, v*_i (degree 0, weight 1), c_a (degree -1, weight 2) with
// dc_a = sum_{i,j} M_a[i][j] v_i v*_j and the induced g-action.
CommutativeDGA build_moment_dga(const LieAlgebraData& g, const RepresentationData& rho);

// Sym(L*[-1]): xi^e of degree 1 - |e| and weight wt(e), d dual to the bracket.
CommutativeDGA build_ce(const LieAlgebraData& algebra);
// CE(d+) with the coadjoint g-action.  With an order N, a last generator hbar
// (degree -2, weight +2 on this side of the duality) with hbar^N = 0 is appended.
CommutativeDGA build_ce_positive(const DoubleData& dd, std::optional<int> hbar_order = std::nullopt);

// The algebra map sending generator g to images[g], applied to p.
Polynomial substitute(const CommutativeDGA& target, const Polynomial& p, const std::vector<Polynomial>& images);

// Image of each CE(d+) generator in the moment DGA:
// xi^{psi+i} -> -v*_i, xi^{psi-i} -> -v_i, xi^{t_a} -> c_a.
std::vector<Polynomial> ce_dictionary(const DoubleData& dd);

// d^2 = 0, degree +1 and weight 0 on generators, and equivariance.
Report check_dga(const CommutativeDGA& algebra, const std::string& prefix = {});
Report check_moment_equals_ce(const DoubleData& dd);

struct CohomologyReport {
    std::map<std::pair<int, int>, int> dimensions;  // (degree, weight)
    std::map<std::pair<int, int>, int> invariants;
    std::map<std::pair<int, int>, int> cochains;
};

// The weight component as a complex graded by degree, with the g-action when requested.
FiniteComplex weight_complex(const CommutativeDGA& algebra, int weight, bool with_actions);
CohomologyReport cohomology(const CommutativeDGA& algebra, std::pair<int, int> weights, std::pair<int, int> degrees,
                            bool with_invariants = false);
int invariants(const CommutativeDGA& algebra, int weight, int degree);
// sum_k (-1)^k dim C^k = sum_k (-1)^k dim H^k over every degree of the block.
Report check_euler_characteristic(const CommutativeDGA& algebra, int max_weight);

// Polynomial map f: Q^n -> Q^m, components homogeneous in variables of weight 1.
struct FiberMap {
    int source_dim = 0;
    std::vector<Polynomial> components;
    std::vector<std::string> source_names;
};

// CE(l) for l = C[f^{-1}(0)] (x) (V[-1] + W[-2]): generators v, eta (d eta = f(v)),
// fiber coordinates delta and odd w* with D w* = f(v + delta) - f(v).
struct FiberLinfty {
    CommutativeDGA algebra;
    int source_dim = 0;
    int target_dim = 0;
    // brackets[n][K]: the part of D w*_K of degree n in delta, i.e. nabla^n f_K / n!.
    std::vector<std::vector<Polynomial>> brackets;

    int v(int i) const { return i; }
    int eta(int k) const { return source_dim + k; }
    int delta(int i) const { return source_dim + target_dim + i; }
    int w_star(int k) const { return 2 * source_dim + target_dim + k; }
    int top_arity() const;
};

FiberLinfty build_fiber_linfty(const FiberMap& f);
FiberMap moment_fiber_map(const LieAlgebraData& g, const RepresentationData& rho);
// D^2 = 0 on every monomial of weight <= max_weight.
Report check_fiber_linfty(const FiberLinfty& l, int max_weight, const std::string& prefix = {});
// At v = 0 the brackets of the moment fiber map reproduce dc_a of the moment DGA.
Report check_fiber_cone_point(const FiberLinfty& l, const CommutativeDGA& moment);

}  // namespace dbl
