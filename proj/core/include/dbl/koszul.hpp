#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dbl/check.hpp"
#include "dbl/dga.hpp"
#include "dbl/lie.hpp"
#include "dbl/module.hpp"
#include "dbl/uea.hpp"

namespace dbl {

// (p, q) -> dimension, nonzero entries only.
using BigradedDims = std::map<std::pair<int, int>, int>;

// e . u^dual = sum c u'^dual over all PBW monomials of U(d+) up to a weight,
// where c is the coefficient of u in u' e.
struct DualActionTable {
    int max_weight = -1;
    std::map<int, std::vector<Monomial>> by_weight;
    std::map<Monomial, std::vector<std::tuple<int, Monomial, Rational>>> action;
};

// CE(d+)[hbar]/hbar^N together with U(d+), shared by both functors.  Holds
// memoizing PBW caches, so one instance per thread.
class KoszulContext {
  public:
    KoszulContext(const DoubleData& dd, int order);

    const DoubleData& data() const { return dd_; }
    const PositivePart& positive() const { return positive_; }
    const std::shared_ptr<const CommutativeDGA>& ce() const { return ce_; }
    int order() const { return order_; }
    int hbar() const { return positive_.algebra.dim(); }
    const Uea& positive_uea() const { return uea_; }
    const DualActionTable& dual_table(int max_weight) const;

  private:
    DoubleData dd_;
    PositivePart positive_;
    std::shared_ptr<const CommutativeDGA> ce_;
    int order_;
    Uea uea_;
    mutable std::optional<DualActionTable> table_;
};

// CE(d+) (x) M with D = d_CE + d_M + sum_e xi^e (x) e; generator b has bidegree (deg b, -wt b).
DGModule functor_F(const KoszulContext& context, const FiniteModule& module);

class WindowRefusal : public std::runtime_error {
  public:
    WindowRefusal(const std::string& what, int minimal_weight_cap)
        : std::runtime_error(what), minimal_weight_cap_(minimal_weight_cap) {}
    int minimal_weight_cap() const { return minimal_weight_cap_; }

  private:
    int minimal_weight_cap_;
};

// Smallest weight cap for which every G(N) block with q >= min_q is computed exactly.
int minimal_weight_cap(const DGModule& module, int min_q);

struct KoszulDualBlock {
    FiniteComplex complex;
    // D^2 vanishes on every basis vector; only evaluated on request.
    bool squares_to_zero = true;
};

// Hom(U(d+), N) restricted to the weight-q component, graded by p, with
// D(u^ (x) n) = (-1)^{|u|} u^ (x) D n + sum_e (-1)^{|xi^e||u|} (e . u^) (x) xi^e n.
KoszulDualBlock koszul_dual_block(const KoszulContext& context, const DGModule& module, int q, bool check_square = false);

// H(G(N)) at q in [q_min, q_max]; throws WindowRefusal when weight_cap is too small.
BigradedDims koszul_dual_cohomology(const KoszulContext& context, const DGModule& module, std::pair<int, int> q_range,
                                    int weight_cap);
// H(M) graded by (deg - wt, wt).
BigradedDims module_cohomology(const FiniteModule& module, std::pair<int, int> weight_range);
// H(F(M)) by (p, q).
BigradedDims dg_module_cohomology(const DGModule& module, std::pair<int, int> q_range);

// dim H(G(F(M))) = dim H(M) on |weight| <= max_abs_weight, plus D^2 = 0 on the blocks.
Report check_roundtrip(const KoszulContext& context, const FiniteModule& module, int max_abs_weight, int weight_cap);

// F(M (x) N) and F(M) (x) F(N) on the same generators: residual of the differentials.
Report check_monoidality(const KoszulContext& context, const FiniteModule& left, const FiniteModule& right);
// F(i), F(p) are chain maps, p i = 0, i injective and p surjective mod hbar, generator counts add.
Report check_exactness(const KoszulContext& context, const ModuleMap& inclusion, const ModuleMap& projection,
                       const FiniteModule& sub, const FiniteModule& middle, const FiniteModule& quotient);

// Omega = (r + r^21)/2 and theta = exp(-hbar C) acting through modules.
class BraidingData {
  public:
    BraidingData(const DoubleData& dd, int order);

    int order() const { return order_; }
    SeriesMatrix omega(const FiniteModule& left, const FiniteModule& right) const;
    // (C_{M(x)N} - C_M (x) 1 - 1 (x) C_N)/2.
    SeriesMatrix omega_from_casimir(const FiniteModule& left, const FiniteModule& right) const;
    // tau exp(hbar Omega): M (x) N -> N (x) M.
    SeriesMatrix braiding(const FiniteModule& left, const FiniteModule& right) const;
    SeriesMatrix ribbon(const FiniteModule& module) const;

  private:
    int order_;
    Uea uea_;
    UEAElement omega_;
    UEAElement casimir_;
};

Report check_braiding_pair(const KoszulContext& context, const BraidingData& braiding, const FiniteModule& left,
                           const FiniteModule& right);
// (c(x)1)(1(x)c)(c(x)1) = (1(x)c)(c(x)1)(1(x)c) on M1 (x) M2 (x) M3.
Report check_braid_relation(const BraidingData& braiding, const FiniteModule& first, const FiniteModule& second,
                            const FiniteModule& third);
// The braid defect: zero at order hbar and -P [Omega_13, Omega_23] at order hbar^2.
Report check_braid_defect(const BraidingData& braiding, const FiniteModule& first, const FiniteModule& second,
                          const FiniteModule& third);
// c_{M',N} (f (x) 1) = (1 (x) f) c_{M,N}.
Report check_naturality(const BraidingData& braiding, const ModuleMap& map, const FiniteModule& source,
                        const FiniteModule& target, const FiniteModule& other);
// theta_M commutes with the differential of F(M).
Report check_ribbon_compatibility(const KoszulContext& context, const BraidingData& braiding, const FiniteModule& module);

}  // namespace dbl
