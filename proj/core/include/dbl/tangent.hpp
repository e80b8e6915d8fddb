#pragma once

#include <optional>
#include <string>

#include "dbl/check.hpp"
#include "dbl/dga.hpp"
#include "dbl/koszul.hpp"
#include "dbl/lie.hpp"
#include "dbl/module.hpp"

namespace dbl {

// A (x) L for a CommutativeDGA A and a graded Lie algebra L with constant
// structure constants; the differential lives on the carrier.
struct DGLieStructure {
    DGModule carrier;
    LieAlgebraData bracket;
    std::optional<BilinearFormData> form;
};

// [f a, g b] = (-1)^{|a||g|} f g [a, b].
ModuleVector bracket(const DGLieStructure& lie, const ModuleVector& left, const ModuleVector& right);
// omega(f a, g b) = (-1)^{|a||g|} f g kappa(a, b).
Polynomial pairing(const DGLieStructure& lie, const ModuleVector& left, const ModuleVector& right);

// C[V] (x) h with dx_a = sum_{i,j} rho(x_a)[i][j] v*_j psi+i and dpsi+ = 0.
DGLieStructure build_tangent_quotient(const LieAlgebraData& g, const RepresentationData& rho);
// The moment DGA (x) d with
//   dx_b   = sum rho(x_b)[j][i] v*_i psi+j - sum rho(x_b)[i][j] v_i psi-j + sum f_bc^a c_a t_c,
//   dpsi-i = sum rho(x_a)[i][j] v*_j t_a,   dpsi+i = sum rho(x_a)[j][i] v_j t_a,   dt = 0,
// and omega = kappa.
DGLieStructure build_tangent_lie_M(const DoubleData& dd);

// d^2 = 0, bidegree, Jacobi, d a derivation of the bracket, and d-compatibility
// plus invariance of the form when present.
Report check_dg_lie(const DGLieStructure& lie, const std::string& prefix = {});
// F(adjoint) transported along CE(d+) = moment DGA has the differential and
// g-action of l_M, generator by generator.
Report check_tangent_equals_F_adjoint(const KoszulContext& context, const DGLieStructure& lie_m);

}  // namespace dbl
