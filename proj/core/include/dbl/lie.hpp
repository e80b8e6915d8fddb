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
#include "dbl/graded.hpp"
#include "dbl/rational.hpp"
#include "dbl/sparse_tensor.hpp"

namespace dbl {

// Sorted by index, no zero coefficients.
using LinearCombination = std::vector<std::pair<int, Rational>>;

void accumulate(LinearCombination& target, const LinearCombination& source, const Rational& scale);
std::string to_string(const LinearCombination& value, const GradedBasis& basis);

enum class Role { generic, g, psi_plus, psi_minus, dual_g };

class LieAlgebraData {
  public:
    LieAlgebraData() : basis_(std::make_shared<GradedBasis>()) {}
    explicit LieAlgebraData(GradedBasis basis);

    int dim() const { return basis_->size(); }
    const GradedBasis& basis() const { return *basis_; }
    const std::shared_ptr<const GradedBasis>& basis_ptr() const { return basis_; }
    int parity(int i) const { return basis_->parity(i); }

    // Sets [a,b] and the graded-antisymmetric partner [b,a].
    void set_bracket(int a, int b, LinearCombination value);
    // Sets a single constant f_ab^c, leaving [b,a] untouched.
    void set_structure_constant(int a, int b, int c, const Rational& value);

    const LinearCombination& bracket(int a, int b) const { return table_.at(a).at(b); }
    Rational structure_constant(int a, int b, int c) const;
    std::map<std::tuple<int, int, int>, Rational> structure_constants() const;
    LinearCombination bracket(const LinearCombination& a, const LinearCombination& b) const;

    Role role(int i) const { return roles_.at(i); }
    void set_role(int i, Role r) { roles_.at(i) = r; }
    std::vector<int> indices_with(Role r) const;

    // Antisymmetry, degree and weight additivity; the first violation found.
    std::optional<std::string> structural_violation() const;

  private:
    std::shared_ptr<const GradedBasis> basis_;
    std::vector<std::vector<LinearCombination>> table_;
    std::vector<Role> roles_;
};

struct RepresentationData {
    int dimension = 0;
    // One square matrix per basis element of g, acting on column vectors.
    std::vector<std::vector<std::vector<Rational>>> matrices;
};

struct BilinearFormData {
    std::map<std::pair<int, int>, Rational> pairing;
    Rational operator()(int a, int b) const;
};

class InvalidRepresentation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Lie algebra in degree 0 from names and entries ([a,b] contains coefficient * c).
LieAlgebraData make_lie_algebra(const std::vector<std::string>& names,
                                const std::vector<std::tuple<std::string, std::string, std::string, Rational>>& brackets);

LieAlgebraData build_h(const LieAlgebraData& g, const RepresentationData& rho);

struct DoubleData {
    LieAlgebraData algebra;
    BilinearFormData kappa;
    int rank = 0;       // dim g
    int dim_v = 0;      // dim V
    std::vector<int> h;     // indices of g then psi_plus
    std::vector<int> dual;  // dual[k] is the index of the functional dual to h[k]
    RepresentationData rho;
    LieAlgebraData g;

    int dim_h() const { return static_cast<int>(h.size()); }
    bool in_h(int i) const { return i < dim_h(); }
    // Position in h of the element paired with the dual-part index i.
    int paired_h(int i) const;
};

// h must carry roles (g or psi_plus) as produced by build_h.
DoubleData build_double(const LieAlgebraData& h);
// build_double(build_h(g, rho)), keeping g and rho for later stages.
DoubleData build_double(const LieAlgebraData& g, const RepresentationData& rho);

Report check_jacobi(const LieAlgebraData& algebra);
Report check_invariant_form(const LieAlgebraData& algebra, const BilinearFormData& kappa);

// r = sum over h of h_k (x) dual(h_k).
SparseTensor classical_r(const DoubleData& dd, int order = 1);

// [r12,r13] + [r12,r23] + [r13,r23] expanded through brackets; needs an even r.
SparseTensor cybe_residual(const SparseTensor& r, const LieAlgebraData& algebra);
Report check_cybe(const SparseTensor& r, const LieAlgebraData& algebra);

// [x (x) 1 + 1 (x) x, r].
SparseTensor cobracket(const LieAlgebraData& algebra, const SparseTensor& r, int x);

// (r + r^21)/2.
SparseTensor omega_from_r(const SparseTensor& r);

struct PositivePart {
    LieAlgebraData algebra;
    std::vector<int> embedding;  // index in the double of each basis element
};

PositivePart positive_subalgebra(const DoubleData& dd);
// Ideal property and complement check for d = g |x d+.
Report check_semidirect(const DoubleData& dd, const PositivePart& positive);

}  // namespace dbl
