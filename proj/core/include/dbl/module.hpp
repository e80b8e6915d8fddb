#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dbl/check.hpp"
#include "dbl/complex.hpp"
#include "dbl/dga.hpp"
#include "dbl/lie.hpp"
#include "dbl/series.hpp"
#include "dbl/uea.hpp"

namespace dbl {

// Sparse matrix over Q[hbar]/hbar^N; column j is the image of basis vector j.
class SeriesMatrix {
  public:
    using Entries = std::map<std::pair<int, int>, TruncatedSeries>;

    SeriesMatrix(int rows = 0, int cols = 0, int order = kDefaultTruncationOrder);
    static SeriesMatrix identity(int n, int order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return order_; }
    const Entries& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    void add(int row, int col, const TruncatedSeries& value);
    void add(int row, int col, const Rational& value, int power = 0);
    TruncatedSeries at(int row, int col) const;

    SeriesMatrix& operator+=(const SeriesMatrix& other);
    SeriesMatrix& operator-=(const SeriesMatrix& other);
    SeriesMatrix& operator*=(const TruncatedSeries& scalar);
    friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) { return a += b; }
    friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) { return a -= b; }
    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
    friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    // The hbar^power coefficients.
    SeriesMatrix hbar_component(int power) const;
    // "(row,col): series" for the first few entries.
    std::string describe(std::size_t limit = 4) const;

  private:
    int rows_;
    int cols_;
    int order_;
    Entries entries_;
};

// (A (x) B)(x (x) y) = (-1)^{|B||x|} A x (x) B y on bases flattened as x * dim + y.
SeriesMatrix kronecker(const SeriesMatrix& a, const SeriesMatrix& b, int b_parity, const std::vector<int>& left_parities);
// x (x) y -> (-1)^{|x||y|} y (x) x.
SeriesMatrix swap_matrix(const std::vector<int>& left_parities, const std::vector<int>& right_parities, int order);
// sum_k (hbar scale X)^k / k!.
SeriesMatrix exp_hbar(const SeriesMatrix& x, const Rational& scale = 1);

class InvalidModule : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Free Q[hbar]/hbar^N-module with a graded action of every basis element of a
// Lie algebra and a differential commuting with it.
class FiniteModule {
  public:
    FiniteModule(std::string name, LieAlgebraData algebra, GradedBasis basis, int order);

    const std::string& name() const { return name_; }
    const LieAlgebraData& algebra() const { return algebra_; }
    const GradedBasis& basis() const { return basis_; }
    int dim() const { return basis_.size(); }
    int order() const { return order_; }
    std::vector<int> parities() const;

    const SeriesMatrix& action(int generator) const { return actions_.at(generator); }
    void set_action(int generator, SeriesMatrix value);
    const SeriesMatrix& differential() const { return differential_; }
    void set_differential(SeriesMatrix value);

  private:
    std::string name_;
    LieAlgebraData algebra_;
    GradedBasis basis_;
    int order_;
    std::vector<SeriesMatrix> actions_;
    SeriesMatrix differential_;
};

// Bidegrees of all entries, graded bracket relations, d^2 = 0 and d e = (-1)^{|e|} e d.
Report check_module(const FiniteModule& module);
// Throws InvalidModule naming the first violated relation.
void validate(const FiniteModule& module);

FiniteModule trivial_module(const LieAlgebraData& algebra, int order);
FiniteModule adjoint_module(const LieAlgebraData& algebra, int order);
// Generators act primitively: e (m (x) n) = e m (x) n + (-1)^{|e||m|} m (x) e n.
FiniteModule tensor_product(const FiniteModule& left, const FiniteModule& right);

SeriesMatrix act_monomial(const FiniteModule& module, const Monomial& word);
// Action of a PBW element of U(algebra), and of an arity-2 element on left (x) right.
SeriesMatrix act(const FiniteModule& module, const UEAElement& value);
SeriesMatrix act(const FiniteModule& left, const FiniteModule& right, const UEAElement& value);

// Complex of the Q-span of hbar^k b at weight wt(b) - 2k = weight, graded by
// deg - wt; the g-part of the action is attached when requested.
FiniteComplex module_complex(const FiniteModule& module, int weight, const std::vector<int>& g_generators = {});

struct ModuleMap {
    std::string name;
    std::string source;
    std::string target;
    SeriesMatrix matrix;
};

// Even, bidegree-preserving, intertwines every action and the differentials.
Report check_module_map(const ModuleMap& map, const FiniteModule& source, const FiniteModule& target);

// Element of a free module over a CommutativeDGA: one coefficient per generator.
using ModuleVector = std::vector<Polynomial>;

// Free bigraded module over a CommutativeDGA; generator degree is p, weight is q.
struct DGModule {
    std::shared_ptr<const CommutativeDGA> algebra;
    GradedBasis generators;
    std::vector<ModuleVector> differential;            // D(1 (x) g_j)
    std::vector<std::vector<ModuleVector>> actions;    // g-action on generators
};

// D(f g_j) = d f g_j + (-1)^{|f|} f D g_j.
ModuleVector apply_differential(const DGModule& module, const ModuleVector& value);
// x (f g_j) = (x f) g_j + f (x g_j).
ModuleVector apply_action(const DGModule& module, int a, const ModuleVector& value);
// Constant-in-the-algebra linear map given on generators.
ModuleVector apply_matrix(const DGModule& target, const SeriesMatrix& matrix, const ModuleVector& value,
                          std::optional<int> hbar);
ModuleVector module_generator(const DGModule& module, int j);
bool is_zero(const ModuleVector& value);
std::string to_string(const ModuleVector& value, const DGModule& module);

// D^2 = 0 and bidegree (1,0) of D on generators.
Report check_dg_module(const DGModule& module, const std::string& prefix = {});
// Over the same algebra: D(g (x) h) = Dg (x) h + (-1)^{|g|} g (x) Dh.
DGModule tensor_product(const DGModule& left, const DGModule& right);
// The weight-q component as a complex in p.
FiniteComplex dg_module_complex(const DGModule& module, int weight, bool with_actions = false);

// Q[hbar]/hbar^N series as a polynomial in the algebra's hbar generator.
Polynomial series_to_polynomial(const TruncatedSeries& value, std::optional<int> hbar);

}  // namespace dbl
