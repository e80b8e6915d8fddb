#pragma once

#include <map>
#include <vector>

#include "dbl/linalg.hpp"

namespace dbl {

// Finite cochain complex over Q, optionally with operators commuting with d.
// differential[k] holds one row per basis vector of C^k in C^{k+1} coordinates;
// actions[a][k] holds one row per basis vector of C^k in C^k coordinates.
class FiniteComplex {
  public:
    void set_dimension(int degree, int dimension) { dims_[degree] = dimension; }
    void set_differential(int degree, std::vector<SparseRow> rows);
    void add_action(std::map<int, std::vector<SparseRow>> rows) { actions_.push_back(std::move(rows)); }

    const std::map<int, int>& dimensions() const { return dims_; }
    int dimension(int degree) const;
    int differential_rank(int degree) const;
    int cohomology(int degree) const;
    // Dimension of the invariant part of H^k: classes z with x_a z exact for every a.
    int invariants(int degree) const;
    int euler_characteristic() const;

  private:
    std::map<int, int> dims_;
    std::map<int, std::vector<SparseRow>> differential_;
    std::vector<std::map<int, std::vector<SparseRow>>> actions_;
    mutable std::map<int, int> rank_cache_;
};

}  // namespace dbl
