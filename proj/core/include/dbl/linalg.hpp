#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "dbl/rational.hpp"

namespace dbl {

// Sparse rational row: (column, value) pairs, columns strictly increasing, no zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Incremental fraction-free row echelon form over the integers: rows are
// scaled to primitive integer vectors and reduced by cross-multiplication.
class RowEchelon {
  public:
    // True when the row was independent of those inserted before.
    bool insert(const SparseRow& row);
    int rank() const { return static_cast<int>(pivots_.size()); }

  private:
    using IntRow = std::vector<std::pair<int, mpz_class>>;
    std::map<int, IntRow> pivots_;
};

int rank_of(const std::vector<SparseRow>& rows);

// Accumulates a sparse matrix column by column as rows keyed by row index.
class SparseMatrixBuilder {
  public:
    void add(int row, int column, const Rational& value);
    std::vector<SparseRow> rows() const;
    bool empty() const { return entries_.empty(); }

  private:
    std::map<int, std::map<int, Rational>> entries_;
};

}  // namespace dbl
