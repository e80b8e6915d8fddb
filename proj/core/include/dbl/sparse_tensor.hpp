#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dbl/graded.hpp"
#include "dbl/series.hpp"

namespace dbl {

// Element of B_1 (x) ... (x) B_k with truncated-series coefficients.
class SparseTensor {
  public:
    using Index = std::vector<int>;

    SparseTensor(std::vector<std::shared_ptr<const GradedBasis>> slots, int order);
    SparseTensor(std::shared_ptr<const GradedBasis> basis, int arity, int order);

    int arity() const { return static_cast<int>(slots_.size()); }
    int order() const { return order_; }
    const GradedBasis& basis(int slot) const { return *slots_.at(slot); }
    const std::shared_ptr<const GradedBasis>& basis_ptr(int slot) const { return slots_.at(slot); }
    const std::map<Index, TruncatedSeries>& entries() const { return entries_; }

    // Adds to an entry; an entry that becomes zero is erased.
    void add(const Index& index, const TruncatedSeries& value);
    void add(const Index& index, const Rational& value);
    TruncatedSeries at(const Index& index) const;

    bool is_zero() const { return entries_.empty(); }
    int parity(const Index& index) const;

    SparseTensor& operator+=(const SparseTensor& other);
    SparseTensor& operator-=(const SparseTensor& other);
    SparseTensor& operator*=(const Rational& scalar);
    friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
    friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
    friend bool operator==(const SparseTensor& a, const SparseTensor& b);

    // Terms like "1/2 x|t" sorted by index; "0" for the zero tensor.
    std::string to_string() const;

  private:
    void require_same_shape(const SparseTensor& other) const;

    std::vector<std::shared_ptr<const GradedBasis>> slots_;
    int order_;
    std::map<Index, TruncatedSeries> entries_;
};

// Applies a functional (an arity-1 tensor whose entry i is the coefficient
// of the dual basis vector e^i) to the given slot, with the Koszul sign of
// moving the functional past the earlier slots.
SparseTensor tensor_contract(const SparseTensor& tensor, int slot, const SparseTensor& functional);

// Graded flip of slots 0 and 1 of an arity-2 tensor.
SparseTensor graded_flip(const SparseTensor& tensor);

}  // namespace dbl
