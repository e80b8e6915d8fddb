#include "dbl/sparse_tensor.hpp"

#include <stdexcept>

namespace dbl {

SparseTensor::SparseTensor(std::vector<std::shared_ptr<const GradedBasis>> slots, int order)
    : slots_(std::move(slots)), order_(order) {
    if (slots_.empty()) throw std::invalid_argument("tensor arity must be at least 1");
}

SparseTensor::SparseTensor(std::shared_ptr<const GradedBasis> basis, int arity, int order)
    : SparseTensor(std::vector<std::shared_ptr<const GradedBasis>>(arity, basis), order) {}

void SparseTensor::add(const Index& index, const TruncatedSeries& value) {
    if (static_cast<int>(index.size()) != arity()) throw std::invalid_argument("tensor index arity mismatch");
    for (int s = 0; s < arity(); ++s) {
        if (index[s] < 0 || index[s] >= slots_[s]->size()) throw std::invalid_argument("tensor index out of range");
    }
    if (value.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

void SparseTensor::add(const Index& index, const Rational& value) { add(index, TruncatedSeries(order_, value)); }

TruncatedSeries SparseTensor::at(const Index& index) const {
    const auto it = entries_.find(index);
    return it == entries_.end() ? TruncatedSeries(order_) : it->second;
}

int SparseTensor::parity(const Index& index) const {
    int p = 0;
    for (int s = 0; s < arity(); ++s) p += slots_[s]->parity(index[s]);
    return p % 2;
}

void SparseTensor::require_same_shape(const SparseTensor& other) const {
    if (other.arity() != arity() || other.order_ != order_) throw std::invalid_argument("tensor shape mismatch");
    for (int s = 0; s < arity(); ++s) {
        if (!(*other.slots_[s] == *slots_[s])) throw std::invalid_argument("tensor basis mismatch");
    }
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& other) {
    require_same_shape(other);
    for (const auto& [index, value] : other.entries_) add(index, value);
    return *this;
}

SparseTensor& SparseTensor::operator-=(const SparseTensor& other) {
    require_same_shape(other);
    for (const auto& [index, value] : other.entries_) add(index, -value);
    return *this;
}

SparseTensor& SparseTensor::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& [index, value] : entries_) value *= scalar;
    return *this;
}

bool operator==(const SparseTensor& a, const SparseTensor& b) {
    return a.arity() == b.arity() && a.entries_ == b.entries_;
}

std::string SparseTensor::to_string() const {
    if (entries_.empty()) return "0";
    std::string out;
    for (const auto& [index, value] : entries_) {
        if (!out.empty()) out += " + ";
        out += "(" + value.to_string() + ") ";
        for (int s = 0; s < arity(); ++s) {
            if (s > 0) out += "|";
            out += (*slots_[s])[index[s]].name;
        }
    }
    return out;
}

SparseTensor tensor_contract(const SparseTensor& tensor, int slot, const SparseTensor& functional) {
    if (slot < 0 || slot >= tensor.arity()) throw std::invalid_argument("tensor_contract: slot out of range");
    if (functional.arity() != 1) throw std::invalid_argument("tensor_contract: functional must have arity 1");
    if (!(functional.basis(0) == tensor.basis(slot))) throw std::invalid_argument("tensor_contract: basis mismatch");
    if (functional.order() != tensor.order()) throw std::invalid_argument("tensor_contract: order mismatch");
    if (tensor.arity() == 1) throw std::invalid_argument("tensor_contract: result would have arity 0");

    std::vector<std::shared_ptr<const GradedBasis>> remaining;
    for (int s = 0; s < tensor.arity(); ++s) {
        if (s != slot) remaining.push_back(tensor.basis_ptr(s));
    }
    SparseTensor result(remaining, tensor.order());
    for (const auto& [index, value] : tensor.entries()) {
        const auto phi = functional.entries().find({index[slot]});
        if (phi == functional.entries().end()) continue;
        int before = 0;
        for (int s = 0; s < slot; ++s) before += tensor.basis(s).parity(index[s]);
        const int sign = sign_of_parity(static_cast<long long>(before) * tensor.basis(slot).parity(index[slot]));
        SparseTensor::Index rest;
        for (int s = 0; s < tensor.arity(); ++s) {
            if (s != slot) rest.push_back(index[s]);
        }
        result.add(rest, value * phi->second * Rational(sign));
    }
    return result;
}

SparseTensor graded_flip(const SparseTensor& tensor) {
    if (tensor.arity() != 2) throw std::invalid_argument("graded_flip needs arity 2");
    SparseTensor result({tensor.basis_ptr(1), tensor.basis_ptr(0)}, tensor.order());
    for (const auto& [index, value] : tensor.entries()) {
        const int sign = sign_of_parity(tensor.basis(0).parity(index[0]) * tensor.basis(1).parity(index[1]));
        result.add({index[1], index[0]}, value * Rational(sign));
    }
    return result;
}

}  // namespace dbl
