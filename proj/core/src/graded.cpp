#include "dbl/graded.hpp"

#include <stdexcept>

namespace dbl {

GradedBasis::GradedBasis(std::vector<BasisElement> elements) {
    for (auto& e : elements) add(std::move(e));
}

int GradedBasis::add(BasisElement element) {
    if (lookup_.count(element.name) != 0) {
        throw std::invalid_argument("duplicate basis name '" + element.name + "'");
    }
    const int i = size();
    lookup_.emplace(element.name, i);
    elements_.push_back(std::move(element));
    return i;
}

int GradedBasis::find(const std::string& name) const {
    const auto it = lookup_.find(name);
    return it == lookup_.end() ? -1 : it->second;
}

int GradedBasis::index(const std::string& name) const {
    const int i = find(name);
    if (i < 0) throw std::invalid_argument("unknown basis element '" + name + "'");
    return i;
}

bool operator==(const GradedBasis& a, const GradedBasis& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i) {
        const auto& x = a[i];
        const auto& y = b[i];
        if (x.name != y.name || x.degree != y.degree || x.weight != y.weight) return false;
    }
    return true;
}

int koszul_sign(const std::vector<int>& permutation, const std::vector<int>& degrees) {
    const int k = static_cast<int>(permutation.size());
    if (static_cast<int>(degrees.size()) != k) throw std::invalid_argument("koszul_sign: length mismatch");
    std::vector<bool> seen(k, false);
    for (int p : permutation) {
        if (p < 0 || p >= k || seen[p]) throw std::invalid_argument("koszul_sign: not a permutation");
        seen[p] = true;
    }
    int sign = 1;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (permutation[i] > permutation[j] && (degrees[permutation[i]] % 2 != 0) &&
                (degrees[permutation[j]] % 2 != 0)) {
                sign = -sign;
            }
        }
    }
    return sign;
}

}  // namespace dbl
