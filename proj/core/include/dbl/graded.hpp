#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace dbl {

struct BasisElement {
    std::string name;
    int degree = 0;
    int weight = 0;

    int parity() const { return ((degree % 2) + 2) % 2; }
    bool odd() const { return parity() == 1; }
};

class GradedBasis {
  public:
    GradedBasis() = default;
    explicit GradedBasis(std::vector<BasisElement> elements);

    // Throws std::invalid_argument on a duplicate name.
    int add(BasisElement element);

    int size() const { return static_cast<int>(elements_.size()); }
    const BasisElement& operator[](int i) const { return elements_.at(i); }
    const std::vector<BasisElement>& elements() const { return elements_; }

    // -1 when absent.
    int find(const std::string& name) const;
    // Throws std::invalid_argument when absent.
    int index(const std::string& name) const;

    int parity(int i) const { return elements_.at(i).parity(); }
    int degree(int i) const { return elements_.at(i).degree; }
    int weight(int i) const { return elements_.at(i).weight; }

    friend bool operator==(const GradedBasis& a, const GradedBasis& b);

  private:
    std::vector<BasisElement> elements_;
    std::unordered_map<std::string, int> lookup_;
};

// Sign of moving factors of the given degrees into the order
// (factor permutation[0], factor permutation[1], ...).
int koszul_sign(const std::vector<int>& permutation, const std::vector<int>& degrees);

inline int sign_of_parity(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace dbl
