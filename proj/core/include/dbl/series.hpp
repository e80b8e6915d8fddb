#pragma once

#include <string>
#include <vector>

#include "dbl/rational.hpp"

namespace dbl {

inline constexpr int kHbarDegree = -2;
inline constexpr int kHbarWeight = -2;
inline constexpr int kDefaultTruncationOrder = 4;

// Polynomials in hbar modulo hbar^N.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order = kDefaultTruncationOrder);
    TruncatedSeries(int order, const Rational& constant);

    static TruncatedSeries monomial(int order, int power, const Rational& coefficient = 1);

    int order() const { return static_cast<int>(coefficients_.size()); }
    const Rational& operator[](int power) const { return coefficients_.at(power); }
    void set(int power, const Rational& value);
    void add(int power, const Rational& value);
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    bool is_zero() const;
    // Lowest power with a nonzero coefficient, or order() for the zero series.
    int valuation() const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const Rational& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
    TruncatedSeries operator-() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coefficients_ == b.coefficients_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    // Nonzero coefficients as "p/q" strings keyed by hbar power, e.g. "1/2 h^2".
    std::string to_string() const;

  private:
    std::vector<Rational> coefficients_;
};

// Sum s^k/k!; throws std::domain_error unless the constant term vanishes.
TruncatedSeries series_exp(const TruncatedSeries& s);

// Multiplicative inverse; throws std::domain_error if the constant term vanishes.
TruncatedSeries series_inverse(const TruncatedSeries& s);

}  // namespace dbl
