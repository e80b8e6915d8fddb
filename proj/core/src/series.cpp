#include "dbl/series.hpp"

#include <stdexcept>

namespace dbl {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 1) throw std::invalid_argument("truncation order must be positive");
    coefficients_.assign(order, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, const Rational& constant) : TruncatedSeries(order) {
    coefficients_[0] = constant;
}

TruncatedSeries TruncatedSeries::monomial(int order, int power, const Rational& coefficient) {
    TruncatedSeries s(order);
    if (power < 0) throw std::invalid_argument("negative hbar power");
    if (power < order) s.coefficients_[power] = coefficient;
    return s;
}

void TruncatedSeries::set(int power, const Rational& value) {
    if (power < order()) coefficients_.at(power) = value;
}

void TruncatedSeries::add(int power, const Rational& value) {
    if (power < order()) coefficients_.at(power) += value;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coefficients_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

int TruncatedSeries::valuation() const {
    for (int k = 0; k < order(); ++k) {
        if (sgn(coefficients_[k]) != 0) return k;
    }
    return order();
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    if (other.order() != order()) throw std::invalid_argument("series order mismatch");
    for (int k = 0; k < order(); ++k) coefficients_[k] += other.coefficients_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    if (other.order() != order()) throw std::invalid_argument("series order mismatch");
    for (int k = 0; k < order(); ++k) coefficients_[k] -= other.coefficients_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
    if (other.order() != order()) throw std::invalid_argument("series order mismatch");
    std::vector<Rational> product(order(), Rational(0));
    for (int i = 0; i < order(); ++i) {
        if (sgn(coefficients_[i]) == 0) continue;
        for (int j = 0; i + j < order(); ++j) product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
    coefficients_ = std::move(product);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
    for (auto& c : coefficients_) c *= scalar;
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s = *this;
    for (auto& c : s.coefficients_) c = -c;
    return s;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (int k = 0; k < order(); ++k) {
        if (sgn(coefficients_[k]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += dbl::to_string(coefficients_[k]);
        if (k > 0) out += " h^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (sgn(s[0]) != 0) throw std::domain_error("series_exp needs a vanishing constant term");
    TruncatedSeries result(s.order(), 1);
    TruncatedSeries power(s.order(), 1);
    for (int k = 1; k < s.order(); ++k) {
        power *= s;
        power *= Rational(1, k);
        result += power;
    }
    return result;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    if (sgn(s[0]) == 0) throw std::domain_error("series_inverse needs a nonzero constant term");
    TruncatedSeries inverse(s.order());
    inverse.set(0, 1 / s[0]);
    for (int k = 1; k < s.order(); ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += s[j] * inverse[k - j];
        inverse.set(k, -acc / s[0]);
    }
    return inverse;
}

}  // namespace dbl
