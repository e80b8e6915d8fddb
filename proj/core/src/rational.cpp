#include "dbl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dbl {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class numerator(n, 10);
    mpz_class denominator(std::string(den), 10);
    if (denominator == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace dbl
