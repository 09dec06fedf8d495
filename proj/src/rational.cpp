#include "arraudit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace arraudit {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    // Division normalizes sign and reduces to lowest terms.
    return Rational(num) / Rational(den);
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

std::string to_string(const Integer& n) {
    return n.str();
}

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    if (i == text.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        }
    }
    return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

Integer choose2(const Integer& n) {
    if (n < 0) {
        throw std::domain_error("choose2 of negative argument");
    }
    return n * (n - 1) / 2;
}

} // namespace arraudit
