#include "pcone/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pcone {

Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    return Rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& q) {
    std::string s = numerator_of(q).str();
    if (denominator_of(q) != 1) {
        s += '/';
        s += denominator_of(q).str();
    }
    return s;
}

namespace {

bool valid_integer_token(std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer_token(num)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(Int(std::string(num)));
    }
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer_token(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Int d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    }
    return make_rational(Int(std::string(num)), std::move(d));
}

}  // namespace pcone
