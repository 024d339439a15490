#include "cactoidlab/scalar.hpp"

#include <cctype>

namespace cactoidlab {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// cpp_int reads a leading '0' as an octal prefix; digit strings here are
// always decimal, so strip it first.
BigInt from_digits(const std::string& s) {
    size_t i = s.find_first_not_of('0');
    if (i == std::string::npos) return 0;
    return BigInt(s.substr(i));
}

}  // namespace

Rational parse_scalar(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    if (s.empty()) throw ParseError("empty number: '" + text + "'");

    Rational value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed rational: '" + text + "'");
        }
        BigInt d = from_digits(den);
        if (d == 0) throw ParseError("zero denominator: '" + text + "'");
        value = Rational(from_digits(num), d);
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac)) {
            throw ParseError("malformed decimal: '" + text + "'");
        }
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(from_digits(whole) * scale + from_digits(frac), scale);
    } else {
        if (!all_digits(s)) throw ParseError("malformed number: '" + text + "'");
        value = Rational(from_digits(s));
    }
    if (negative) value = -value;
    return value;
}

std::string scalar_to_string(const Rational& value) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;

    // Count factors of 2 and 5 in the denominator.
    BigInt d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        std::string out = num.str() + "/" + den.str();
        return negative ? "-" + out : out;
    }
    int digits = twos > fives ? twos : fives;
    for (int i = twos; i < digits; ++i) num *= 2;
    for (int i = fives; i < digits; ++i) num *= 5;
    std::string s = num.str();
    std::string out;
    if (digits == 0) {
        out = s;
    } else {
        while (static_cast<int>(s.size()) <= digits) s = "0" + s;
        out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
        // Trim trailing zeros but keep at least one fractional digit.
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

double scalar_to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace cactoidlab
