#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "flowforms/errors.hpp"

namespace flowforms {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

// Base-10 integer parse. Leading zeros are stripped first: the cpp_int
// string constructor would read them as an octal prefix.
inline Int parse_int_decimal(std::string s) {
    if (s.empty()) throw ParseError("empty integer literal");
    bool neg = s[0] == '-' || s[0] == '+';
    std::string digits = neg || s[0] == '+' ? s.substr(1) : s;
    bool negative = s[0] == '-';
    std::size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    if (digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed integer literal: " + s);
    Int v(digits);
    return negative ? -v : v;
}

// Accepts "3", "-3", "1/2", "-1/2" (ASCII minus or U+2212).
inline Rational parse_rational(std::string s) {
    static const std::string kUnicodeMinus = "−";
    if (s.rfind(kUnicodeMinus, 0) == 0) s = "-" + s.substr(kUnicodeMinus.size());
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(parse_int_decimal(s));
        Int num = parse_int_decimal(s.substr(0, slash));
        Int den = parse_int_decimal(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in rational literal: " + s);
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal: " + s);
    }
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int l = (a / g) * b;
    return l < 0 ? -l : l;
}

}  // namespace flowforms
