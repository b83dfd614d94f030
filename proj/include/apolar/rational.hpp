#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "apolar/error.hpp"

namespace apolar {

using Integer = mpz_class;
/// Canonical (reduced, positive denominator) rational number.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// `p` or `p/q`.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses `p`, `-p`, or `p/q`.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid = [](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num, true) || !valid(den, false))
        throw InputError("malformed rational '" + s + "'");
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (Integer(den) == 0) throw InputError("zero denominator in '" + s + "'");
    return make_rational(Integer(num), Integer(den));
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
    Rational r = 1;
    Rational b = base;
    while (e != 0) {
        if (e & 1UL) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace apolar
