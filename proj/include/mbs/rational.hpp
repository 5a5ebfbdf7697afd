#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "mbs/errors.hpp"

namespace mbs {

// Exact rational arithmetic everywhere; betweenness is equality-sensitive and
// floating point would misclassify.
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

namespace detail {
inline bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}
}  // namespace detail

// Accepts "p" or "p/q" with integer p and positive integer q.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!detail::is_integer_token(text))
            throw ParseError("expected rational 'p' or 'p/q', got '" + text + "'");
        return Rational(boost::multiprecision::mpz_int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!detail::is_integer_token(num) || !detail::is_integer_token(den) || den[0] == '-')
        throw ParseError("expected rational 'p' or 'p/q', got '" + text + "'");
    const boost::multiprecision::mpz_int q(den);
    if (q == 0) throw ParseError("zero denominator in '" + text + "'");
    // Division canonicalizes the sign and the gcd.
    return Rational(boost::multiprecision::mpz_int(num)) / Rational(q);
}

}  // namespace mbs
