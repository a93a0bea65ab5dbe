#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fockforge {

// Exact coefficient field used everywhere in the engine.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(num, den) keeps the fraction as given; everything downstream
// compares canonical forms.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

// Throws std::invalid_argument on malformed text or a zero denominator.
inline Rational parse_rational(const std::string& text) {
    Rational q(text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace fockforge
