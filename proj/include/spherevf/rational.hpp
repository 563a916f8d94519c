#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spherevf {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator once canonicalized; every construction path in this
/// library goes through helpers that guarantee that normal form.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or zero denominator. Result is canonical.
Rational rational_from_string(std::string_view text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q", q > 0.
std::string rational_to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace spherevf
