#pragma once

#include <vector>

#include "spherevf/errors.hpp"
#include "spherevf/rational.hpp"

namespace spherevf::uni {

/// Dense univariate polynomial, coefficient of x^k at index k, no trailing
/// zero coefficients (the zero polynomial is the empty vector).
using UPoly = std::vector<Rational>;

/// Divisor search hit its iteration cap; callers report the affected root
/// search as unresolved instead of silently returning a partial answer.
struct RootSearchOverflow : Error {
    using Error::Error;
};

UPoly normalized(UPoly p);
int degree(const UPoly& p);  // -1 for zero
Rational evaluate(const UPoly& p, const Rational& x);
UPoly derivative(const UPoly& p);
UPoly add(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(UPoly p, const Rational& c);

/// Remainder of a mod b (b nonzero).
UPoly rem(UPoly a, const UPoly& b);
/// Exact quotient; throws InternalInconsistencyError if division leaves a remainder.
UPoly exact_div(UPoly a, const UPoly& b);

/// Monic gcd (1 for coprime, 0 only if both zero).
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);

/// Multiplicity of (x - r) in p; 0 when r is not a root. p must be nonzero.
int root_multiplicity(const UPoly& p, const Rational& r);
/// Divides out (x - r) once; r must be a root.
UPoly deflate(const UPoly& p, const Rational& r);

/// All rational roots of nonzero p, ascending, without multiplicities.
/// May throw RootSearchOverflow on pathologically large coefficients.
std::vector<Rational> rational_roots(const UPoly& p);

/// Number of distinct real roots (Sturm chain over the whole line).
int count_distinct_real_roots(const UPoly& p);

}  // namespace spherevf::uni
