#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherevf/linalg.hpp"
#include "spherevf/vector_field.hpp"

namespace spherevf {

/// Parameter bag for the named constructions. Each family reads only the
/// parameters listed next to its id in `generate`; the rest are ignored.
struct FamilySpec {
    std::string family;
    int n = 2;                              // sphere dimension
    int m = 2;                              // target degree where applicable
    std::vector<linalg::Vec> linear_forms;  // factor lists
    linalg::Vec a;                          // fixed linear form / integral gradient
    Rational c;                             // constant term of the integral
    std::vector<Rational> constants;        // parallel offsets or rotation rates
    Polynomial a_poly;                      // free polynomial factor
    SkewPolyMatrix seed;                    // skew seed matrix
};

/// A constructed field together with the invariant objects the construction
/// guarantees. Nothing here is recomputed: the checkers (invariance_check,
/// find_meridians, find_parallels, first_integral_check, multiplicity) are
/// the authorities the metadata is tested against.
struct GeneratedField {
    std::string family;
    VectorField field;
    /// Purely rotational families also expose their skew matrix (field = Ax).
    std::optional<SkewPolyMatrix> rotation;
    /// Invariant meridian hyperplanes: primitive normal (last entry 0) with
    /// the multiplicity the construction forces in the extactic polynomial.
    std::vector<std::pair<linalg::Vec, int>> meridians;
    /// Invariant parallel offsets k (the hyperplane x_d = k), multiplicity.
    std::vector<std::pair<Rational, int>> parallels;
    std::vector<Polynomial> first_integrals;
    /// (g, s): g^s divides the extactic polynomial of the meridian basis.
    std::optional<std::pair<Polynomial, int>> extactic_divisor;
    /// The construction excludes invariant meridians altogether.
    bool no_meridians = false;
};

/// Builds the family named by spec.family. Ids and their parameters:
///   thm14_1            n >= 2, m >= 2, a: every rotation entry is f^(m-1)
///                      for the meridian form f = sum a_k x_k; f = 0 is
///                      invariant and f^s divides the meridian extactic with
///                      s = (n-1 choose 2)(m-2) + (n-1)(m-1).
///   thm14_2            n >= 2, linear_forms: every rotation entry is the
///                      product of the given meridian forms; each factor is
///                      an invariant meridian, the product to the (n-1)-st
///                      power divides the meridian extactic.
///   thm14_3            linear_forms in x1, x2: the one nonzero rotation
///                      entry (2,3) is their product A; on the 2-sphere the
///                      meridian extactic is exactly A*x1*x3, giving the
///                      factors and x1 = 0 as all invariant meridians.
///   thm14_4            linear_forms in x1..x3: field (A x2, -A x1, 0, 0)
///                      with A their product; on the 3-sphere each factor is
///                      an invariant meridian of multiplicity 3 and x3 = 0
///                      one of multiplicity 1 (total 3m - 2).
///   thm34_integrable   n >= 1, a_poly in n + 1 variables: field
///                      (A x2, -A x1, 0, ..., 0); the n integrals x3..x_{n+1}
///                      and |x|^2 - 1 are independent.
///   thm33_first_integral  a != 0, c, seed: rewires the skew seed so the
///                      rotation matrix satisfies a^t A = 0 exactly; then
///                      sum a_i x_i + c is a first integral.
///   thm45_no_meridian  n >= 2, constants: pairwise rotation rates, all
///                      nonzero; the field has no invariant meridian at all.
///   thm15_parallels    n >= 1, constants: distinct offsets with |k| < 1;
///                      the last component becomes (x1+...+xn) * prod(x_d - k),
///                      so every x_d = k is an invariant parallel (m - 1 of
///                      them for degree m).
/// Throws BadParametersError on unknown ids or parameter violations; every
/// returned field is tangent (asserted internally).
GeneratedField generate(const FamilySpec& spec);

/// Deterministic random tangent field on the n-sphere of degree exactly m:
/// assembles a pseudorandom normal form (radial parts of degree <= m - 2,
/// rotation entries of degree <= m - 1, integer coefficients bounded by
/// coefficient_bound) and tops up the leading rotation entry if the sampled
/// degree fell short. Identical arguments give identical fields.
VectorField random_tangent_field(int n, int m, int coefficient_bound, std::uint64_t seed);

}  // namespace spherevf
