#pragma once

#include <string>
#include <vector>

#include "spherevf/linalg.hpp"
#include "spherevf/vector_field.hpp"

namespace spherevf {

/// Determinant of a square polynomial matrix: memoized minor expansion up to
/// 6x6, fraction-free elimination (exact division by the previous pivot)
/// above that.
Polynomial poly_matrix_determinant(const std::vector<std::vector<Polynomial>>& m);

/// Determinant of the k x k matrix whose row j (0-based) holds the j-th
/// iterated derivatives of the basis elements along the field. Vanishing on
/// an invariant zero set of an element of span(basis) is necessary, so the
/// linear factors of this polynomial carry all hyperplane candidates.
/// Throws DependentBasisError when the basis is linearly dependent over Q.
Polynomial extactic_polynomial(const VectorField& vf, const std::vector<Polynomial>& basis);

/// Largest t with f^t dividing e. Throws ZeroExtacticError when e == 0
/// (every power divides), BadParametersError for constant f.
int multiplicity(const Polynomial& e, const Polynomial& f);

enum class HyperplaneKind { Meridian, Parallel };

/// One verified invariant hyperplane: sum_i a_i x_i + b = 0 with the ring
/// cofactor of the invariance identity and its extactic multiplicity.
struct HyperplaneFinding {
    linalg::Vec a;
    Rational b;
    int multiplicity = 0;
    Polynomial cofactor;
};

struct HyperplaneSearchResult {
    HyperplaneKind kind = HyperplaneKind::Parallel;
    std::vector<HyperplaneFinding> findings;
    /// Every invariant hyperplane of this kind with rational data is listed.
    bool complete = false;
    /// Parallels only: last component vanishes identically, so every
    /// parallel is invariant (the associated extactic is the zero polynomial).
    bool all_invariant = false;
    /// Meridians only: the extactic vanished identically.
    bool degenerate_extactic = false;
    Polynomial extactic;
    std::vector<std::string> flags;
};

/// Invariant hyperplanes x_d = k, |k| < 1: candidate offsets come from
/// rational roots of >= 3 deterministic specializations of the last
/// component, each candidate verified by exact substitution. Rational
/// parallels are found exhaustively; a surviving nonrational factor of the
/// specialization gcd with real roots inside (-1, 1) is flagged, never
/// dropped silently.
HyperplaneSearchResult find_parallels(const VectorField& vf);

/// Invariant hyperplanes through the origin avoiding the last coordinate.
/// On S^2 the search is exhaustive over rational slopes (plus the x2 = 0
/// line) with a real-root count certifying completeness; in higher dimension
/// only supplied or kernel-derived candidates are verified and the result is
/// marked incomplete.
HyperplaneSearchResult find_meridians(const VectorField& vf,
                                      const std::vector<linalg::Vec>& candidates = {});

}  // namespace spherevf
