#pragma once

#include <optional>
#include <vector>

#include "spherevf/rational.hpp"

namespace spherevf::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Rational>;  // row-major, rows*cols entries

struct Matrix {
    int rows = 0, cols = 0;
    Mat a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}
    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// Exact rank via Gauss elimination (first nonzero pivot in column order —
/// deterministic, no magnitude heuristics needed over the rationals).
int rank(Matrix m);

/// Basis of the right nullspace. Each vector is scaled to primitive integer
/// form with positive leading entry, one per free column, ordered by free
/// column index. Empty result means the kernel is trivial.
std::vector<Vec> nullspace(Matrix m);

/// Any particular solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(Matrix m, Vec b);

/// Scales a rational vector to primitive integer form (lcm of denominators,
/// divided by the gcd of numerators, first nonzero entry positive).
Vec primitive_integer_form(Vec v);

}  // namespace spherevf::linalg
