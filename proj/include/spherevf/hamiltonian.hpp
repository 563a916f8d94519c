#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "spherevf/linalg.hpp"
#include "spherevf/vector_field.hpp"

namespace spherevf {

/// Result of the degree-one decision. `b` is the constant matrix obtained
/// from the field's coefficient matrix by the pairwise row rewiring
/// b[2i][j] = a[2i+1][j], b[2i+1][j] = -a[2i][j] (0-based row pairs); the
/// field is Hamiltonian exactly when `b` is symmetric, and then `h` holds
/// the quadratic (1/2) x^t b x, which has zero constant term by construction.
struct HamiltonianReport {
    linalg::Matrix b;
    bool symmetric = false;
    std::optional<Polynomial> h;
};

/// Checks the pairing identities P_{2i-1} == -dH/dx_{2i} and
/// P_{2i} == dH/dx_{2i-1} exactly for every coordinate pair (1-based).
/// Throws OddDimensionError on odd ambient dimension, DimensionMismatchError
/// when h lives in a different ring than the field.
bool verify_hamiltonian(const VectorField& vf, const Polynomial& h);

/// Complete decision for fields P = A x with constant skew A (the zero field
/// counts, with A = 0). Throws NotDegreeOneHomogeneousError when some
/// component is not a linear form, NotTangentError when the coefficient
/// matrix is not skew, OddDimensionError on odd ambient dimension. When the
/// rewired matrix is symmetric the report carries h and verify_hamiltonian
/// has been asserted on it.
HamiltonianReport deg1_hamiltonian_test(const VectorField& vf);

enum class ObstructionVerdict { NotHamiltonian, Inconclusive };

/// Index data certifying a NotHamiltonian verdict: the degree split m and
/// the nonzero coefficients of the pure powers x_{k+1}^m found in the f_i.
struct ObstructionWitness {
    int m = 0;
    std::vector<std::tuple<int, int, Rational>> pure_powers;  // (i, k, coeff)
};

struct ObstructionReport {
    ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;
    std::optional<ObstructionWitness> witness;  // set only for NotHamiltonian
};

/// One-sided test for fields given by the pair (f, A) whose assembled degree
/// is exactly m + 2, with m >= 2, on an even-dimensional ambient space.
/// Splits each f_i = sum_k a_ik x_k^m + g_i; when deg g_i <= m - 1 for all i
/// and deg A_ij <= m for all i, j, no polynomial Hamiltonian exists and the
/// verdict is NotHamiltonian with witness. Inconclusive asserts nothing.
/// Throws BadParametersError (m < 2), OddDimensionError, BadDegreeError
/// (assembled degree != m + 2).
ObstructionReport obstruction_check(const CanonicalForm& cf, int m);

/// Fixed exact computation in four variables. A homogeneous quadratic field
/// with a cubic Hamiltonian H would force P_i = +-dH/dx_j by pairs, so H can
/// contain none of x1^2 x2, x1 x2^2, x3^2 x4, x3 x4^2 (each would put x_i^2
/// into P_i, impossible for a homogeneous tangent field), leaving 16 cubic
/// monomials; tangency of the induced field is exactly the vanishing of the
/// derivative of H along the double rotation (x2, -x1, x4, -x3). Returns the
/// solution space of that linear system on the 16 coefficients. It is
/// trivial: no homogeneous degree-two field on the 3-sphere is Hamiltonian.
struct CubicKernelResult {
    int dimension = 0;
    std::vector<linalg::Vec> basis;        // coefficient vectors in the monomial basis
    std::vector<Monomial> monomial_basis;  // the 16 admissible cubic monomials
};
CubicKernelResult cubic_kernel_s3();

}  // namespace spherevf
