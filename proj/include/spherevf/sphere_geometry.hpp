#pragma once

#include <optional>
#include <vector>

#include "spherevf/linalg.hpp"
#include "spherevf/vector_field.hpp"

namespace spherevf {

/// Affine hyperplane sum_i a_i x_i + b = 0 in R^d. Intersected with the unit
/// sphere it cuts an (n-1)-sphere when b^2 < |a|^2; through the origin
/// (b = 0) that section is a great sphere.
struct Hyperplane {
    linalg::Vec a;
    Rational b;

    Hyperplane(linalg::Vec a_, Rational b_);

    int dim() const { return static_cast<int>(a.size()); }
    Polynomial polynomial() const;  // sum a_i x_i + b

    bool is_great() const { return b == 0; }
    /// Great and avoiding the last coordinate: contains the poles.
    bool is_meridian() const;
    /// Level set of the last coordinate alone.
    bool is_parallel() const;
    /// Exact test b^2 < |a|^2 for a nonempty sphere section of positive
    /// dimension (tangency points do not count).
    bool section_nonempty() const;
};

/// The set of scalar multiples of the section points. With d0 := -b (so the
/// section is {sum a_i x_i = d0}), the cone is the zero set of
/// (sum a_i x_i)^2 - d0^2 |x|^2 when d0 != 0 and of sum a_i x_i itself when
/// d0 = 0. Throws EmptySectionError when the hyperplane misses the sphere.
Polynomial cone_polynomial(const Hyperplane& h);

/// Decides invariance of the sphere section cut by h. Homogeneous fields go
/// through the cone polynomial with an exact ring identity (equivalent to
/// section invariance); other fields use the modulo-sphere check on the
/// linear polynomial of h. Throws NotInvariantError or EmptySectionError.
InvarianceCertificate sphere_invariance_check(const VectorField& vf, const Hyperplane& h);
std::optional<InvarianceCertificate> try_sphere_invariance_check(const VectorField& vf,
                                                                 const Hyperplane& h);

/// Invariant great spheres of a constant-coefficient field P = Ax, skew A:
/// exactly the kernel vectors of A. Empty basis means no invariant great
/// sphere; a full kernel (A = 0) means every great sphere is invariant.
struct GreatSphereKernel {
    std::vector<linalg::Vec> basis;
    bool all_invariant = false;
};
GreatSphereKernel deg1_great_sphere_kernel(const VectorField& vf);

/// Symmetric-matrix form of a homogeneous quadratic field: P_i = X^t B_i X.
struct QuadraticSphereData {
    std::vector<linalg::Matrix> b;  // d symmetric d x d matrices

    static QuadraticSphereData from_field(const VectorField& vf);
    int dim() const { return static_cast<int>(b.size()); }
    /// Column-assembled matrix [ (B_1 e_i) ... (B_d e_i) ].
    linalg::Matrix a_matrix(int i) const;
};

/// Decides invariance of the great sphere {a.x = 0} for the quadratic field:
/// solvability of 2 sum_i a_i B_i = a b^t + b a^t in b is equivalent to it.
/// Returns a witness b, or nullopt as the negative answer.
std::optional<linalg::Vec> quadratic_great_sphere_test(const QuadraticSphereData& data,
                                                       const linalg::Vec& a);

/// Sufficient certificate only: when a is a common eigenvector of every
/// assembled A_i with rational eigenvalue lambda_i, the great sphere
/// {a.x = 0} is invariant with cofactor sum_i lambda_i x_i.
std::optional<linalg::Vec> quadratic_eigen_cofactor(const QuadraticSphereData& data,
                                                    const linalg::Vec& a);

/// Shape of the last component once the equator {x_d = 0} is invariant,
/// field degree <= 2: P_d = alpha (1 - |x|^2) + x_d (gamma . x') with
/// constant alpha and gamma over the first d-1 variables (gamma = 0 and
/// alpha = 0 when the degree is <= 1, where P_d vanishes outright). c is the
/// skew witness matrix carrying gamma in its last row.
struct EquatorStructure {
    Rational alpha;
    linalg::Vec gamma;      // length d-1
    linalg::Matrix c;       // d x d, skew, last row (gamma, 0)
    Polynomial last_component;
};
EquatorStructure equator_structure_check(const VectorField& vf);

/// Shape of P_j for a homogeneous field of degree m >= 3 leaving the
/// non-great section {x_j + d0 = 0, 0 < |d0| < 1} invariant:
/// P_j = (sum_{i != j} B_i x_i) * (x_j^2 - d0^2 |x|^2), deg B_i <= m - 3.
struct NongreatSphereStructure {
    Polynomial cone;                 // x_j^2 - d0^2 |x|^2
    Polynomial kprime;               // the cofactor sum_{i != j} B_i x_i
    std::vector<Polynomial> b;       // B_i, with b[j] = 0
};
NongreatSphereStructure nongreat_sphere_structure(const VectorField& vf, int j,
                                                  const Rational& d0);

}  // namespace spherevf
