#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spherevf/polynomial.hpp"

namespace spherevf {

/// Polynomial vector field on R^d, d = n+1 when the field is read as living
/// on the n-sphere. components[i] is the i-th coordinate function, all in
/// the same ring R[x1..xd].
struct VectorField {
    std::vector<Polynomial> components;

    VectorField() = default;
    explicit VectorField(std::vector<Polynomial> comps);

    int dim() const { return static_cast<int>(components.size()); }
    /// Max component degree; -1 for the zero field.
    int degree() const;
    bool is_zero() const;

    bool operator==(const VectorField& o) const = default;
};

/// Parses "dim 3; P1 = -x2; P2 = x1; P3 = 0". Components may appear in any
/// order; omitted ones default to 0.
VectorField parse_vector_field(std::string_view text);
std::string vector_field_to_text(const VectorField& vf);

/// Derivative of f along the field: sum_i P_i * df/dx_i.
Polynomial lie_derivative(const VectorField& vf, const Polynomial& f);
/// Iterated derivative, j >= 0.
Polynomial lie_power(const VectorField& vf, const Polynomial& f, int j);

struct TangencyCertificate {
    Polynomial cofactor;  // K with sum_i P_i x_i = K * (sum_k x_k^2 - 1)
};

/// Decides tangency to the unit sphere. Throws NotTangentError (carrying the
/// remainder's existence, not the remainder) when sum_i P_i x_i is not a
/// multiple of the sphere polynomial.
TangencyCertificate tangency_cofactor(const VectorField& vf);
bool is_tangent(const VectorField& vf);

/// Skew matrix of polynomials, entries in a fixed ring. The skew identity
/// A[i][j] == -A[j][i] (zero diagonal) is enforced at construction time.
class SkewPolyMatrix {
public:
    SkewPolyMatrix() : dim_(0), var_count_(0) {}
    SkewPolyMatrix(int dim, int var_count);

    static SkewPolyMatrix from_entries(std::vector<std::vector<Polynomial>> entries);

    int dim() const { return dim_; }
    int var_count() const { return var_count_; }
    const Polynomial& at(int i, int j) const;
    /// Sets A[i][j] = p and A[j][i] = -p; i == j requires p == 0.
    void set(int i, int j, const Polynomial& p);
    /// Max entry degree (-1 if all zero).
    int max_degree() const;
    bool is_zero() const;

    /// (A x)_i = sum_j A[i][j] x_j.
    std::vector<Polynomial> apply_to_coordinates(int power = 1) const;

    bool operator==(const SkewPolyMatrix& o) const = default;

private:
    int dim_;
    int var_count_;
    std::vector<Polynomial> entries_;  // row-major
};

/// Constructive inverse of "Q_i = sum_j A_ij x_j^k": given Q with
/// sum_i Q_i x_i^k == 0, produces one skew A reproducing Q. Representations
/// are not unique; only skewness and exact reconstruction are promised.
/// Throws HypothesisViolatedError when the sum identity fails.
SkewPolyMatrix skew_decompose(const std::vector<Polynomial>& q, int k);

/// Tangent-field normal form P_i = (1 - |x|^2) f_i + sum_j A_ij x_j, plus the
/// optional layered refinement P_i = sum_j (1 - |x|^(2j)) f_layer[i][j-1]
/// + sum_j A_ij x_j. The flat pair (f, A) is always populated.
struct CanonicalForm {
    std::vector<Polynomial> f;
    SkewPolyMatrix a;
    int layer_count = 0;
    std::vector<std::vector<Polynomial>> f_layers;  // [i][j-1], empty unless layered
};

/// Flat canonical form of a tangent field; deg f_i <= m-2, deg A_ij <= m-1.
CanonicalForm canonical_decompose(const VectorField& vf);

/// Layered canonical form; layer j collects the homogeneous parts of degree
/// m-2j and m-2j-1, so deg f_layer[i][j-1] <= m-2j. Also fills the flat pair.
CanonicalForm layered_decompose(const VectorField& vf);

/// Rebuilds the field from a canonical form (flat pair). The result is
/// tangent by construction for any f and skew A.
VectorField assemble(const CanonicalForm& cf);

enum class CheckMode { RingIdentity, ModuloSphere };

/// Witness of invariance of {f = 0} under the field. RingIdentity:
/// lie(f) == cofactor * f exactly. ModuloSphere: lie(f) == cofactor * f
/// + sphere_multiplier * (|x|^2 - 1), i.e. invariance of the zero set cut to
/// the sphere.
struct InvarianceCertificate {
    Polynomial f;
    Polynomial cofactor;
    CheckMode mode = CheckMode::RingIdentity;
    Polynomial sphere_multiplier;  // zero in RingIdentity mode
};

/// Decides invariance of {f = 0}; throws NotInvariantError on failure.
/// ModuloSphere requests try the exact ring identity first (stronger, and
/// recorded as such when it holds); the substitution route needs f linear.
InvarianceCertificate invariance_check(const VectorField& vf, const Polynomial& f, CheckMode mode);
std::optional<InvarianceCertificate> try_invariance_check(const VectorField& vf,
                                                          const Polynomial& f, CheckMode mode);

bool first_integral_check(const VectorField& vf, const Polynomial& g, CheckMode mode);

struct IntegrabilityCertificate {
    std::vector<Polynomial> integrals;
    std::vector<CheckMode> modes;        // how each integral was certified
    std::vector<Rational> point;         // rational point of independence
    int jacobian_rank = 0;               // == integrals.size()
};

/// Certifies that the candidates are first integrals (ring identity where it
/// holds, otherwise modulo the sphere) and functionally independent at some
/// rational point, found by a deterministic grid sweep and then a seeded
/// pseudorandom search. Throws NotFirstIntegralError(index) or
/// IndependenceNotCertifiedError (the latter does not prove dependence).
IntegrabilityCertificate integrability_certificate(const VectorField& vf,
                                                   const std::vector<Polynomial>& integrals);

/// For a field with all components homogeneous of one degree and
/// sum_i P_i x_i == 0 identically: the skew matrix with P_i = sum_j A_ij x_j.
SkewPolyMatrix homogeneous_decompose(const VectorField& vf);

}  // namespace spherevf
