#pragma once

#include <string>
#include <vector>

#include "spherevf/vector_field.hpp"

namespace spherevf {

/// Image of a tangent field under stereographic projection from the north
/// pole (0, ..., 0, 1). r[i] is the i-th component, a polynomial in
/// u_1..u_n; the flow matches the source field only after the time change
/// recorded in time_rescale (metadata only, nothing is integrated).
struct ProjectedField {
    int n = 0;
    std::vector<Polynomial> r;
    int source_degree = 0;  // the common clearing power m
    std::string time_rescale;
};

/// (|u|^2+1)^m * p(2u_1/(|u|^2+1), ..., 2u_n/(|u|^2+1), (|u|^2-1)/(|u|^2+1)),
/// the denominator-cleared composite with the inverse projection. p must
/// live in n + 1 variables with deg p <= m; throws ClearingFailedError when
/// the clearing power is too small, BadParametersError when n < 1.
Polynomial tilde(const Polynomial& p, int m, int n);

/// Projected field R_i = tilde(P_i) + u_i * tilde(P_{n+1}), every component
/// cleared with the common power m = max(deg field, 0). deg R_i <= 2m: the
/// top form of tilde(P_i) is P_i(north pole) * |u|^(2m) and tangency forces
/// P_{n+1}(north pole) = 0, nothing more. Degree 2m is attained exactly when
/// the north pole is not a fixed point; fields fixing it stay below.
/// Requires ambient dimension >= 2 and tangency (NotTangentError).
ProjectedField push_forward(const VectorField& vf);

/// Whether the equator section {x_{n+1} = 0} stays invariant after
/// projection: true exactly when |u|^2 - 1 divides tilde(P_{n+1}), which is
/// when the projected field leaves the unit (n-1)-sphere in u-space
/// invariant. Agrees with the sphere-side invariance decision on the
/// equator hyperplane. Requires tangency (NotTangentError).
bool equator_transfer_check(const VectorField& vf);

}  // namespace spherevf
