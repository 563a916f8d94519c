#include "spherevf/stereographic.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "spherevf/errors.hpp"

namespace spherevf {

namespace {

std::vector<Polynomial> inverse_projection_numerators(int n) {
    std::vector<Polynomial> nums;
    nums.reserve(n + 1);
    for (int i = 0; i < n; ++i) nums.push_back(make_rational(2) * Polynomial::variable(n, i));
    nums.push_back(radius_squared(n) - Polynomial::constant(n, make_rational(1)));
    return nums;
}

}  // namespace

Polynomial tilde(const Polynomial& p, int m, int n) {
    if (n < 1) throw BadParametersError("projection needs at least one target variable");
    if (p.var_count() != n + 1)
        throw DimensionMismatchError("source polynomial must live in n + 1 variables");
    const Polynomial den = radius_squared(n) + Polynomial::constant(n, make_rational(1));
    return substitute_rational_map(p, inverse_projection_numerators(n), den, m);
}

ProjectedField push_forward(const VectorField& vf) {
    const int d = vf.dim();
    if (d < 2) throw DimensionMismatchError("projection needs ambient dimension at least two");
    tangency_cofactor(vf);
    const int n = d - 1;
    const int m = std::max(vf.degree(), 0);

    ProjectedField out;
    out.n = n;
    out.source_degree = m;
    out.time_rescale = "ds = dt / (2*(|u|^2 + 1)^" + std::to_string(m - 1) + ")";
    const Polynomial last = tilde(vf.components[n], m, n);
    out.r.reserve(n);
    for (int i = 0; i < n; ++i)
        out.r.push_back(tilde(vf.components[i], m, n) + Polynomial::variable(n, i) * last);
    return out;
}

bool equator_transfer_check(const VectorField& vf) {
    const int d = vf.dim();
    if (d < 2) throw DimensionMismatchError("projection needs ambient dimension at least two");
    tangency_cofactor(vf);
    const int n = d - 1;
    const Polynomial last = tilde(vf.components[n], std::max(vf.degree(), 0), n);
    if (last.is_zero()) return true;
    return divides(radius_squared(n) - Polynomial::constant(n, make_rational(1)), last);
}

}  // namespace spherevf
