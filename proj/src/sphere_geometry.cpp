#include "spherevf/sphere_geometry.hpp"

#include <algorithm>

#include "spherevf/errors.hpp"

namespace spherevf {

namespace {

bool is_homogeneous_field(const VectorField& vf) {
    int deg = -1;
    for (const auto& p : vf.components) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) return false;
        if (deg >= 0 && p.degree() != deg) return false;
        deg = p.degree();
    }
    return true;
}

Polynomial linear_form(const linalg::Vec& a) {
    const int d = static_cast<int>(a.size());
    Polynomial p(d);
    for (int i = 0; i < d; ++i)
        if (a[i] != 0) p.add_term(Monomial::unit(d, i), a[i]);
    return p;
}

}  // namespace

Hyperplane::Hyperplane(linalg::Vec a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.empty()) throw DimensionMismatchError("hyperplane in dimension zero");
    if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; }))
        throw BadParametersError("hyperplane normal must be nonzero");
}

Polynomial Hyperplane::polynomial() const {
    Polynomial p = linear_form(a);
    if (b != 0) p += Polynomial::constant(dim(), b);
    return p;
}

bool Hyperplane::is_meridian() const { return b == 0 && a[dim() - 1] == 0; }

bool Hyperplane::is_parallel() const {
    for (int i = 0; i + 1 < dim(); ++i)
        if (a[i] != 0) return false;
    return true;
}

bool Hyperplane::section_nonempty() const {
    Rational norm2(0);
    for (const auto& x : a) norm2 += x * x;
    return b * b < norm2;
}

Polynomial cone_polynomial(const Hyperplane& h) {
    if (!h.section_nonempty()) throw EmptySectionError("hyperplane misses the sphere");
    Polynomial ell = linear_form(h.a);
    const Rational d0 = -h.b;
    if (d0 == 0) return ell;
    return ell * ell - (d0 * d0) * radius_squared(h.dim());
}

std::optional<InvarianceCertificate> try_sphere_invariance_check(const VectorField& vf,
                                                                 const Hyperplane& h) {
    if (vf.dim() != h.dim()) throw DimensionMismatchError("field and hyperplane dimensions differ");
    if (!h.section_nonempty()) throw EmptySectionError("hyperplane misses the sphere");
    if (!is_tangent(vf)) throw NotTangentError("field is not tangent to the sphere");
    if (is_homogeneous_field(vf))
        return try_invariance_check(vf, cone_polynomial(h), CheckMode::RingIdentity);
    return try_invariance_check(vf, h.polynomial(), CheckMode::ModuloSphere);
}

InvarianceCertificate sphere_invariance_check(const VectorField& vf, const Hyperplane& h) {
    auto cert = try_sphere_invariance_check(vf, h);
    if (!cert) throw NotInvariantError("hyperplane section is not invariant");
    return *cert;
}

GreatSphereKernel deg1_great_sphere_kernel(const VectorField& vf) {
    const int d = vf.dim();
    linalg::Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        const Polynomial& p = vf.components[i];
        if (p.is_zero()) continue;
        if (!p.is_homogeneous() || p.degree() != 1)
            throw NotDegreeOneHomogeneousError("component " + std::to_string(i + 1) +
                                               " is not homogeneous of degree one");
        for (int j = 0; j < d; ++j) m.at(i, j) = p.coeff(Monomial::unit(d, j));
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (m.at(i, j) != -m.at(j, i))
                throw NotTangentError("coefficient matrix is not skew-symmetric");
    GreatSphereKernel res;
    res.basis = linalg::nullspace(std::move(m));
    res.all_invariant = static_cast<int>(res.basis.size()) == d;
    return res;
}

QuadraticSphereData QuadraticSphereData::from_field(const VectorField& vf) {
    const int d = vf.dim();
    if (!is_tangent(vf)) throw NotTangentError("field is not tangent to the sphere");
    QuadraticSphereData data;
    data.b.assign(d, linalg::Matrix(d, d));
    for (int i = 0; i < d; ++i) {
        const Polynomial& p = vf.components[i];
        if (p.is_zero()) continue;
        if (!p.is_homogeneous() || p.degree() != 2)
            throw NotHomogeneousError("component " + std::to_string(i + 1) +
                                      " is not homogeneous of degree two");
        for (const auto& [mono, c] : p.terms()) {
            int first = -1, second = -1;
            for (int v = 0; v < d; ++v) {
                for (int e = 0; e < mono.exponent(v); ++e) {
                    if (first < 0)
                        first = v;
                    else
                        second = v;
                }
            }
            if (first == second) {
                data.b[i].at(first, first) = c;
            } else {
                data.b[i].at(first, second) = c / 2;
                data.b[i].at(second, first) = c / 2;
            }
        }
    }
    return data;
}

linalg::Matrix QuadraticSphereData::a_matrix(int i) const {
    const int d = dim();
    linalg::Matrix out(d, d);
    for (int k = 0; k < d; ++k)          // column k is B_k e_i
        for (int r = 0; r < d; ++r) out.at(r, k) = b[k].at(r, i);
    return out;
}

std::optional<linalg::Vec> quadratic_great_sphere_test(const QuadraticSphereData& data,
                                                       const linalg::Vec& a) {
    const int d = data.dim();
    if (static_cast<int>(a.size()) != d)
        throw DimensionMismatchError("normal vector length differs from the field dimension");
    if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; }))
        throw BadParametersError("normal vector must be nonzero");
    linalg::Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m.at(r, c) += 2 * a[i] * data.b[i].at(r, c);
    // a_r b_c + a_c b_r = M_rc, upper triangle suffices by symmetry
    const int rows = d * (d + 1) / 2;
    linalg::Matrix sys(rows, d);
    linalg::Vec rhs(rows);
    int row = 0;
    for (int r = 0; r < d; ++r) {
        for (int c = r; c < d; ++c) {
            sys.at(row, c) += a[r];
            sys.at(row, r) += a[c];
            rhs[row] = m.at(r, c);
            ++row;
        }
    }
    return linalg::solve(std::move(sys), std::move(rhs));
}

std::optional<linalg::Vec> quadratic_eigen_cofactor(const QuadraticSphereData& data,
                                                    const linalg::Vec& a) {
    const int d = data.dim();
    if (static_cast<int>(a.size()) != d)
        throw DimensionMismatchError("normal vector length differs from the field dimension");
    int pivot = -1;
    for (int k = 0; k < d; ++k)
        if (a[k] != 0) {
            pivot = k;
            break;
        }
    if (pivot < 0) throw BadParametersError("normal vector must be nonzero");
    linalg::Vec lambda(d);
    for (int i = 0; i < d; ++i) {
        linalg::Matrix ai = data.a_matrix(i);
        linalg::Vec v(d, Rational(0));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) v[r] += ai.at(r, c) * a[c];
        lambda[i] = v[pivot] / a[pivot];
        for (int r = 0; r < d; ++r)
            if (v[r] != lambda[i] * a[r]) return std::nullopt;
    }
    return lambda;
}

EquatorStructure equator_structure_check(const VectorField& vf) {
    const int d = vf.dim();
    if (d < 2) throw DimensionMismatchError("equator needs ambient dimension >= 2");
    const int m = vf.degree();
    if (m > 2) throw BadDegreeError("equator structure classified only up to degree two");
    linalg::Vec normal(d, Rational(0));
    normal[d - 1] = 1;
    if (!try_sphere_invariance_check(vf, Hyperplane(normal, 0)))
        throw NotInvariantEquatorError("equator is not invariant");

    EquatorStructure out;
    out.alpha = 0;
    out.gamma.assign(d - 1, Rational(0));
    out.c = linalg::Matrix(d, d);
    out.last_component = vf.components[d - 1];
    const Polynomial& last = out.last_component;

    if (m <= 1) {
        if (!last.is_zero())
            throw StructureViolationError("degree-one field with invariant equator has nonzero last component");
        return out;
    }

    out.alpha = last.constant_term();
    if (!last.homogeneous_part(1).is_zero())
        throw StructureViolationError("linear part of the last component survives");
    Polynomial t = last.homogeneous_part(2) + out.alpha * radius_squared(d);
    if (!t.is_zero()) {
        auto q = exact_quotient(t, Polynomial::variable(d, d - 1));
        if (!q) throw StructureViolationError("quadratic part is not a multiple of the last variable");
        if (q->coeff(Monomial::unit(d, d - 1)) != 0)
            throw StructureViolationError("squared last variable survives in the quadratic part");
        for (int j = 0; j + 1 < d; ++j) out.gamma[j] = q->coeff(Monomial::unit(d, j));
    }
    for (int j = 0; j + 1 < d; ++j) {
        out.c.at(d - 1, j) = out.gamma[j];
        out.c.at(j, d - 1) = -out.gamma[j];
    }
    // by construction: last == alpha (1 - |x|^2) + x_d (gamma . x)
    Polynomial rebuilt = out.alpha * (Polynomial::constant(d, 1) - radius_squared(d));
    Polynomial lin(d);
    for (int j = 0; j + 1 < d; ++j)
        if (out.gamma[j] != 0) lin.add_term(Monomial::unit(d, j), out.gamma[j]);
    rebuilt += Polynomial::variable(d, d - 1) * lin;
    if (!(rebuilt == last)) throw InternalInconsistencyError("structure does not rebuild the component");
    return out;
}

NongreatSphereStructure nongreat_sphere_structure(const VectorField& vf, int j,
                                                  const Rational& d0) {
    const int d = vf.dim();
    if (j < 0 || j >= d) throw BadParametersError("variable index out of range");
    if (d0 == 0 || !(abs(d0) < 1))
        throw BadParametersError("offset must satisfy 0 < |offset| < 1");
    const int m = vf.degree();
    if (m < 3) throw BadDegreeError("structure statement needs degree at least three");
    homogeneous_decompose(vf);  // validates homogeneity and tangency

    NongreatSphereStructure out;
    Polynomial xj = Polynomial::variable(d, j);
    out.cone = xj * xj - (d0 * d0) * radius_squared(d);
    auto cert = try_invariance_check(vf, out.cone, CheckMode::RingIdentity);
    if (!cert) throw NotInvariantError("sphere section is not invariant");

    auto q = exact_quotient(vf.components[j], out.cone);
    if (!q) throw DivisionFailedError("component is not a multiple of the cone polynomial");
    out.kprime = std::move(*q);

    out.b.assign(d, Polynomial(d));
    for (const auto& [mono, c] : out.kprime.terms()) {
        int target = -1;
        for (int v = 0; v < d; ++v) {
            if (v == j) continue;
            if (mono.exponent(v) > 0) {
                target = v;
                break;
            }
        }
        if (target < 0)
            throw StructureViolationError("cofactor carries a monomial in the section variable only");
        out.b[target].add_term(mono / Monomial::unit(d, target), c);
    }
    for (int i = 0; i < d; ++i)
        if (out.b[i].degree() > m - 3)
            throw StructureViolationError("cofactor coefficient exceeds the degree bound");
    return out;
}

}  // namespace spherevf
