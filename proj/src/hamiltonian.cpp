#include "spherevf/hamiltonian.hpp"

#include <map>
#include <string>
#include <utility>

#include "spherevf/errors.hpp"

namespace spherevf {

namespace {

// Constant coefficient matrix of a field whose components are all linear
// forms; skewness of the matrix is exactly tangency for this shape.
linalg::Matrix constant_skew_matrix(const VectorField& vf) {
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
    return m;
}

}  // namespace

bool verify_hamiltonian(const VectorField& vf, const Polynomial& h) {
    const int d = vf.dim();
    if (d % 2 != 0) throw OddDimensionError("hamiltonian pairing needs an even ambient dimension");
    if (h.var_count() != d)
        throw DimensionMismatchError("hamiltonian candidate lives in the wrong ring");
    for (int i = 0; i + 1 < d; i += 2) {
        if (!(vf.components[i] == -h.derivative(i + 1))) return false;
        if (!(vf.components[i + 1] == h.derivative(i))) return false;
    }
    return true;
}

HamiltonianReport deg1_hamiltonian_test(const VectorField& vf) {
    const int d = vf.dim();
    if (d % 2 != 0) throw OddDimensionError("hamiltonian pairing needs an even ambient dimension");
    const linalg::Matrix a = constant_skew_matrix(vf);

    HamiltonianReport rep;
    rep.b = linalg::Matrix(d, d);
    for (int i = 0; i + 1 < d; i += 2)
        for (int j = 0; j < d; ++j) {
            rep.b.at(i, j) = a.at(i + 1, j);
            rep.b.at(i + 1, j) = -a.at(i, j);
        }

    rep.symmetric = true;
    for (int i = 0; i < d && rep.symmetric; ++i)
        for (int j = i + 1; j < d; ++j)
            if (rep.b.at(i, j) != rep.b.at(j, i)) {
                rep.symmetric = false;
                break;
            }
    if (!rep.symmetric) return rep;

    Polynomial h(d);
    for (int i = 0; i < d; ++i) {
        if (rep.b.at(i, i) != 0)
            h.add_term(Monomial::unit(d, i, 2), rep.b.at(i, i) / 2);
        for (int j = i + 1; j < d; ++j)
            if (rep.b.at(i, j) != 0)
                h.add_term(Monomial::unit(d, i) * Monomial::unit(d, j), rep.b.at(i, j));
    }
    if (!verify_hamiltonian(vf, h))
        throw InternalInconsistencyError("symmetric rewiring produced a non-hamiltonian h");
    rep.h = std::move(h);
    return rep;
}

ObstructionReport obstruction_check(const CanonicalForm& cf, int m) {
    if (m < 2) throw BadParametersError("degree split parameter must be at least 2");
    const int d = static_cast<int>(cf.f.size());
    if (d != cf.a.dim()) throw DimensionMismatchError("canonical form parts disagree on dimension");
    if (d % 2 != 0) throw OddDimensionError("hamiltonian pairing needs an even ambient dimension");
    if (assemble(cf).degree() != m + 2)
        throw BadDegreeError("assembled field degree is not m + 2");

    ObstructionWitness witness;
    witness.m = m;
    for (int i = 0; i < d; ++i) {
        Polynomial g = cf.f[i];
        for (int k = 0; k < d; ++k) {
            const Monomial pure = Monomial::unit(d, k, m);
            const Rational aik = cf.f[i].coeff(pure);
            if (aik != 0) {
                witness.pure_powers.emplace_back(i, k, aik);
                g.add_term(pure, -aik);
            }
        }
        if (g.degree() > m - 1) return {};
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (cf.a.at(i, j).degree() > m) return {};

    // Degree exactly m + 2 under the two bounds forces a nonzero pure power.
    if (witness.pure_powers.empty())
        throw InternalInconsistencyError("degree m + 2 with no pure power of degree m");
    ObstructionReport rep;
    rep.verdict = ObstructionVerdict::NotHamiltonian;
    rep.witness = std::move(witness);
    return rep;
}

CubicKernelResult cubic_kernel_s3() {
    const int d = 4;
    CubicKernelResult res;

    // All degree-3 power products except the four excluded ones, in the
    // canonical term order.
    Polynomial all_linear(d);
    for (int v = 0; v < d; ++v) all_linear += Polynomial::variable(d, v);
    const Monomial x1sq_x2(std::vector<int>{2, 1, 0, 0});
    const Monomial x1_x2sq(std::vector<int>{1, 2, 0, 0});
    const Monomial x3sq_x4(std::vector<int>{0, 0, 2, 1});
    const Monomial x3_x4sq(std::vector<int>{0, 0, 1, 2});
    const Polynomial cubics = all_linear.pow(3);
    for (const auto& [mono, c] : cubics.terms()) {
        if (mono == x1sq_x2 || mono == x1_x2sq || mono == x3sq_x4 || mono == x3_x4sq) continue;
        res.monomial_basis.push_back(mono);
    }

    const VectorField double_rotation({Polynomial::variable(d, 1), -Polynomial::variable(d, 0),
                                       Polynomial::variable(d, 3), -Polynomial::variable(d, 2)});

    std::map<Monomial, int> row_of;
    std::vector<Polynomial> images;
    for (const Monomial& mono : res.monomial_basis) {
        images.push_back(lie_derivative(double_rotation, Polynomial::from_monomial(mono, 1)));
        for (const auto& [target, c] : images.back().terms())
            row_of.emplace(target, static_cast<int>(row_of.size()));
    }

    linalg::Matrix constraints(static_cast<int>(row_of.size()),
                               static_cast<int>(res.monomial_basis.size()));
    for (int t = 0; t < static_cast<int>(images.size()); ++t)
        for (const auto& [target, c] : images[t].terms())
            constraints.at(row_of.at(target), t) = c;

    res.basis = linalg::nullspace(std::move(constraints));
    res.dimension = static_cast<int>(res.basis.size());
    return res;
}

}  // namespace spherevf
