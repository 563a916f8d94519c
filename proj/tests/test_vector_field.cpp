// Tangency, canonical forms, skew decomposition, invariance and first
// integrals. The tangency decision is cross-checked against an independent
// rewriting-based reduction (x_d^2 -> 1 - sum of the other squares).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spherevf/errors.hpp"
#include "spherevf/linalg.hpp"
#include "spherevf/vector_field.hpp"

using namespace spherevf;

namespace {

Polynomial P(const char* text, int vars = -1) { return Polynomial::parse(text, vars); }

VectorField VF(const char* text) { return parse_vector_field(text); }

// Reduces p modulo the sphere by repeatedly replacing x_d^2 with
// 1 - x_1^2 - ... - x_{d-1}^2. Shares no code with polynomial division; used
// as the independent oracle for divisibility by the sphere polynomial.
Polynomial reduce_by_rewriting(Polynomial p) {
    const int d = p.var_count();
    Polynomial replacement = Polynomial::constant(d, 1);
    for (int i = 0; i + 1 < d; ++i)
        replacement -= Polynomial::from_monomial(Monomial::unit(d, i, 2), 1);
    for (;;) {
        bool changed = false;
        Polynomial next(d);
        for (const auto& [m, c] : p.terms()) {
            int e = m.exponent(d - 1);
            if (e >= 2) {
                auto exps = m.exponents();
                exps[d - 1] -= 2;
                next += Polynomial::from_monomial(Monomial(std::move(exps)), c) * replacement;
                changed = true;
            } else {
                next.add_term(m, c);
            }
        }
        p = std::move(next);
        if (!changed) return p;
    }
}

std::mt19937_64 g_rng(1234);

Polynomial random_poly(int vars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    Polynomial p(vars);
    int t = nterms(g_rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> e(vars, 0);
        int budget = exp(g_rng);
        for (int v = 0; v < vars && budget > 0; ++v) {
            std::uniform_int_distribution<int> take(0, budget);
            e[v] = take(g_rng);
            budget -= e[v];
        }
        p.add_term(Monomial(std::move(e)), make_rational(num(g_rng), den(g_rng)));
    }
    return p;
}

SkewPolyMatrix random_skew(int dim, int vars, int max_deg, int max_terms) {
    SkewPolyMatrix a(dim, vars);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) a.set(i, j, random_poly(vars, max_deg, max_terms));
    return a;
}

VectorField random_tangent(int d, int m) {
    CanonicalForm cf;
    cf.f.reserve(d);
    for (int i = 0; i < d; ++i) cf.f.push_back(m >= 2 ? random_poly(d, m - 2, 3) : Polynomial(d));
    cf.a = random_skew(d, d, m - 1, 3);
    return assemble(cf);
}

}  // namespace

TEST_CASE("field text form parses and round-trips") {
    VectorField vf = VF("dim 3; P1 = -x2; P2 = x1; P3 = 0");
    CHECK(vf.dim() == 3);
    CHECK(vf.degree() == 1);
    CHECK(vf.components[0] == P("-x2", 3));
    CHECK(VF("P2=x1;dim 3;P1=-x2") == vf);  // order-free, P3 defaults to 0
    CHECK(parse_vector_field(vector_field_to_text(vf)) == vf);
    CHECK_THROWS_AS(VF("P1 = x1"), ParseError);           // missing dim
    CHECK_THROWS_AS(VF("dim 2; P3 = x1"), ParseError);    // index out of range
    CHECK_THROWS_AS(VF("dim 2; P1 = x1; P1 = 0"), ParseError);
}

TEST_CASE("lie derivative basics") {
    VectorField rot = VF("dim 2; P1 = -x2; P2 = x1");
    CHECK(lie_derivative(rot, P("x1^2 + x2^2")).is_zero());
    CHECK(lie_derivative(rot, P("x1", 2)) == P("-x2", 2));
    CHECK(lie_power(rot, P("x1", 2), 2) == P("-x1", 2));
    CHECK(lie_power(rot, P("x1", 2), 0) == P("x1", 2));
}

TEST_CASE("tangency cofactor: rotation field and radial field") {
    CHECK(tangency_cofactor(VF("dim 3; P1 = -x2; P2 = x1; P3 = 0")).cofactor.is_zero());
    // radial-type field (1-s)*f with f = (1,0,0) has cofactor -x1
    VectorField vf = VF("dim 3; P1 = 1 - x1^2 - x2^2 - x3^2; P2 = 0; P3 = 0");
    CHECK(tangency_cofactor(vf).cofactor == P("-x1", 3));
    CHECK_THROWS_AS(tangency_cofactor(VF("dim 2; P1 = x1; P2 = 0")), NotTangentError);
    CHECK(is_tangent(VF("dim 1; P1 = 0")));
}

TEST_CASE("tangency agrees with rewriting oracle: full sweep in dimension 2") {
    // every field with coefficients in {-1,0,1} on the 6 monomials of degree <= 2
    const int d = 2;
    std::vector<Monomial> basis;
    for (int e1 = 0; e1 <= 2; ++e1)
        for (int e2 = 0; e2 + e1 <= 2; ++e2) basis.push_back(Monomial({e1, e2}));
    REQUIRE(basis.size() == 6);
    auto nth_poly = [&](int code) {
        Polynomial p(d);
        for (const auto& m : basis) {
            int c = code % 3;
            code /= 3;
            if (c == 1) p.add_term(m, 1);
            if (c == 2) p.add_term(m, -1);
        }
        return p;
    };
    const int total = 729;  // 3^6
    int tangent_count = 0;
    for (int c1 = 0; c1 < total; ++c1) {
        Polynomial p1 = nth_poly(c1);
        for (int c2 = 0; c2 < total; ++c2) {
            VectorField vf({p1, nth_poly(c2)});
            Polynomial radial = p1 * Polynomial::variable(d, 0) +
                                vf.components[1] * Polynomial::variable(d, 1);
            bool oracle = reduce_by_rewriting(radial).is_zero();
            CHECK(is_tangent(vf) == oracle);
            tangent_count += oracle;
        }
    }
    CHECK(tangent_count > 0);
}

TEST_CASE("tangency agrees with rewriting oracle: sampled dimension 3") {
    std::mt19937_64 rng(5150);
    std::vector<Monomial> basis;
    for (int e1 = 0; e1 <= 2; ++e1)
        for (int e2 = 0; e2 + e1 <= 2; ++e2)
            for (int e3 = 0; e1 + e2 + e3 <= 2; ++e3) basis.push_back(Monomial({e1, e2, e3}));
    REQUIRE(basis.size() == 10);
    std::uniform_int_distribution<int> coeff(-1, 1);
    int agree_tangent = 0;
    for (int iter = 0; iter < 20000; ++iter) {
        std::vector<Polynomial> comps;
        for (int i = 0; i < 3; ++i) {
            Polynomial p(3);
            for (const auto& m : basis) {
                int c = coeff(rng);
                if (c != 0) p.add_term(m, c);
            }
            comps.push_back(std::move(p));
        }
        VectorField vf(std::move(comps));
        Polynomial radial(3);
        for (int i = 0; i < 3; ++i) radial += vf.components[i] * Polynomial::variable(3, i);
        bool oracle = reduce_by_rewriting(radial).is_zero();
        CHECK(is_tangent(vf) == oracle);
        agree_tangent += oracle;
    }
    // raw random fields are almost never tangent; seed in a few known ones
    VectorField rot = VF("dim 3; P1 = x2; P2 = -x1; P3 = 0");
    CHECK(is_tangent(rot));
    CHECK(reduce_by_rewriting(Polynomial(3) + rot.components[0] * Polynomial::variable(3, 0) +
                              rot.components[1] * Polynomial::variable(3, 1))
              .is_zero());
}

TEST_CASE("skew matrix type enforces the skew identity") {
    CHECK_THROWS_AS(SkewPolyMatrix(2, 2).set(0, 0, P("x1", 2)), NotSkewError);
    std::vector<std::vector<Polynomial>> bad{{P("0", 2), P("x1", 2)}, {P("x1", 2), P("0", 2)}};
    CHECK_THROWS_AS(SkewPolyMatrix::from_entries(bad), NotSkewError);
    std::vector<std::vector<Polynomial>> good{{P("0", 2), P("x1", 2)}, {P("-x1", 2), P("0", 2)}};
    SkewPolyMatrix a = SkewPolyMatrix::from_entries(good);
    CHECK(a.at(1, 0) == P("-x1", 2));
    CHECK(a.max_degree() == 1);
}

TEST_CASE("skew_decompose: worked example and hypothesis rejection") {
    // Q = (x2, -x1): A12 = 1
    auto a = skew_decompose({P("x2", 2), P("-x1", 2)}, 1);
    CHECK(a.at(0, 1) == Polynomial::constant(2, 1));
    CHECK_THROWS_AS(skew_decompose({P("x1", 2), P("x2", 2)}, 1), HypothesisViolatedError);
    CHECK_THROWS_AS(skew_decompose({P("x1", 1)}, 1), HypothesisViolatedError);
    // base case: single component must be zero
    auto z = skew_decompose({P("0", 1)}, 1);
    CHECK(z.dim() == 1);
}

TEST_CASE("skew_decompose handles mixed trailing-variable coefficients") {
    // A12 = x3 with k = 2: the split-off parts keep x3-degree in (0, k)
    Polynomial q1 = P("x3*x2^2"), q2 = P("-x3*x1^2"), q3 = P("0", 3);
    auto a = skew_decompose({q1, q2, q3}, 2);
    auto back = a.apply_to_coordinates(2);
    CHECK(back[0] == q1);
    CHECK(back[1] == q2);
    CHECK(back[2] == q3);
}

TEST_CASE("skew_decompose reconstructs random skew systems") {
    for (int iter = 0; iter < 100; ++iter) {
        int dim = 2 + static_cast<int>(g_rng() % 3);
        int k = 1 + static_cast<int>(g_rng() % 3);
        SkewPolyMatrix a = random_skew(dim, dim, 2, 3);
        std::vector<Polynomial> q = a.apply_to_coordinates(k);
        SkewPolyMatrix b = skew_decompose(q, k);
        auto back = b.apply_to_coordinates(k);
        for (int i = 0; i < dim; ++i) CHECK(back[i] == q[i]);
    }
}

TEST_CASE("canonical_decompose: worked examples") {
    // pure rotation: f = 0, A12 = 1
    CanonicalForm cf = canonical_decompose(VF("dim 3; P1 = -x2; P2 = x1; P3 = 0"));
    CHECK(cf.f[0].is_zero());
    CHECK(cf.f[1].is_zero());
    CHECK(cf.f[2].is_zero());
    CHECK(cf.a.at(0, 1) == Polynomial::constant(3, -1));
    // radial field: K = -x1, monomial x1 lands on f_1
    CanonicalForm cf2 = canonical_decompose(VF("dim 3; P1 = 1 - x1^2 - x2^2 - x3^2; P2 = 0; P3 = 0"));
    CHECK(cf2.f[0] == Polynomial::constant(3, 1));
    CHECK(cf2.f[1].is_zero());
    CHECK(cf2.a.is_zero());
    CHECK(assemble(cf2) == VF("dim 3; P1 = 1 - x1^2 - x2^2 - x3^2; P2 = 0; P3 = 0"));
}

TEST_CASE("canonical round trip on random tangent fields") {
    for (int iter = 0; iter < 100; ++iter) {
        int d = 2 + static_cast<int>(g_rng() % 4);
        int m = 1 + static_cast<int>(g_rng() % 5);
        VectorField vf = random_tangent(d, m);
        CanonicalForm cf = canonical_decompose(vf);
        CHECK(assemble(cf) == vf);
        int deg = vf.degree();
        for (const auto& fi : cf.f) CHECK(fi.degree() <= std::max(deg - 2, -1));
        CHECK(cf.a.max_degree() <= std::max(deg - 1, -1));
    }
}

TEST_CASE("layered decomposition: layer degrees and reassembly") {
    for (int iter = 0; iter < 60; ++iter) {
        int d = 2 + static_cast<int>(g_rng() % 3);
        int m = 1 + static_cast<int>(g_rng() % 5);
        VectorField vf = random_tangent(d, m);
        CanonicalForm cf = layered_decompose(vf);
        int deg = vf.degree();
        int expect_layers = deg <= 1 ? 0 : (deg % 2 == 0 ? deg / 2 : (deg - 1) / 2);
        CHECK(cf.layer_count == expect_layers);
        // layered reassembly: P_i = sum_j (1 - s^j) f_ij + sum_j A_ij x_j
        const Polynomial s = radius_squared(d);
        const Polynomial one = Polynomial::constant(d, 1);
        std::vector<Polynomial> rebuilt = cf.a.apply_to_coordinates();
        for (int i = 0; i < d; ++i) {
            for (int j = 1; j <= cf.layer_count; ++j) {
                const Polynomial& fij = cf.f_layers[i][j - 1];
                CHECK(fij.degree() <= deg - 2 * j);
                rebuilt[i] += (one - s.pow(j)) * fij;
            }
            CHECK(rebuilt[i] == vf.components[i]);
        }
        // flat pair assembled from the same form agrees as well
        CHECK(assemble(cf) == vf);
    }
    CHECK_THROWS_AS(layered_decompose(VF("dim 2; P1 = x1; P2 = 0")), NotTangentError);
}

TEST_CASE("assemble validates shape and produces tangent fields for arbitrary data") {
    for (int iter = 0; iter < 50; ++iter) {
        int d = 2 + static_cast<int>(g_rng() % 3);
        CanonicalForm cf;
        for (int i = 0; i < d; ++i) cf.f.push_back(random_poly(d, 3, 3));
        cf.a = random_skew(d, d, 2, 2);
        CHECK(is_tangent(assemble(cf)));
    }
}

TEST_CASE("invariance_check: ring identities") {
    // meridian-type family: lie(x1) = 0
    VectorField vf({P("0", 3), P("x3*x1 - 2*x3*x2", 3), P("-x1*x2 + 2*x2^2", 3)});
    auto cert = invariance_check(vf, P("x1", 3), CheckMode::RingIdentity);
    CHECK(cert.cofactor.is_zero());
    CHECK(cert.mode == CheckMode::RingIdentity);
    // lie(f) = cofactor * f must hold exactly
    CHECK(lie_derivative(vf, cert.f) == cert.cofactor * cert.f);
    CHECK_THROWS_AS(invariance_check(vf, P("x2", 3), CheckMode::RingIdentity), NotInvariantError);
    CHECK_THROWS_AS(invariance_check(vf, P("0", 3), CheckMode::RingIdentity), BadParametersError);
}

TEST_CASE("invariance_check: modulo-sphere certificates carry both multipliers") {
    // rotation in (x1,x2) plus radial correction: the plane x3 = 1/2 is only
    // invariant on the sphere when the radial part vanishes there; build a
    // field where lie(x3 - 1/2) is a sphere multiple but not an f multiple.
    // P3 = s - 1 gives lie(x3 - 1/2) = s - 1.
    VectorField vf({P("-x2", 3), P("x1", 3), P("x1^2 + x2^2 + x3^2 - 1")});
    CHECK(is_tangent(vf));  // radial product is x3 * (sphere polynomial)
    Polynomial f = P("x3 - 1/2", 3);
    auto cert = invariance_check(vf, f, CheckMode::ModuloSphere);
    CHECK(cert.mode == CheckMode::ModuloSphere);
    const Polynomial sphere = unit_sphere_polynomial(3);
    CHECK(lie_derivative(vf, f) == cert.cofactor * f + cert.sphere_multiplier * sphere);
    // the same request fails as a pure ring identity
    CHECK_FALSE(try_invariance_check(vf, f, CheckMode::RingIdentity).has_value());
}

TEST_CASE("first integrals: ring and modulo-sphere modes") {
    VectorField vf = VF("dim 3; P1 = x2; P2 = -x1; P3 = 0");
    CHECK(first_integral_check(vf, P("x3", 3), CheckMode::RingIdentity));
    CHECK(first_integral_check(vf, P("x1^2 + x2^2 + x3^2 - 1"), CheckMode::RingIdentity));
    CHECK_FALSE(first_integral_check(vf, P("x1", 3), CheckMode::RingIdentity));
    CHECK_FALSE(first_integral_check(vf, P("x1", 3), CheckMode::ModuloSphere));
}

TEST_CASE("integrability certificate finds the all-ones point for the classic pair") {
    VectorField vf = VF("dim 3; P1 = x2; P2 = -x1; P3 = 0");
    std::vector<Polynomial> gs{P("x3", 3), P("x1^2 + x2^2 + x3^2 - 1")};
    auto cert = integrability_certificate(vf, gs);
    CHECK(cert.jacobian_rank == 2);
    REQUIRE(cert.point.size() == 3);
    CHECK(cert.point == std::vector<Rational>{1, 1, 1});
    CHECK(cert.modes[0] == CheckMode::RingIdentity);
    CHECK(cert.modes[1] == CheckMode::RingIdentity);
    CHECK_THROWS_AS(integrability_certificate(vf, {P("x1", 3)}), NotFirstIntegralError);
    // dependent integrals can never reach full rank
    CHECK_THROWS_AS(integrability_certificate(vf, {P("x3", 3), P("x3^2", 3)}),
                    IndependenceNotCertifiedError);
}

TEST_CASE("degree-1 fields in odd ambient dimension always have a linear integral") {
    for (int iter = 0; iter < 40; ++iter) {
        int d = (g_rng() % 2) ? 3 : 5;
        SkewPolyMatrix a(d, d);
        std::uniform_int_distribution<long> entry(-5, 5);
        linalg::Matrix mat(d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                Rational v = make_rational(entry(g_rng));
                a.set(i, j, Polynomial::constant(d, v));
                mat.at(i, j) = v;
                mat.at(j, i) = -v;
            }
        }
        VectorField vf(a.apply_to_coordinates());
        CHECK(is_tangent(vf));
        // constant skew of odd dimension is singular: kernel vector -> integral
        auto kernel = linalg::nullspace(mat);
        REQUIRE(!kernel.empty());
        Polynomial g(d);
        for (int i = 0; i < d; ++i) g += Polynomial::constant(d, kernel[0][i]) * Polynomial::variable(d, i);
        CHECK(first_integral_check(vf, g, CheckMode::RingIdentity));
        SkewPolyMatrix back = homogeneous_decompose(vf);
        CHECK(back.apply_to_coordinates() == vf.components);
    }
}

TEST_CASE("homogeneous_decompose rejects bad inputs") {
    CHECK_THROWS_AS(homogeneous_decompose(VF("dim 2; P1 = x1 + 1; P2 = 0")), NotHomogeneousError);
    CHECK_THROWS_AS(homogeneous_decompose(VF("dim 2; P1 = x1; P2 = x2")), NotTangentEverywhereError);
    auto a = homogeneous_decompose(VF("dim 2; P1 = x2; P2 = -x1"));
    CHECK(a.at(0, 1) == Polynomial::constant(2, 1));
}
