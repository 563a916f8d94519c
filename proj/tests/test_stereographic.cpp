// Stereographic projection from the north pole: denominator clearing, the
// projected field, and transfer of equator invariance.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spherevf/errors.hpp"
#include "spherevf/sphere_geometry.hpp"
#include "spherevf/stereographic.hpp"
#include "spherevf/vector_field.hpp"

using namespace spherevf;

namespace {

Polynomial P(const char* text, int vars = -1) { return Polynomial::parse(text, vars); }

VectorField VF(const char* text) { return parse_vector_field(text); }

Polynomial U(const char* text, int vars) {
    // same grammar; the variable letter is cosmetic, so x-names parse fine
    return Polynomial::parse(text, vars);
}

Polynomial random_poly(std::mt19937_64& rng, int vars, int max_deg, int terms) {
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, max_deg);
    Polynomial p(vars);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(vars, 0);
        int budget = max_deg;
        for (int i = 0; i < vars && budget > 0; ++i) {
            int k = expo(rng) % (budget + 1);
            e[i] = k;
            budget -= k;
        }
        p.add_term(Monomial(e), make_rational(coeff(rng)));
    }
    return p;
}

// random tangent field of degree <= m on the sphere in d variables; when
// invariant_equator is set, the last row of the rotation matrix is made of
// multiples of x_d so that {x_d = 0} stays invariant modulo the sphere
VectorField random_tangent(std::mt19937_64& rng, int d, int m, bool invariant_equator) {
    CanonicalForm cf;
    cf.f.assign(d, Polynomial(d));
    SkewPolyMatrix a(d, d);
    for (int i = 0; i < d; ++i) {
        if (m >= 2) cf.f[i] = random_poly(rng, d, m - 2, 3);
        for (int j = i + 1; j < d; ++j) a.set(i, j, random_poly(rng, d, m - 1, 2));
    }
    if (invariant_equator) {
        const Polynomial xd = Polynomial::variable(d, d - 1);
        for (int j = 0; j + 1 < d; ++j)
            a.set(d - 1, j, random_poly(rng, d, m - 2, 2) * xd);
        cf.f[d - 1] = random_poly(rng, d, m - 2, 3);
    }
    cf.a = a;
    return assemble(cf);
}

Polynomial unit_circle(int n) {
    return radius_squared(n) - Polynomial::constant(n, make_rational(1));
}

}  // namespace

TEST_CASE("denominator clearing on fixed polynomials") {
    CHECK(tilde(P("-x2", 3), 1, 2) == U("-2*x2", 2));
    CHECK(tilde(P("x3", 3), 1, 2) == U("x1^2 + x2^2 - 1", 2));
    CHECK(tilde(P("1", 3), 0, 2) == U("1", 2));
    CHECK(tilde(P("x1", 3), 1, 2) == U("2*x1", 2));
    // extra clearing powers multiply by the denominator
    CHECK(tilde(P("x3", 3), 2, 2) ==
          U("x1^2 + x2^2 - 1", 2) * U("x1^2 + x2^2 + 1", 2));
    // the sphere polynomial maps to zero: the inverse map lands on the sphere
    CHECK(tilde(unit_sphere_polynomial(3), 2, 2).is_zero());
    CHECK(tilde(unit_sphere_polynomial(4), 2, 3).is_zero());

    CHECK_THROWS_AS(tilde(P("x3^2", 3), 1, 2), ClearingFailedError);
    CHECK_THROWS_AS(tilde(P("x1", 2), 1, 2), DimensionMismatchError);
    CHECK_THROWS_AS(tilde(P("x1", 1), 1, 0), BadParametersError);
}

TEST_CASE("clearing is multiplicative over products") {
    std::mt19937_64 rng(0x73746572);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 2 + rep % 2;
        const Polynomial p = random_poly(rng, n + 1, 2, 3);
        const Polynomial q = random_poly(rng, n + 1, 2, 3);
        const int dp = std::max(p.degree(), 0), dq = std::max(q.degree(), 0);
        CHECK(tilde(p * q, dp + dq, n) == tilde(p, dp, n) * tilde(q, dq, n));
    }
}

TEST_CASE("projected fields on fixed examples") {
    SUBCASE("axis rotation becomes a plane rotation") {
        const auto proj = push_forward(VF("dim 3; P1 = -x2; P2 = x1; P3 = 0"));
        CHECK(proj.n == 2);
        CHECK(proj.source_degree == 1);
        REQUIRE(proj.r.size() == 2);
        CHECK(proj.r[0] == U("-2*x2", 2));
        CHECK(proj.r[1] == U("2*x1", 2));
        CHECK(proj.time_rescale == "ds = dt / (2*(|u|^2 + 1)^0)");
    }
    SUBCASE("degree-two field with zero last component") {
        const auto proj = push_forward(VF("dim 3; P1 = x2*x3; P2 = -x1*x3; P3 = 0"));
        const Polynomial circle = unit_circle(2);
        CHECK(proj.r[0] == U("2*x2", 2) * circle);
        CHECK(proj.r[1] == U("-2*x1", 2) * circle);
        // last component zero: the radial product of the projection is zero
        Polynomial radial(2);
        for (int i = 0; i < 2; ++i) radial += proj.r[i] * Polynomial::variable(2, i);
        CHECK(radial.is_zero());
    }
    SUBCASE("rotation through the pole, by hand") {
        const auto proj = push_forward(VF("dim 3; P1 = -x3; P2 = 0; P3 = x1"));
        REQUIRE(proj.r.size() == 2);
        CHECK(proj.r[0] == U("1 + x1^2 - x2^2", 2));
        CHECK(proj.r[1] == U("2*x1*x2", 2));
        // degree bound m + 1 is attained here
        CHECK(proj.r[0].degree() == 2);
    }
    SUBCASE("zero field and error shapes") {
        const auto proj = push_forward(VF("dim 3; P1 = 0"));
        CHECK(proj.r[0].is_zero());
        CHECK(proj.r[1].is_zero());
        CHECK_THROWS_AS(push_forward(VF("dim 2; P1 = x1; P2 = 0")), NotTangentError);
        CHECK_THROWS_AS(push_forward(VF("dim 1; P1 = 0")), DimensionMismatchError);
    }
}

TEST_CASE("radial identity of the projection on random tangent fields") {
    std::mt19937_64 rng(0x73756d69);
    const Rational half = make_rational(1, 2);
    for (int rep = 0; rep < 40; ++rep) {
        const int d = 3 + rep % 2;
        const int m = 1 + rep % 3;
        const VectorField vf = random_tangent(rng, d, m, rep % 4 == 0);
        REQUIRE(is_tangent(vf));
        const int n = d - 1;
        const int mm = std::max(vf.degree(), 0);
        const auto proj = push_forward(vf);
        const Polynomial last = tilde(vf.components[n], mm, n);

        // both cleared identities forced by tangency
        Polynomial radial(n);
        Polynomial tilde_radial(n);
        for (int i = 0; i < n; ++i) {
            radial += proj.r[i] * Polynomial::variable(n, i);
            tilde_radial += tilde(vf.components[i], mm, n) * Polynomial::variable(n, i);
        }
        CHECK(radial == half * (radius_squared(n) + Polynomial::constant(n, 1)) * last);
        CHECK((make_rational(2) * tilde_radial + unit_circle(n) * last).is_zero());

        // degree never exceeds twice the source degree, and exceeds
        // 2m - 1 only when the north pole moves
        std::vector<Rational> pole(d, Rational(0));
        pole[d - 1] = Rational(1);
        bool pole_fixed = true;
        for (const auto& comp : vf.components)
            if (comp.evaluate(pole) != 0) pole_fixed = false;
        const int bound = pole_fixed ? 2 * mm - 1 : 2 * mm;
        for (int i = 0; i < n; ++i) CHECK(proj.r[i].degree() <= bound);
    }
}

TEST_CASE("projected degree reaches twice the source degree off a fixed pole") {
    // the pole is not a fixed point here, so one component tops out at 2m
    const auto proj = push_forward(VF("dim 3; P1 = x3^2; P2 = 0; P3 = -x1*x3"));
    const Polynomial circle = unit_circle(2);
    CHECK(proj.r[0] == circle * (circle - make_rational(2) * U("x1^2", 2)));
    CHECK(proj.r[0].degree() == 4);
    // fixing the pole caps the degree at 2m - 1, still above m + 1
    const auto fixed = push_forward(VF("dim 3; P1 = x1*x3^2; P2 = 0; P3 = -x1^2*x3"));
    CHECK(fixed.r[0] ==
          make_rational(2) * U("x1", 2) * circle * (circle - make_rational(2) * U("x1^2", 2)));
    CHECK(fixed.r[0].degree() == 5);
}

TEST_CASE("equator invariance transfers through the projection") {
    SUBCASE("fixed verdicts") {
        CHECK(equator_transfer_check(VF("dim 3; P1 = -x2; P2 = x1; P3 = 0")));
        // rotation through the pole moves the equator
        CHECK_FALSE(equator_transfer_check(VF("dim 3; P1 = -x3; P2 = 0; P3 = x1")));
        // last component proportional to the sphere polynomial clears to zero
        CHECK(equator_transfer_check(VF("dim 3; P1 = 0; P2 = 0; P3 = 1 - x1^2 - x2^2 - x3^2")));
        CHECK_THROWS_AS(equator_transfer_check(VF("dim 3; P1 = x1")), NotTangentError);
    }
    SUBCASE("agreement with the sphere-side decision") {
        std::mt19937_64 rng(0x65717561);
        int invariant_hits = 0, moving_hits = 0;
        for (int rep = 0; rep < 50; ++rep) {
            const int d = 3 + rep % 2;
            const int m = 1 + rep % 3;
            const VectorField vf = random_tangent(rng, d, m, rep % 2 == 0);
            linalg::Vec normal(d, Rational(0));
            normal[d - 1] = Rational(1);
            const Hyperplane equator(normal, Rational(0));
            const bool on_sphere =
                try_sphere_invariance_check(vf, equator).has_value();
            CHECK(equator_transfer_check(vf) == on_sphere);
            (on_sphere ? invariant_hits : moving_hits) += 1;
        }
        CHECK(invariant_hits >= 20);
        CHECK(moving_hits > 0);
    }
}
