// Exact polynomial arithmetic: ring axioms on random inputs, long-division
// oracles worked by hand, text-grammar round trips, substitution clearing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spherevf/errors.hpp"
#include "spherevf/polynomial.hpp"

using namespace spherevf;

namespace {

Polynomial P(const char* text, int vars = -1) { return Polynomial::parse(text, vars); }

Polynomial random_poly(std::mt19937_64& rng, int vars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    Polynomial p(vars);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> e(vars, 0);
        int budget = exp(rng);
        for (int v = 0; v < vars && budget > 0; ++v) {
            std::uniform_int_distribution<int> take(0, budget);
            e[v] = take(rng);
            budget -= e[v];
        }
        p.add_term(Monomial(std::move(e)), make_rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("construction and degree") {
    Polynomial z(3);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(Polynomial::constant(3, 5).degree() == 0);
    CHECK(P("x1^2*x2 + x3").degree() == 3);
    CHECK(P("0").is_zero());
    // cancelling terms must vanish from storage entirely
    Polynomial p = P("x1 + x2") - P("x2", 2);
    CHECK(p.term_count() == 1);
    CHECK(p == P("x1", 2));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        int vars = 1 + static_cast<int>(rng() % 4);
        Polynomial a = random_poly(rng, vars, 4, 6);
        Polynomial b = random_poly(rng, vars, 4, 6);
        Polynomial c = random_poly(rng, vars, 3, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Polynomial::constant(vars, 1) == a);
        CHECK((a * Polynomial(vars)).is_zero());
    }
}

TEST_CASE("division oracle: hand-worked lex example") {
    // divide x1*x2 by x1 + x2 under lex(x1 > x2):
    //   x1*x2 = x2*(x1 + x2) - x2^2, and x2^2 has no x1 factor
    MonomialOrder lex{OrderKind::Lex, {}};
    auto [q, r] = divide_with_remainder(P("x1*x2", 2), P("x1 + x2"), lex);
    CHECK(q == P("x2", 2));
    CHECK(r == P("-x2^2", 2));

    // same division under grlex: leading monomial of x1+x2 is still x1
    auto [q2, r2] = divide_with_remainder(P("x1*x2", 2), P("x1 + x2"));
    CHECK(q2 == P("x2", 2));
    CHECK(r2 == P("-x2^2", 2));
}

TEST_CASE("division: defining identity and remainder property") {
    std::mt19937_64 rng(7);
    MonomialOrder orders[2] = {{OrderKind::GrLex, {}}, {OrderKind::Lex, {}}};
    for (int iter = 0; iter < 150; ++iter) {
        int vars = 1 + static_cast<int>(rng() % 3);
        Polynomial g = random_poly(rng, vars, 5, 7);
        Polynomial f = random_poly(rng, vars, 3, 4);
        if (f.is_zero()) continue;
        const auto& ord = orders[iter % 2];
        auto [q, r] = divide_with_remainder(g, f, ord);
        CHECK(q * f + r == g);
        Monomial lm = f.leading_monomial(ord);
        for (const auto& [m, c] : r.terms()) CHECK_FALSE(lm.divides(m));
    }
}

TEST_CASE("divides is exact multiple detection") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 150; ++iter) {
        int vars = 1 + static_cast<int>(rng() % 3);
        Polynomial f = random_poly(rng, vars, 3, 4);
        Polynomial h = random_poly(rng, vars, 3, 4);
        if (f.is_zero() || f.degree() < 1) continue;
        CHECK(divides(f, f * h));
        // adding a nonzero constant to a multiple breaks divisibility
        Polynomial g = f * h + Polynomial::constant(vars, 1);
        CHECK_FALSE(divides(f, g));
        auto eq = exact_quotient(f * h, f);
        REQUIRE(eq.has_value());
        CHECK(*eq == h);
    }
}

TEST_CASE("division by zero polynomial throws") {
    CHECK_THROWS_AS(divide_with_remainder(P("x1"), Polynomial(1)), DivisionByZeroError);
}

TEST_CASE("derivative and grading") {
    Polynomial p = P("x1^3 + 2*x1*x2 - 7");
    CHECK(p.derivative(0) == P("3*x1^2 + 2*x2"));
    CHECK(p.derivative(1) == P("2*x1", 2));
    auto parts = p.graded_parts();
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == 0);
    CHECK(parts[0].second == P("-7", 2));
    CHECK(parts[1].first == 2);
    CHECK(parts[1].second == P("2*x1*x2"));
    CHECK(parts[2].first == 3);
    CHECK(parts[2].second == P("x1^3", 2));
    Polynomial sum(2);
    for (auto& [d, part] : parts) sum += part;
    CHECK(sum == p);
    CHECK(P("x1^2 + x2^2").is_homogeneous());
    CHECK_FALSE(P("x1^2 + x2").is_homogeneous());
}

TEST_CASE("evaluation and substitution") {
    Polynomial p = P("x1^2*x2 - 1/2");
    CHECK(p.evaluate({make_rational(2), make_rational(3)}) == make_rational(23, 2));
    // substitute x1 -> y1 + y2, x2 -> y1 (same 2-variable ring)
    std::vector<Polynomial> images{P("x1 + x2"), P("x1", 2)};
    CHECK(p.substitute(images) == P("x1^3 + 2*x1^2*x2 + x1*x2^2 - 1/2"));
}

TEST_CASE("substitute_rational_map clears denominators exactly") {
    // p = x1^2 with x1 -> u1/(u1^2+1), clearing power 2:
    // (u1^2+1)^2 * (u1/(u1^2+1))^2 = u1^2
    Polynomial p = P("x1^2", 1);
    Polynomial den = P("u1^2 + 1");
    Polynomial num = P("u1");
    CHECK(substitute_rational_map(p, {num}, den, 2) == P("u1^2"));
    // power 3 leaves one factor of the denominator
    CHECK(substitute_rational_map(p, {num}, den, 3) == P("u1^4 + u1^2"));
    CHECK_THROWS_AS(substitute_rational_map(p, {num}, den, 1), ClearingFailedError);
}

TEST_CASE("text grammar: parse accepts whitespace and both variable letters") {
    CHECK(P("  -  x2 ") == P("-x2", 2));
    CHECK(P("u1^2+u2") == P("x1^2 + x2"));
    CHECK(P("3*x1^2*x2 - 1/2*x3") == P("3x1^2x2-1/2x3"));
    CHECK(P("x1 - x1") == P("0", 1));
    CHECK_THROWS_AS(Polynomial::parse(""), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x1 +"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x0"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x1 & x2"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x5", 3), ParseError);
}

TEST_CASE("text grammar: bit-exact print/parse round trip") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 300; ++iter) {
        int vars = 1 + static_cast<int>(rng() % 5);
        Polynomial p = random_poly(rng, vars, 6, 8);
        std::string s1 = p.str();
        Polynomial q = Polynomial::parse(s1, vars);
        CHECK(q == p);
        CHECK(q.str() == s1);  // printing is a fixed point after one round
    }
    CHECK(Polynomial(3).str() == "0");
    CHECK(P("x1 - x2").str() == "x1 - x2");
    CHECK(P("-1/2*x1^2 + x2 - 5").str() == "-1/2*x1^2 + x2 - 5");
}

TEST_CASE("leading terms under configurable orders") {
    Polynomial p = P("x1*x3^3 + x2^2");
    MonomialOrder grlex;  // default
    CHECK(p.leading_monomial(grlex) == Monomial({1, 0, 3}));
    MonomialOrder lex{OrderKind::Lex, {}};
    CHECK(p.leading_monomial(lex) == Monomial({1, 0, 3}));
    // prioritize x2 over x1 over x3: ranks x2=0, x1=1, x3=2
    MonomialOrder permuted{OrderKind::Lex, {1, 0, 2}};
    CHECK(p.leading_monomial(permuted) == Monomial({0, 2, 0}));
}

TEST_CASE("rational string forms") {
    CHECK(rational_from_string("-3/6") == make_rational(-1, 2));
    CHECK(rational_to_string(make_rational(-1, 2)) == "-1/2");
    CHECK(rational_to_string(make_rational(4, 2)) == "2");
    CHECK_THROWS(rational_from_string("1/0"));
    CHECK_THROWS(rational_from_string("a"));
}
