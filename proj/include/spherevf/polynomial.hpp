#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spherevf/monomial.hpp"
#include "spherevf/rational.hpp"

namespace spherevf {

enum class OrderKind { Lex, GrLex };

/// Term order used by division. `perm[i]` gives the priority rank of
/// variable i: rank 0 is compared first. An empty perm means identity.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrLex;
    std::vector<int> perm;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no zero coefficients are stored; terms are keyed by graded-lex
/// order, so iteration is deterministic and rbegin() is the graded-lex
/// leading term. The zero polynomial has degree -1.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() : var_count_(0) {}
    explicit Polynomial(int var_count) : var_count_(var_count) {}

    static Polynomial zero(int var_count) { return Polynomial(var_count); }
    static Polynomial constant(int var_count, const Rational& c);
    static Polynomial variable(int var_count, int index);  // x_{index+1}
    static Polynomial from_monomial(Monomial m, const Rational& c);

    int var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    int degree() const;  // total degree, -1 for zero
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;
    /// Coefficient of the constant term.
    Rational constant_term() const { return coeff(Monomial(var_count_)); }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    Polynomial operator*(const Rational& c) const;
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

    bool operator==(const Polynomial& o) const {
        return var_count_ == o.var_count_ && terms_ == o.terms_;
    }

    Polynomial derivative(int var) const;

    /// Degree in one particular variable (-1 for zero).
    int degree_in(int var) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Ring homomorphism substituting images[i] for variable i. Images live
    /// in a common target ring whose variable count may differ from this one.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Homogeneous component of the given total degree.
    Polynomial homogeneous_part(int deg) const;
    /// All nonzero homogeneous components as (degree, part), ascending.
    std::vector<std::pair<int, Polynomial>> graded_parts() const;
    bool is_homogeneous() const;

    Monomial leading_monomial(const MonomialOrder& ord) const;  // throws on zero
    Rational leading_coefficient(const MonomialOrder& ord) const;

    Polynomial pow(int k) const;

    /// Canonical text form; `letter` names the variables (x1.., u1..).
    std::string str(char letter = 'x') const;

    /// Parses the textual grammar. var_count < 0 infers the count from the
    /// largest variable index present (at least 1).
    static Polynomial parse(std::string_view text, int var_count = -1);

private:
    void check_same_ring(const Polynomial& o) const;

    int var_count_;
    TermMap terms_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Division of g by a single nonzero divisor f under `ord`: g = q*f + r and
/// no monomial of r is divisible by the leading monomial of f. For a single
/// divisor this (q, r) is unique, so r == 0 exactly when f divides g.
DivisionResult divide_with_remainder(const Polynomial& g, const Polynomial& f,
                                     const MonomialOrder& ord = {});

bool divides(const Polynomial& f, const Polynomial& g);

/// Quotient when f divides g exactly, std::nullopt otherwise.
std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& f);

/// D^clearingPower * p(N_1/D, ..., N_d/D) computed term by term; requires
/// clearingPower >= deg p so no denominators survive.
Polynomial substitute_rational_map(const Polynomial& p, const std::vector<Polynomial>& numerators,
                                   const Polynomial& common_denominator, int clearing_power);

/// x_1^2 + ... + x_d^2 - 1.
Polynomial unit_sphere_polynomial(int var_count);
/// x_1^2 + ... + x_d^2.
Polynomial radius_squared(int var_count);

}  // namespace spherevf
