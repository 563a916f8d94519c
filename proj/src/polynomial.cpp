#include "spherevf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "spherevf/errors.hpp"

namespace spherevf {

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.var_count() != b.var_count())
        throw DimensionMismatchError("order compare across different rings");
    if (kind == OrderKind::GrLex) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da <=> db;
    }
    const int n = a.var_count();
    if (perm.empty()) {
        for (int i = 0; i < n; ++i)
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
        return std::strong_ordering::equal;
    }
    if (static_cast<int>(perm.size()) != n)
        throw DimensionMismatchError("order permutation length mismatch");
    // perm[i] = priority rank of variable i; scan ranks in increasing order
    std::vector<int> by_rank(n, -1);
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || by_rank[perm[i]] != -1)
            throw BadParametersError("order permutation is not a permutation");
        by_rank[perm[i]] = i;
    }
    for (int r = 0; r < n; ++r) {
        int v = by_rank[r];
        if (a.exponent(v) != b.exponent(v)) return a.exponent(v) <=> b.exponent(v);
    }
    return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(int var_count, const Rational& c) {
    Polynomial p(var_count);
    p.add_term(Monomial(var_count), c);
    return p;
}

Polynomial Polynomial::variable(int var_count, int index) {
    if (index < 0 || index >= var_count)
        throw DimensionMismatchError("variable index out of range");
    Polynomial p(var_count);
    p.add_term(Monomial::unit(var_count, index), 1);
    return p;
}

Polynomial Polynomial::from_monomial(Monomial m, const Rational& c) {
    Polynomial p(m.var_count());
    p.add_term(m, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.var_count() != var_count_)
        throw DimensionMismatchError("term variable count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (var_count_ != o.var_count_)
        throw DimensionMismatchError("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(var_count_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(var_count_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(var_count_);
    Polynomial r(var_count_);
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= var_count_)
        throw DimensionMismatchError("derivative variable out of range");
    Polynomial r(var_count_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        auto exps = m.exponents();
        exps[var] -= 1;
        r.add_term(Monomial(std::move(exps)), c * e);
    }
    return r;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != var_count_)
        throw DimensionMismatchError("evaluation point dimension mismatch");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < var_count_; ++i) {
            for (int e = 0; e < m.exponent(i); ++e) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != var_count_)
        throw DimensionMismatchError("substitution image count mismatch");
    int target_vars = images.empty() ? var_count_ : images[0].var_count();
    for (const auto& q : images)
        if (q.var_count() != target_vars)
            throw DimensionMismatchError("substitution images in different rings");
    Polynomial acc(target_vars);
    // cache powers of each image as they are needed
    std::vector<std::vector<Polynomial>> powers(var_count_);
    auto image_power = [&](int var, int e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial::constant(target_vars, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
        return cache[e];
    };
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target_vars, c);
        for (int i = 0; i < var_count_; ++i)
            if (m.exponent(i) > 0) term *= image_power(i, m.exponent(i));
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::homogeneous_part(int deg) const {
    Polynomial r(var_count_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == deg) r.terms_.emplace(m, c);
    return r;
}

std::vector<std::pair<int, Polynomial>> Polynomial::graded_parts() const {
    std::map<int, Polynomial> parts;
    for (const auto& [m, c] : terms_) {
        auto [it, inserted] = parts.emplace(m.degree(), Polynomial(var_count_));
        it->second.terms_.emplace(m, c);
    }
    return {parts.begin(), parts.end()};
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Monomial Polynomial::leading_monomial(const MonomialOrder& ord) const {
    if (terms_.empty()) throw DivisionByZeroError("leading monomial of zero polynomial");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (ord.less(*best, m)) best = &m;
    return *best;
}

Rational Polynomial::leading_coefficient(const MonomialOrder& ord) const {
    return coeff(leading_monomial(ord));
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw BadParametersError("negative polynomial power");
    Polynomial r = Polynomial::constant(var_count_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

DivisionResult divide_with_remainder(const Polynomial& g, const Polynomial& f,
                                     const MonomialOrder& ord) {
    if (f.is_zero()) throw DivisionByZeroError("division by zero polynomial");
    if (f.var_count() != g.var_count())
        throw DimensionMismatchError("division across different rings");
    const Monomial lm_f = f.leading_monomial(ord);
    const Rational lc_f = f.coeff(lm_f);
    Polynomial q(g.var_count()), r(g.var_count()), p = g;
    while (!p.is_zero()) {
        Monomial lm_p = p.leading_monomial(ord);
        Rational lc_p = p.coeff(lm_p);
        if (lm_f.divides(lm_p)) {
            Monomial t = lm_p / lm_f;
            Rational c = lc_p / lc_f;
            q.add_term(t, c);
            p -= Polynomial::from_monomial(t, c) * f;
        } else {
            r.add_term(lm_p, lc_p);
            p.add_term(lm_p, -lc_p);
        }
    }
    return {std::move(q), std::move(r)};
}

bool divides(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) return !f.is_zero();
    return divide_with_remainder(g, f).remainder.is_zero();
}

std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& f) {
    auto [q, r] = divide_with_remainder(g, f);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Polynomial substitute_rational_map(const Polynomial& p, const std::vector<Polynomial>& numerators,
                                   const Polynomial& common_denominator, int clearing_power) {
    if (static_cast<int>(numerators.size()) != p.var_count())
        throw DimensionMismatchError("numerator count mismatch");
    if (clearing_power < p.degree())
        throw ClearingFailedError("clearing power below total degree");
    int target_vars =
        numerators.empty() ? common_denominator.var_count() : numerators[0].var_count();
    if (common_denominator.var_count() != target_vars)
        throw DimensionMismatchError("denominator in wrong ring");
    Polynomial acc(target_vars);
    std::vector<Polynomial> den_pow;  // den_pow[k] = D^k
    den_pow.push_back(Polynomial::constant(target_vars, 1));
    auto dpow = [&](int k) -> const Polynomial& {
        while (static_cast<int>(den_pow.size()) <= k)
            den_pow.push_back(den_pow.back() * common_denominator);
        return den_pow[k];
    };
    std::vector<std::vector<Polynomial>> powers(p.var_count());
    auto npow = [&](int var, int e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial::constant(target_vars, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * numerators[var]);
        return cache[e];
    };
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target_vars, c);
        for (int i = 0; i < p.var_count(); ++i)
            if (m.exponent(i) > 0) term *= npow(i, m.exponent(i));
        term *= dpow(clearing_power - m.degree());
        acc += term;
    }
    return acc;
}

Polynomial radius_squared(int var_count) {
    Polynomial s(var_count);
    for (int i = 0; i < var_count; ++i) s.add_term(Monomial::unit(var_count, i, 2), 1);
    return s;
}

Polynomial unit_sphere_polynomial(int var_count) {
    Polynomial s = radius_squared(var_count);
    s.add_term(Monomial(var_count), -1);
    return s;
}

// --- text form ------------------------------------------------------------

std::string Polynomial::str(char letter) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest term first: iterate the graded-lex map backwards
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool printed_coeff = false;
        if (m.is_constant() || a != 1) {
            out << rational_to_string(a);
            printed_coeff = true;
        }
        bool first_factor = !printed_coeff;
        for (int i = 0; i < var_count_; ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            if (!first_factor) out << '*';
            first_factor = false;
            out << letter << (i + 1);
            if (e > 1) out << '^' << e;
        }
    }
    return out.str();
}

namespace {

struct PolyLexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", pos);
        return Integer(std::string(text.substr(start, pos - start)));
    }
};

struct ParsedTerm {
    Rational coeff;
    std::vector<std::pair<int, int>> factors;  // (0-based var index, exponent)
    int max_index = 0;                         // 1-based, 0 when constant
};

// term := coefficient ['*' factors] | factors ; factor := var ['^' INT]
ParsedTerm parse_term(PolyLexer& lx) {
    ParsedTerm t;
    t.coeff = 1;
    bool saw_coeff = false;
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num = lx.integer();
        Integer den = 1;
        if (lx.accept('/')) {
            den = lx.integer();
            if (den == 0) throw ParseError("zero denominator", lx.pos);
        }
        t.coeff = make_rational(num, den);
        saw_coeff = true;
    }
    bool expect_factor = false;
    if (saw_coeff) {
        if (lx.accept('*'))
            expect_factor = true;
        else if (lx.peek() == 'x' || lx.peek() == 'u')
            expect_factor = true;  // tolerate "2x1" without the '*'
    } else {
        expect_factor = true;
    }
    while (expect_factor) {
        char v = lx.peek();
        if (v != 'x' && v != 'u') {
            if (!saw_coeff) throw ParseError("expected variable or coefficient", lx.pos);
            throw ParseError("expected variable after '*'", lx.pos);
        }
        ++lx.pos;
        Integer idx = lx.integer();
        if (idx < 1 || idx > 64) throw ParseError("variable index out of range", lx.pos);
        int var = static_cast<int>(idx.get_si());
        int exp = 1;
        if (lx.accept('^')) {
            Integer e = lx.integer();
            if (e < 1 || e > 4096) throw ParseError("exponent out of range", lx.pos);
            exp = static_cast<int>(e.get_si());
        }
        t.factors.emplace_back(var - 1, exp);
        t.max_index = std::max(t.max_index, var);
        saw_coeff = true;
        expect_factor = lx.accept('*');
        if (!expect_factor && (lx.peek() == 'x' || lx.peek() == 'u')) expect_factor = true;
    }
    return t;
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int var_count) {
    PolyLexer lx{text};
    std::vector<std::pair<ParsedTerm, int>> terms;  // (term, sign)
    int max_index = 0;
    bool first = true;
    while (!lx.eof()) {
        int s = 1;
        if (lx.accept('-'))
            s = -1;
        else if (lx.accept('+')) {
            if (first) { /* leading '+' allowed */
            }
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", lx.pos);
        }
        if (lx.eof()) throw ParseError("dangling sign", lx.pos);
        ParsedTerm t = parse_term(lx);
        max_index = std::max(max_index, t.max_index);
        terms.emplace_back(std::move(t), s);
        first = false;
    }
    if (terms.empty()) throw ParseError("empty polynomial", 0);
    int vc = var_count >= 0 ? var_count : std::max(max_index, 1);
    if (max_index > vc) throw ParseError("variable index exceeds ring dimension", 0);
    Polynomial p(vc);
    for (const auto& [t, s] : terms) {
        Monomial m(vc);
        std::vector<int> exps(vc, 0);
        for (auto [var, e] : t.factors) exps[var] += e;
        p.add_term(Monomial(std::move(exps)), s > 0 ? t.coeff : -t.coeff);
    }
    return p;
}

}  // namespace spherevf
