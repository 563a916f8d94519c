#include "spherevf/extactic.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "spherevf/errors.hpp"
#include "spherevf/univariate.hpp"

namespace spherevf {

namespace {

// Laplace expansion along the first remaining row, memoized on the set of
// still-unused columns. 2^k subproblems, fine for the k <= 6 regime.
class MinorExpansion {
public:
    explicit MinorExpansion(const std::vector<std::vector<Polynomial>>& m)
        : m_(m), k_(static_cast<int>(m.size())), vars_(m[0][0].var_count()) {}

    Polynomial run() { return det(0, (1u << k_) - 1); }

private:
    Polynomial det(int row, unsigned cols) {
        if (row == k_) return Polynomial::constant(vars_, 1);
        auto it = memo_.find(cols);
        if (it != memo_.end()) return it->second;
        Polynomial acc(vars_);
        int sign = 1;
        for (int j = 0; j < k_; ++j) {
            if (!(cols & (1u << j))) continue;
            if (!m_[row][j].is_zero()) {
                Polynomial sub = det(row + 1, cols & ~(1u << j));
                acc += sign > 0 ? m_[row][j] * sub : -(m_[row][j] * sub);
            }
            sign = -sign;
        }
        memo_.emplace(cols, acc);
        return acc;
    }

    const std::vector<std::vector<Polynomial>>& m_;
    int k_;
    int vars_;
    std::unordered_map<unsigned, Polynomial> memo_;
};

// One-step fraction-free elimination; every division is exact in the
// polynomial ring, so no rational functions appear.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
    const int k = static_cast<int>(m.size());
    const int vars = m[0][0].var_count();
    Polynomial prev_pivot = Polynomial::constant(vars, 1);
    int sign = 1;
    for (int col = 0; col < k - 1; ++col) {
        int pivot = -1;
        for (int i = col; i < k; ++i) {
            if (!m[i][col].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return Polynomial(vars);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (int i = col + 1; i < k; ++i) {
            for (int j = col + 1; j < k; ++j) {
                Polynomial num = m[col][col] * m[i][j] - m[i][col] * m[col][j];
                auto q = exact_quotient(num, prev_pivot);
                if (!q) throw InternalInconsistencyError("fraction-free step not exact");
                m[i][j] = std::move(*q);
            }
            m[i][col] = Polynomial(vars);
        }
        prev_pivot = m[col][col];
    }
    return sign > 0 ? m[k - 1][k - 1] : -m[k - 1][k - 1];
}

}  // namespace

Polynomial poly_matrix_determinant(const std::vector<std::vector<Polynomial>>& m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) throw DimensionMismatchError("empty matrix");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != k)
            throw DimensionMismatchError("matrix is not square");
    if (k <= 6) return MinorExpansion(m).run();
    return bareiss_determinant(m);
}

Polynomial extactic_polynomial(const VectorField& vf, const std::vector<Polynomial>& basis) {
    const int k = static_cast<int>(basis.size());
    if (k == 0) throw BadParametersError("empty basis");
    for (const auto& p : basis)
        if (p.var_count() != vf.dim())
            throw DimensionMismatchError("basis element in wrong ring");
    // rational independence of the basis: rank of the coefficient matrix
    std::map<Monomial, int> monomial_index;
    for (const auto& p : basis)
        for (const auto& [m, c] : p.terms()) monomial_index.emplace(m, 0);
    int idx = 0;
    for (auto& [m, i] : monomial_index) i = idx++;
    linalg::Matrix coeffs(k, std::max(idx, 1));
    for (int i = 0; i < k; ++i)
        for (const auto& [m, c] : basis[i].terms()) coeffs.at(i, monomial_index[m]) = c;
    if (linalg::rank(std::move(coeffs)) != k)
        throw DependentBasisError("basis is linearly dependent over the rationals");

    std::vector<std::vector<Polynomial>> rows;
    rows.push_back(basis);
    for (int j = 1; j < k; ++j) {
        std::vector<Polynomial> row;
        row.reserve(k);
        for (int i = 0; i < k; ++i) row.push_back(lie_derivative(vf, rows[j - 1][i]));
        rows.push_back(std::move(row));
    }
    return poly_matrix_determinant(rows);
}

int multiplicity(const Polynomial& e, const Polynomial& f) {
    if (e.is_zero()) throw ZeroExtacticError("zero polynomial is divisible by every power");
    if (f.degree() < 1) throw BadParametersError("multiplicity of a constant divisor");
    int t = 0;
    Polynomial cur = e;
    for (;;) {
        auto q = exact_quotient(cur, f);
        if (!q) return t;
        cur = std::move(*q);
        ++t;
    }
}

// --- parallels ------------------------------------------------------------

namespace {

// p restricted to x_i = point[i] for i < d-1, as a dense univariate in x_d.
uni::UPoly specialize_to_last(const Polynomial& p, const std::vector<Rational>& point) {
    const int d = p.var_count();
    uni::UPoly u;
    for (const auto& [m, c] : p.terms()) {
        Rational v = c;
        for (int i = 0; i + 1 < d; ++i)
            for (int e = 0; e < m.exponent(i); ++e) v *= point[i];
        std::size_t k = static_cast<std::size_t>(m.exponent(d - 1));
        if (u.size() <= k) u.resize(k + 1, Rational(0));
        u[k] += v;
    }
    return uni::normalized(std::move(u));
}

// residual of g after stripping all rational roots (with multiplicity)
uni::UPoly strip_rational_roots(uni::UPoly g) {
    if (uni::degree(g) < 1) return g;
    for (const Rational& r : uni::rational_roots(g)) {
        while (!g.empty() && uni::evaluate(g, r) == 0) g = uni::deflate(g, r);
    }
    return g;
}

// Sturm count of distinct real roots of p strictly inside (-1, 1).
int real_roots_in_unit_interval(const uni::UPoly& p) {
    if (uni::degree(p) < 1) return 0;
    std::vector<uni::UPoly> chain{p, uni::derivative(p)};
    while (true) {
        uni::UPoly r = uni::rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    auto variations_at = [&](const Rational& x) {
        int v = 0, prev = 0;
        for (const auto& q : chain) {
            int s = sgn(uni::evaluate(q, x));
            if (prev != 0 && s != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    };
    // roots in (-1, 1]: V(-1) - V(1); x = 1 with |k| < 1 excluded separately
    int count = variations_at(make_rational(-1)) - variations_at(make_rational(1));
    if (uni::evaluate(p, make_rational(1)) == 0) --count;
    return std::max(count, 0);
}

std::string univariate_flag_text(const uni::UPoly& g, int var_index_1based) {
    // print as a polynomial in the named variable for a readable flag
    std::string name = "x" + std::to_string(var_index_1based);
    std::string out;
    for (std::size_t k = g.size(); k-- > 0;) {
        if (g[k] == 0) continue;
        if (!out.empty()) out += sgn(g[k]) < 0 ? " - " : " + ";
        else if (sgn(g[k]) < 0) out += "-";
        Rational a = abs(g[k]);
        if (k == 0 || a != 1) out += rational_to_string(a);
        if (k > 0) {
            if (a != 1) out += "*";
            out += name;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

HyperplaneSearchResult find_parallels(const VectorField& vf) {
    const int d = vf.dim();
    if (d < 2) throw DimensionMismatchError("parallels need ambient dimension >= 2");
    HyperplaneSearchResult res;
    res.kind = HyperplaneKind::Parallel;
    const Polynomial& last = vf.components[d - 1];
    res.extactic = last;  // determinant of [[1, x_d], [0, P_d]]
    if (last.is_zero()) {
        res.all_invariant = true;
        res.complete = true;
        return res;
    }

    std::vector<uni::UPoly> specials;
    for (long t = 1; static_cast<int>(specials.size()) < 3 && t <= 60; ++t) {
        std::vector<Rational> point(d - 1);
        for (int i = 0; i + 1 < d; ++i) point[i] = make_rational(t + i);
        uni::UPoly u = specialize_to_last(last, point);
        if (!u.empty()) specials.push_back(std::move(u));
    }
    std::mt19937_64 rng(0x70617261ULL);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 3);
    for (int attempt = 0; static_cast<int>(specials.size()) < 3 && attempt < 400; ++attempt) {
        std::vector<Rational> point(d - 1);
        for (int i = 0; i + 1 < d; ++i) point[i] = make_rational(num(rng), den(rng));
        uni::UPoly u = specialize_to_last(last, point);
        if (!u.empty()) specials.push_back(std::move(u));
    }
    if (static_cast<int>(specials.size()) < 3)
        throw InternalInconsistencyError("nonzero component vanished on every specialization");

    std::set<Rational> candidates;
    bool overflow = false;
    try {
        bool first = true;
        for (const auto& u : specials) {
            auto roots = uni::rational_roots(u);
            std::set<Rational> rs(roots.begin(), roots.end());
            if (first) {
                candidates = std::move(rs);
                first = false;
            } else {
                std::set<Rational> keep;
                std::set_intersection(candidates.begin(), candidates.end(), rs.begin(), rs.end(),
                                      std::inserter(keep, keep.begin()));
                candidates = std::move(keep);
            }
        }
    } catch (const uni::RootSearchOverflow&) {
        overflow = true;
    }
    if (overflow) {
        res.complete = false;
        res.flags.push_back("root search overflow: candidate offsets unresolved");
        return res;
    }

    for (const Rational& k : candidates) {
        if (!(abs(k) < 1)) continue;  // does not cut the sphere in an (n-1)-sphere
        Polynomial f = Polynomial::variable(d, d - 1) - Polynomial::constant(d, k);
        auto cert = try_invariance_check(vf, f, CheckMode::RingIdentity);
        if (!cert) continue;
        HyperplaneFinding finding;
        finding.a.assign(d, Rational(0));
        finding.a[d - 1] = 1;
        finding.b = -k;
        finding.cofactor = cert->cofactor;
        finding.multiplicity = multiplicity(res.extactic, f);
        res.findings.push_back(std::move(finding));
    }
    res.complete = true;  // exhaustive for rational offsets

    try {
        uni::UPoly g = specials[0];
        for (std::size_t i = 1; i < specials.size(); ++i) g = uni::gcd(g, specials[i]);
        uni::UPoly residual = uni::squarefree_part(strip_rational_roots(g));
        if (uni::degree(residual) >= 2 && real_roots_in_unit_interval(residual) > 0)
            res.flags.push_back("possible nonrational offsets unresolved in factor " +
                                univariate_flag_text(residual, d));
    } catch (const uni::RootSearchOverflow&) {
        res.flags.push_back("root search overflow while probing nonrational offsets");
    }
    return res;
}

// --- meridians ------------------------------------------------------------

namespace {

// E with x1 replaced by t*x2; slot 0 is reused for t. Groups coefficients by
// the residual monomial in (x2, ..., xd) and returns the gcd of the
// univariate coefficient polynomials in t.
uni::UPoly slope_polynomial(const Polynomial& e) {
    std::map<std::vector<int>, uni::UPoly> groups;
    for (const auto& [m, c] : e.terms()) {
        std::vector<int> key = m.exponents();
        int a = key[0];
        key[0] = 0;
        key[1] += a;  // x1^a -> t^a x2^a
        auto& u = groups[key];
        if (static_cast<int>(u.size()) <= a) u.resize(a + 1, Rational(0));
        u[a] += c;
    }
    uni::UPoly g;
    for (auto& [key, u] : groups) g = uni::gcd(g, uni::normalized(std::move(u)));
    return g;
}

linalg::Vec normalized_meridian_vector(linalg::Vec a, int d) {
    if (static_cast<int>(a.size()) == d - 1) a.push_back(Rational(0));
    if (static_cast<int>(a.size()) != d)
        throw BadParametersError("candidate length must match the ambient dimension");
    if (a[d - 1] != 0)
        throw BadParametersError("meridian candidates must not involve the last coordinate");
    return linalg::primitive_integer_form(std::move(a));
}

}  // namespace

HyperplaneSearchResult find_meridians(const VectorField& vf,
                                      const std::vector<linalg::Vec>& candidates) {
    const int d = vf.dim();
    if (d < 3) throw DimensionMismatchError("meridians need ambient dimension >= 3");
    const int n = d - 1;
    HyperplaneSearchResult res;
    res.kind = HyperplaneKind::Meridian;

    std::vector<Polynomial> basis;
    for (int i = 0; i < n; ++i) basis.push_back(Polynomial::variable(d, i));
    res.extactic = extactic_polynomial(vf, basis);
    const bool zero_extactic = res.extactic.is_zero();
    if (zero_extactic) {
        res.degenerate_extactic = true;
        res.flags.push_back("zero extactic: infinitely many or degenerate; multiplicities unavailable");
    }

    auto verify_and_add = [&](const linalg::Vec& a) {
        Polynomial f(d);
        for (int i = 0; i < d; ++i)
            if (a[i] != 0) f.add_term(Monomial::unit(d, i), a[i]);
        if (f.is_zero()) return;
        auto cert = try_invariance_check(vf, f, CheckMode::RingIdentity);
        if (!cert) return;
        HyperplaneFinding finding;
        finding.a = a;
        finding.b = 0;
        finding.cofactor = cert->cofactor;
        finding.multiplicity = zero_extactic ? 0 : multiplicity(res.extactic, f);
        res.findings.push_back(std::move(finding));
    };

    std::set<std::vector<std::string>> seen;  // dedupe by printed primitive form
    auto dedup_key = [](const linalg::Vec& a) {
        std::vector<std::string> k;
        k.reserve(a.size());
        for (const auto& x : a) k.push_back(rational_to_string(x));
        return k;
    };

    if (n == 2) {
        // the line x2 = 0, then all rational slopes x1 - t*x2 = 0
        linalg::Vec e2{Rational(0), Rational(1), Rational(0)};
        verify_and_add(e2);
        bool complete = !zero_extactic;
        if (!zero_extactic) {
            try {
                uni::UPoly g = slope_polynomial(res.extactic);
                if (g.empty())
                    throw InternalInconsistencyError("slope system inconsistent with nonzero extactic");
                for (const Rational& t : uni::rational_roots(g)) {
                    linalg::Vec a{Rational(1), -t, Rational(0)};
                    verify_and_add(linalg::primitive_integer_form(std::move(a)));
                }
                uni::UPoly residual = uni::squarefree_part(strip_rational_roots(g));
                if (uni::count_distinct_real_roots(residual) > 0) {
                    complete = false;
                    res.flags.push_back("possible nonrational slopes unresolved in factor " +
                                        univariate_flag_text(residual, 1));
                }
            } catch (const uni::RootSearchOverflow&) {
                complete = false;
                res.flags.push_back("root search overflow: candidate slopes unresolved");
            }
        }
        res.complete = complete;
        for (const auto& f : res.findings) seen.insert(dedup_key(f.a));
    } else {
        res.complete = false;
        res.flags.push_back("verification-only search: supplied and kernel candidates checked");
    }

    // kernel candidates for degree-1 homogeneous fields: rows of the constant
    // coefficient matrix annihilating a give ring-invariant hyperplanes
    bool linear_homogeneous = vf.degree() <= 1;
    for (const auto& p : vf.components)
        linear_homogeneous = linear_homogeneous && (p.is_zero() || (p.is_homogeneous() && p.degree() == 1));
    if (linear_homogeneous && !vf.is_zero()) {
        linalg::Matrix m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m.at(i, j) = vf.components[i].coeff(Monomial::unit(d, j));
        // invariance of a^T x needs a^T M = K a^T; tangent fields have skew M
        // and K = 0, so kernel vectors of M^T are the candidates
        linalg::Matrix mt(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) mt.at(i, j) = m.at(j, i);
        for (auto& v : linalg::nullspace(std::move(mt))) {
            if (v[d - 1] != 0) continue;  // great but not meridian-type
            auto key = dedup_key(v);
            if (seen.insert(key).second) verify_and_add(v);
        }
    }

    for (const auto& c : candidates) {
        linalg::Vec a = normalized_meridian_vector(c, d);
        auto key = dedup_key(a);
        if (seen.insert(key).second) verify_and_add(a);
    }
    return res;
}

}  // namespace spherevf
