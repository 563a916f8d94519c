#include "spherevf/vector_field.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "spherevf/errors.hpp"
#include "spherevf/linalg.hpp"

namespace spherevf {

VectorField::VectorField(std::vector<Polynomial> comps) : components(std::move(comps)) {
    if (components.empty()) throw DimensionMismatchError("vector field needs at least one component");
    const int d = static_cast<int>(components.size());
    for (const auto& p : components)
        if (p.var_count() != d)
            throw DimensionMismatchError("component ring does not match field dimension");
}

int VectorField::degree() const {
    int m = -1;
    for (const auto& p : components) m = std::max(m, p.degree());
    return m;
}

bool VectorField::is_zero() const {
    return std::all_of(components.begin(), components.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial lie_derivative(const VectorField& vf, const Polynomial& f) {
    if (f.var_count() != vf.dim())
        throw DimensionMismatchError("lie derivative argument in wrong ring");
    Polynomial acc(vf.dim());
    for (int i = 0; i < vf.dim(); ++i) acc += vf.components[i] * f.derivative(i);
    return acc;
}

Polynomial lie_power(const VectorField& vf, const Polynomial& f, int j) {
    if (j < 0) throw BadParametersError("negative derivative power");
    Polynomial r = f;
    for (int t = 0; t < j; ++t) r = lie_derivative(vf, r);
    return r;
}

TangencyCertificate tangency_cofactor(const VectorField& vf) {
    const int d = vf.dim();
    Polynomial s = Polynomial(d);
    for (int i = 0; i < d; ++i) s += vf.components[i] * Polynomial::variable(d, i);
    auto [q, r] = divide_with_remainder(s, unit_sphere_polynomial(d));
    if (!r.is_zero())
        throw NotTangentError("radial product is not a multiple of the sphere polynomial");
    return {std::move(q)};
}

bool is_tangent(const VectorField& vf) {
    try {
        tangency_cofactor(vf);
        return true;
    } catch (const NotTangentError&) {
        return false;
    }
}

// --- skew matrices ----------------------------------------------------------

SkewPolyMatrix::SkewPolyMatrix(int dim, int var_count)
    : dim_(dim), var_count_(var_count),
      entries_(static_cast<std::size_t>(dim) * dim, Polynomial(var_count)) {}

SkewPolyMatrix SkewPolyMatrix::from_entries(std::vector<std::vector<Polynomial>> entries) {
    const int d = static_cast<int>(entries.size());
    if (d == 0) throw DimensionMismatchError("empty matrix");
    const int vc = entries[0].empty() ? 0 : entries[0][0].var_count();
    SkewPolyMatrix m(d, vc);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(entries[i].size()) != d)
            throw DimensionMismatchError("matrix is not square");
        for (int j = 0; j < d; ++j) {
            if (entries[i][j].var_count() != vc)
                throw DimensionMismatchError("matrix entries in different rings");
            m.entries_[static_cast<std::size_t>(i) * d + j] = entries[i][j];
        }
    }
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            if (!(m.at(i, j) + m.at(j, i)).is_zero())
                throw NotSkewError("matrix entries violate A[i][j] == -A[j][i]");
    return m;
}

const Polynomial& SkewPolyMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw DimensionMismatchError("matrix index out of range");
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
}

void SkewPolyMatrix::set(int i, int j, const Polynomial& p) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw DimensionMismatchError("matrix index out of range");
    if (p.var_count() != var_count_)
        throw DimensionMismatchError("matrix entry in wrong ring");
    if (i == j) {
        if (!p.is_zero()) throw NotSkewError("nonzero diagonal entry");
        return;
    }
    entries_[static_cast<std::size_t>(i) * dim_ + j] = p;
    entries_[static_cast<std::size_t>(j) * dim_ + i] = -p;
}

int SkewPolyMatrix::max_degree() const {
    int m = -1;
    for (const auto& p : entries_) m = std::max(m, p.degree());
    return m;
}

bool SkewPolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<Polynomial> SkewPolyMatrix::apply_to_coordinates(int power) const {
    std::vector<Polynomial> out;
    out.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
        Polynomial acc(var_count_);
        for (int j = 0; j < dim_; ++j)
            acc += at(i, j) * Polynomial::from_monomial(Monomial::unit(var_count_, j, power), 1);
        out.push_back(std::move(acc));
    }
    return out;
}

// --- skew decomposition -------------------------------------------------------

namespace {

// p = low + x_var^k * high with every term of low of x_var-degree < k
std::pair<Polynomial, Polynomial> split_var_power(const Polynomial& p, int var, int k) {
    Polynomial low(p.var_count()), high(p.var_count());
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(var) >= k) {
            auto exps = m.exponents();
            exps[var] -= k;
            high.add_term(Monomial(std::move(exps)), c);
        } else {
            low.add_term(m, c);
        }
    }
    return {std::move(low), std::move(high)};
}

// Peels one variable per level. Only the first `active` variables are split
// on; later ones ride along inside the coefficients, which is what makes the
// construction valid for entries mixing all variables.
void skew_decompose_level(std::vector<Polynomial> q, int active, int k, SkewPolyMatrix& a) {
    const int vc = a.var_count();
    if (active == 1) {
        if (!q[0].is_zero())
            throw InternalInconsistencyError("skew decomposition residue at base level");
        return;
    }
    const int last = active - 1;
    std::vector<Polynomial> rest;
    rest.reserve(last);
    Polynomial expected_last(vc);
    for (int i = 0; i < last; ++i) {
        auto [low, high] = split_var_power(q[i], last, k);
        a.set(i, last, high);
        expected_last -= high * Polynomial::from_monomial(Monomial::unit(vc, i, k), 1);
        rest.push_back(std::move(low));
    }
    if (!(q[last] == expected_last))
        throw InternalInconsistencyError("skew decomposition peel mismatch");
    skew_decompose_level(std::move(rest), last, k, a);
}

}  // namespace

SkewPolyMatrix skew_decompose(const std::vector<Polynomial>& q, int k) {
    if (q.empty()) throw DimensionMismatchError("empty component list");
    if (k < 1) throw BadParametersError("power k must be positive");
    const int d = static_cast<int>(q.size());
    const int vc = q[0].var_count();
    if (vc < d) throw DimensionMismatchError("fewer ring variables than components");
    Polynomial sum(vc);
    for (int i = 0; i < d; ++i) {
        if (q[i].var_count() != vc)
            throw DimensionMismatchError("components in different rings");
        sum += q[i] * Polynomial::from_monomial(Monomial::unit(vc, i, k), 1);
    }
    if (!sum.is_zero())
        throw HypothesisViolatedError("sum_i Q_i x_i^k does not vanish");
    SkewPolyMatrix a(d, vc);
    skew_decompose_level(q, d, k, a);
    return a;
}

// --- canonical forms ----------------------------------------------------------

CanonicalForm canonical_decompose(const VectorField& vf) {
    const int d = vf.dim();
    const Polynomial neg_k = -tangency_cofactor(vf).cofactor;
    std::vector<Polynomial> f(d, Polynomial(d));
    for (const auto& [m, c] : neg_k.terms()) {
        int var = -1;
        for (int i = 0; i < d; ++i) {
            if (m.exponent(i) > 0) {
                var = i;
                break;
            }
        }
        if (var < 0)
            throw InternalInconsistencyError("cofactor with constant term on a tangent field");
        f[var].add_term(m / Monomial::unit(d, var), c);
    }
    const Polynomial one_minus_s = -unit_sphere_polynomial(d);
    std::vector<Polynomial> residual;
    residual.reserve(d);
    for (int i = 0; i < d; ++i) residual.push_back(vf.components[i] - one_minus_s * f[i]);
    CanonicalForm cf;
    cf.f = std::move(f);
    cf.a = skew_decompose(residual, 1);
    return cf;
}

CanonicalForm layered_decompose(const VectorField& vf) {
    tangency_cofactor(vf);  // rejects non-tangent inputs
    const int d = vf.dim();
    const int m = vf.degree();
    const int layers = m <= 1 ? 0 : (m % 2 == 0 ? m / 2 : (m - 1) / 2);
    const Polynomial s = radius_squared(d);
    const Polynomial one = Polynomial::constant(d, 1);

    CanonicalForm cf;
    cf.layer_count = layers;
    cf.f_layers.assign(d, {});
    cf.f.assign(d, Polynomial(d));
    std::vector<Polynomial> residual = vf.components;
    // prefix_geom[j-1] = 1 + s + ... + s^(j-1), so (1 - s^j) = (1 - s) * prefix
    Polynomial geom = Polynomial(d);
    Polynomial s_pow = one;
    for (int j = 1; j <= layers; ++j) {
        geom += s_pow;          // now 1 + ... + s^(j-1)
        s_pow = s_pow * s;      // s^j
        const Polynomial one_minus_sj = one - s_pow;
        for (int i = 0; i < d; ++i) {
            Polynomial fij =
                vf.components[i].homogeneous_part(m - 2 * j) + vf.components[i].homogeneous_part(m - 2 * j - 1);
            residual[i] -= one_minus_sj * fij;
            cf.f[i] += geom * fij;
            cf.f_layers[i].push_back(std::move(fij));
        }
    }
    Polynomial check(d);
    for (int i = 0; i < d; ++i) check += residual[i] * Polynomial::variable(d, i);
    if (!check.is_zero())
        throw InternalInconsistencyError("layered residual is not purely rotational");
    cf.a = skew_decompose(residual, 1);
    if (!cf.a.is_zero() && cf.a.max_degree() > m - 1)
        throw InternalInconsistencyError("layered rotation entries exceed degree bound");
    return cf;
}

VectorField assemble(const CanonicalForm& cf) {
    const int d = cf.a.dim();
    if (static_cast<int>(cf.f.size()) != d)
        throw DimensionMismatchError("canonical form sizes disagree");
    const Polynomial one_minus_s = -unit_sphere_polynomial(d);
    std::vector<Polynomial> comps = cf.a.apply_to_coordinates();
    for (int i = 0; i < d; ++i) {
        if (cf.f[i].var_count() != d)
            throw DimensionMismatchError("canonical form entry in wrong ring");
        comps[i] += one_minus_s * cf.f[i];
    }
    return VectorField(std::move(comps));
}

// --- invariance and first integrals -------------------------------------------

namespace {

std::optional<InvarianceCertificate> ring_identity_certificate(const VectorField& vf,
                                                               const Polynomial& f) {
    Polynomial lf = lie_derivative(vf, f);
    auto q = exact_quotient(lf, f);
    if (!q) return std::nullopt;
    return InvarianceCertificate{f, std::move(*q), CheckMode::RingIdentity, Polynomial(f.var_count())};
}

// Linear f only: eliminate the pivot variable with f = 0, then decide
// divisibility by the substituted sphere polynomial. Produces the full
// two-multiplier identity lie(f) = K f + L (|x|^2 - 1).
std::optional<InvarianceCertificate> modulo_sphere_certificate(const VectorField& vf,
                                                               const Polynomial& f) {
    const int d = vf.dim();
    std::vector<Rational> a(d, Rational(0));
    for (int i = 0; i < d; ++i) a[i] = f.coeff(Monomial::unit(d, i));
    const Rational b = f.constant_term();
    int pivot = -1;
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        if (pivot < 0 || abs(a[i]) > abs(a[pivot])) pivot = i;
    }
    if (pivot < 0) return std::nullopt;  // constant f has no elimination variable
    std::vector<Polynomial> images;
    images.reserve(d);
    Polynomial pivot_image(d);
    pivot_image.add_term(Monomial(d), -b / a[pivot]);
    for (int i = 0; i < d; ++i)
        if (i != pivot) pivot_image.add_term(Monomial::unit(d, i), -a[i] / a[pivot]);
    for (int i = 0; i < d; ++i)
        images.push_back(i == pivot ? pivot_image : Polynomial::variable(d, i));

    const Polynomial sphere = unit_sphere_polynomial(d);
    const Polynomial lf = lie_derivative(vf, f);
    auto q = exact_quotient(lf.substitute(images), sphere.substitute(images));
    if (!q) return std::nullopt;
    const Polynomial& sphere_mult = *q;  // pivot variable does not occur in it
    auto k = exact_quotient(lf - sphere_mult * sphere, f);
    if (!k)
        throw InternalInconsistencyError("eliminated identity not divisible by the hyperplane");
    return InvarianceCertificate{f, std::move(*k), CheckMode::ModuloSphere, sphere_mult};
}

}  // namespace

std::optional<InvarianceCertificate> try_invariance_check(const VectorField& vf,
                                                          const Polynomial& f, CheckMode mode) {
    if (f.is_zero()) throw BadParametersError("invariance of the zero polynomial is undefined");
    if (f.var_count() != vf.dim())
        throw DimensionMismatchError("invariance candidate in wrong ring");
    auto ring = ring_identity_certificate(vf, f);
    if (ring || mode == CheckMode::RingIdentity) return ring;
    if (f.degree() > 1) return std::nullopt;  // nonlinear membership beyond the ring identity is out of scope
    return modulo_sphere_certificate(vf, f);
}

InvarianceCertificate invariance_check(const VectorField& vf, const Polynomial& f, CheckMode mode) {
    auto cert = try_invariance_check(vf, f, mode);
    if (!cert) throw NotInvariantError("zero set of " + f.str() + " is not invariant");
    return *cert;
}

bool first_integral_check(const VectorField& vf, const Polynomial& g, CheckMode mode) {
    Polynomial lg = lie_derivative(vf, g);
    if (lg.is_zero()) return true;
    if (mode == CheckMode::RingIdentity) return false;
    return divides(unit_sphere_polynomial(vf.dim()), lg);
}

namespace {

// Deterministic sweep: all-ones first, then the rest of the small grid.
std::vector<std::vector<Rational>> grid_points(int d, int cap) {
    static const long values[] = {1, -1, 2, -2, 0};
    const int base = 5;
    std::vector<std::vector<Rational>> pts;
    std::vector<int> idx(d, 0);
    while (static_cast<int>(pts.size()) < cap) {
        std::vector<Rational> p(d);
        for (int i = 0; i < d; ++i) p[i] = values[idx[i]];
        pts.push_back(std::move(p));
        int slot = d - 1;
        while (slot >= 0 && ++idx[slot] == base) idx[slot--] = 0;
        if (slot < 0) break;
    }
    return pts;
}

}  // namespace

IntegrabilityCertificate integrability_certificate(const VectorField& vf,
                                                   const std::vector<Polynomial>& integrals) {
    const int d = vf.dim();
    const int k = static_cast<int>(integrals.size());
    if (k == 0) throw BadParametersError("no integral candidates supplied");
    IntegrabilityCertificate cert;
    cert.integrals = integrals;
    for (int i = 0; i < k; ++i) {
        const Polynomial& g = integrals[i];
        Polynomial lg = lie_derivative(vf, g);
        if (lg.is_zero()) {
            cert.modes.push_back(CheckMode::RingIdentity);
        } else if (divides(unit_sphere_polynomial(d), lg)) {
            cert.modes.push_back(CheckMode::ModuloSphere);
        } else {
            throw NotFirstIntegralError("candidate " + std::to_string(i + 1) + " is not a first integral", i);
        }
    }
    if (k > d) throw IndependenceNotCertifiedError("more integrals than ambient dimensions");

    std::vector<std::vector<Polynomial>> jac(k);
    for (int i = 0; i < k; ++i) {
        jac[i].reserve(d);
        for (int j = 0; j < d; ++j) jac[i].push_back(integrals[i].derivative(j));
    }
    auto rank_at = [&](const std::vector<Rational>& p) {
        linalg::Matrix m(k, d);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < d; ++j) m.at(i, j) = jac[i][j].evaluate(p);
        return linalg::rank(std::move(m));
    };
    for (const auto& p : grid_points(d, 600)) {
        if (rank_at(p) == k) {
            cert.point = p;
            cert.jacobian_rank = k;
            return cert;
        }
    }
    std::mt19937_64 rng(0x73706872ULL);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    for (int attempt = 0; attempt < 400; ++attempt) {
        std::vector<Rational> p(d);
        for (int i = 0; i < d; ++i) p[i] = make_rational(num(rng), den(rng));
        if (rank_at(p) == k) {
            cert.point = std::move(p);
            cert.jacobian_rank = k;
            return cert;
        }
    }
    throw IndependenceNotCertifiedError(
        "no rational point of full Jacobian rank found (this does not prove dependence)");
}

SkewPolyMatrix homogeneous_decompose(const VectorField& vf) {
    const int d = vf.dim();
    const int m = vf.degree();
    for (const auto& p : vf.components) {
        if (!p.is_homogeneous() || (!p.is_zero() && p.degree() != m))
            throw NotHomogeneousError("components are not homogeneous of one degree");
    }
    Polynomial sum(d);
    for (int i = 0; i < d; ++i) sum += vf.components[i] * Polynomial::variable(d, i);
    if (!sum.is_zero())
        throw NotTangentEverywhereError("radial product does not vanish identically");
    return skew_decompose(vf.components, 1);
}

// --- text form ------------------------------------------------------------

VectorField parse_vector_field(std::string_view text) {
    std::vector<std::string> stmts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            stmts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    stmts.push_back(cur);
    auto trim = [](std::string s) {
        auto issp = [](unsigned char c) { return std::isspace(c); };
        while (!s.empty() && issp(s.front())) s.erase(s.begin());
        while (!s.empty() && issp(s.back())) s.pop_back();
        return s;
    };
    int dim = -1;
    std::vector<std::pair<int, std::string>> assigns;
    for (auto& raw : stmts) {
        std::string s = trim(raw);
        if (s.empty()) continue;
        if (s.size() > 3 && s.compare(0, 3, "dim") == 0 &&
            std::isspace(static_cast<unsigned char>(s[3]))) {
            if (dim != -1) throw ParseError("duplicate dim statement", 0);
            std::string v = trim(s.substr(4));
            for (char c : v)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("malformed dimension", 0);
            if (v.empty() || v.size() > 2) throw ParseError("malformed dimension", 0);
            dim = std::stoi(v);
            if (dim < 1 || dim > 16) throw ParseError("dimension out of range", 0);
            continue;
        }
        if (s[0] != 'P') throw ParseError("expected 'dim' or component assignment", 0);
        std::size_t i = 1;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == 1) throw ParseError("component index missing", 0);
        int idx = std::stoi(s.substr(1, i - 1));
        std::size_t eq = s.find('=', i);
        if (eq == std::string::npos || trim(s.substr(i, eq - i)) != "")
            throw ParseError("expected '=' in component assignment", 0);
        assigns.emplace_back(idx, trim(s.substr(eq + 1)));
    }
    if (dim == -1) throw ParseError("missing dim statement", 0);
    std::vector<Polynomial> comps(dim, Polynomial(dim));
    std::vector<bool> seen(dim, false);
    for (auto& [idx, rhs] : assigns) {
        if (idx < 1 || idx > dim) throw ParseError("component index out of range", 0);
        if (seen[idx - 1]) throw ParseError("duplicate component assignment", 0);
        seen[idx - 1] = true;
        comps[idx - 1] = Polynomial::parse(rhs, dim);
    }
    return VectorField(std::move(comps));
}

std::string vector_field_to_text(const VectorField& vf) {
    std::ostringstream out;
    out << "dim " << vf.dim();
    for (int i = 0; i < vf.dim(); ++i) out << "; P" << (i + 1) << " = " << vf.components[i].str();
    return out.str();
}

}  // namespace spherevf
