#include "spherevf/generators.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "spherevf/errors.hpp"

namespace spherevf {

namespace {

// Normals arrive with n or n+1 entries; pad to the ambient length. Meridian
// normals must leave the last coordinate untouched.
linalg::Vec pad_normal(const linalg::Vec& a, int d, bool meridian) {
    if (static_cast<int>(a.size()) > d)
        throw BadParametersError("linear form has more entries than variables");
    linalg::Vec v = a;
    v.resize(d, Rational(0));
    if (meridian && v[d - 1] != 0)
        throw BadParametersError("meridian form must not involve the last variable");
    bool nonzero = false;
    for (const auto& c : v) nonzero = nonzero || c != 0;
    if (!nonzero) throw BadParametersError("zero linear form");
    return v;
}

Polynomial linear_poly(const linalg::Vec& v, int d) {
    Polynomial p(d);
    for (int i = 0; i < d; ++i)
        if (v[i] != 0) p.add_term(Monomial::unit(d, i), v[i]);
    return p;
}

VectorField rotation_field(const SkewPolyMatrix& a) {
    CanonicalForm cf;
    cf.f.assign(a.dim(), Polynomial(a.var_count()));
    cf.a = a;
    return assemble(cf);
}

// Counts proportional copies so repeated factors report one meridian with
// the combined multiplicity.
void merge_meridians(GeneratedField& out, const linalg::Vec& normal, int mult) {
    linalg::Vec key = linalg::primitive_integer_form(normal);
    for (auto& [a, m] : out.meridians) {
        if (a == key) {
            m += mult;
            return;
        }
    }
    out.meridians.emplace_back(key, mult);
}

GeneratedField uniform_entry_family(const FamilySpec& spec, bool power_of_one_form) {
    const int n = spec.n;
    if (n < 2) throw BadParametersError("needs sphere dimension at least two");
    const int d = n + 1;

    Polynomial entry = Polynomial::constant(d, make_rational(1));
    GeneratedField out;
    if (power_of_one_form) {
        const int m = spec.m;
        if (m < 2) throw BadParametersError("needs degree at least two");
        linalg::Vec normal = pad_normal(spec.a, d, true);
        Polynomial f = linear_poly(normal, d);
        entry = f.pow(m - 1);
        out.family = "thm14_1";
        merge_meridians(out, normal, 1);
        const int s = (n - 1) * (n - 2) / 2 * (m - 2) + (n - 1) * (m - 1);
        out.extactic_divisor = {f, s};
    } else {
        if (spec.linear_forms.empty()) throw BadParametersError("needs at least one linear form");
        for (const auto& form : spec.linear_forms) {
            linalg::Vec normal = pad_normal(form, d, true);
            entry = entry * linear_poly(normal, d);
            merge_meridians(out, normal, 1);
        }
        out.family = "thm14_2";
        out.extactic_divisor = {entry, n - 1};
    }

    SkewPolyMatrix a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) a.set(i, j, entry);
    out.rotation = a;
    out.field = rotation_field(a);
    return out;
}

GeneratedField planar_product_family(const FamilySpec& spec) {
    if (spec.linear_forms.empty()) throw BadParametersError("needs at least one linear form");
    const int d = 3;
    Polynomial prod = Polynomial::constant(d, make_rational(1));
    GeneratedField out;
    out.family = "thm14_3";
    // x1 = 0 always shows up: the first component vanishes identically.
    merge_meridians(out, linalg::Vec{Rational(1), Rational(0), Rational(0)}, 1);
    for (const auto& form : spec.linear_forms) {
        linalg::Vec normal = pad_normal(form, d, true);
        prod = prod * linear_poly(normal, d);
        merge_meridians(out, normal, 1);
    }
    SkewPolyMatrix a(d, d);
    a.set(1, 2, prod);
    out.rotation = a;
    out.field = rotation_field(a);
    return out;
}

GeneratedField spatial_product_family(const FamilySpec& spec) {
    if (spec.linear_forms.empty()) throw BadParametersError("needs at least one linear form");
    const int d = 4;
    Polynomial prod = Polynomial::constant(d, make_rational(1));
    GeneratedField out;
    out.family = "thm14_4";
    merge_meridians(out, linalg::Vec{Rational(0), Rational(0), Rational(1), Rational(0)}, 1);
    for (const auto& form : spec.linear_forms) {
        linalg::Vec normal = pad_normal(form, d, true);
        prod = prod * linear_poly(normal, d);
        merge_meridians(out, normal, 3);
    }
    SkewPolyMatrix a(d, d);
    a.set(0, 1, prod);
    out.rotation = a;
    out.field = rotation_field(a);
    return out;
}

GeneratedField integrable_family(const FamilySpec& spec) {
    const int n = spec.n;
    if (n < 1) throw BadParametersError("needs sphere dimension at least one");
    const int d = n + 1;
    if (spec.a_poly.var_count() != d)
        throw BadParametersError("free factor must live in the ambient ring");
    if (spec.a_poly.is_zero()) throw BadParametersError("free factor must be nonzero");

    SkewPolyMatrix a(d, d);
    a.set(0, 1, spec.a_poly);
    GeneratedField out;
    out.family = "thm34_integrable";
    out.rotation = a;
    out.field = rotation_field(a);
    for (int j = 2; j < d; ++j) out.first_integrals.push_back(Polynomial::variable(d, j));
    out.first_integrals.push_back(unit_sphere_polynomial(d));
    return out;
}

GeneratedField orthogonal_rotation_family(const FamilySpec& spec) {
    const int d = static_cast<int>(spec.a.size());
    if (d < 2) throw BadParametersError("needs at least two variables");
    int pivot = -1;
    for (int i = 0; i < d && pivot < 0; ++i)
        if (spec.a[i] != 0) pivot = i;
    if (pivot < 0) throw BadParametersError("gradient vector must be nonzero");
    const SkewPolyMatrix& b = spec.seed;
    if (b.dim() != d) throw BadParametersError("seed matrix size must match the gradient");
    if (b.var_count() != d)
        throw BadParametersError("seed entries must live in the ambient ring");

    SkewPolyMatrix a(d, d);
    for (int p = 0; p < d; ++p) {
        if (p == pivot) continue;
        for (int q = p + 1; q < d; ++q) {
            if (q == pivot) continue;
            a.set(p, q, b.at(p, q));
        }
    }
    // Row `pivot` absorbs the rest: A_pj = -(1/a_p) sum_{i != p} a_i B_ij,
    // which makes a^t A vanish column by column.
    for (int j = 0; j < d; ++j) {
        if (j == pivot) continue;
        Polynomial sum(d);
        for (int i = 0; i < d; ++i) {
            if (i == pivot || spec.a[i] == 0) continue;
            sum = sum + b.at(i, j) * spec.a[i];
        }
        a.set(pivot, j, sum * (Rational(-1) / spec.a[pivot]));
    }

    for (int j = 0; j < d; ++j) {
        Polynomial col(d);
        for (int i = 0; i < d; ++i) col = col + a.at(i, j) * spec.a[i];
        if (!col.is_zero())
            throw InternalInconsistencyError("rewired matrix lost orthogonality");
    }

    GeneratedField out;
    out.family = "thm33_first_integral";
    out.rotation = a;
    out.field = rotation_field(a);
    if (out.field.is_zero())
        throw BadParametersError("seed collapses to the zero field");
    Polynomial integral = linear_poly(spec.a, d);
    if (spec.c != 0) integral = integral + Polynomial::constant(d, spec.c);
    out.first_integrals.push_back(integral);
    return out;
}

GeneratedField paired_rotation_family(const FamilySpec& spec) {
    const int n = spec.n;
    if (n < 2) throw BadParametersError("needs sphere dimension at least two");
    const int d = n + 1;
    const int pairs = d / 2;
    if (static_cast<int>(spec.constants.size()) != pairs)
        throw BadParametersError("needs one rotation rate per coordinate pair");
    SkewPolyMatrix a(d, d);
    for (int i = 0; i < pairs; ++i) {
        if (spec.constants[i] == 0) throw BadParametersError("rotation rates must be nonzero");
        a.set(2 * i, 2 * i + 1, Polynomial::constant(d, spec.constants[i]));
    }
    GeneratedField out;
    out.family = "thm45_no_meridian";
    out.rotation = a;
    out.field = rotation_field(a);
    out.no_meridians = true;
    return out;
}

GeneratedField stacked_parallels_family(const FamilySpec& spec) {
    const int n = spec.n;
    if (n < 1) throw BadParametersError("needs sphere dimension at least one");
    const int d = n + 1;
    Polynomial prod = Polynomial::constant(d, make_rational(1));
    GeneratedField out;
    out.family = "thm15_parallels";
    for (std::size_t i = 0; i < spec.constants.size(); ++i) {
        const Rational& k = spec.constants[i];
        if (k >= 1 || k <= -1)
            throw BadParametersError("parallel offsets must satisfy |k| < 1");
        for (std::size_t j = 0; j < i; ++j)
            if (spec.constants[j] == k)
                throw BadParametersError("parallel offsets must be distinct");
        prod = prod * (Polynomial::variable(d, d - 1) - Polynomial::constant(d, k));
        out.parallels.emplace_back(k, 1);
    }
    SkewPolyMatrix a(d, d);
    for (int j = 0; j < d - 1; ++j) a.set(d - 1, j, prod);
    out.rotation = a;
    out.field = rotation_field(a);
    return out;
}

}  // namespace

GeneratedField generate(const FamilySpec& spec) {
    GeneratedField out;
    if (spec.family == "thm14_1")
        out = uniform_entry_family(spec, true);
    else if (spec.family == "thm14_2")
        out = uniform_entry_family(spec, false);
    else if (spec.family == "thm14_3")
        out = planar_product_family(spec);
    else if (spec.family == "thm14_4")
        out = spatial_product_family(spec);
    else if (spec.family == "thm34_integrable")
        out = integrable_family(spec);
    else if (spec.family == "thm33_first_integral")
        out = orthogonal_rotation_family(spec);
    else if (spec.family == "thm45_no_meridian")
        out = paired_rotation_family(spec);
    else if (spec.family == "thm15_parallels")
        out = stacked_parallels_family(spec);
    else
        throw BadParametersError("unknown family id: " + spec.family);
    tangency_cofactor(out.field);
    return out;
}

VectorField random_tangent_field(int n, int m, int coefficient_bound, std::uint64_t seed) {
    if (n < 1) throw BadParametersError("needs sphere dimension at least one");
    if (m < 1) throw BadParametersError("needs degree at least one");
    if (coefficient_bound < 1) throw BadParametersError("coefficient bound must be positive");
    const int d = n + 1;
    std::mt19937_64 rng(seed);
    // Engine output is reduced directly so the stream of draws depends only
    // on the seed, not on library distribution internals.
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto random_poly = [&](int max_deg, int tries) {
        Polynomial p(d);
        if (max_deg < 0) return p;
        for (int t = 0; t < tries; ++t) {
            std::vector<int> e(d, 0);
            int budget = pick(0, max_deg);
            for (int i = 0; i < d && budget > 0; ++i) {
                e[i] = pick(0, budget);
                budget -= e[i];
            }
            int c = pick(-coefficient_bound, coefficient_bound);
            if (c != 0) p.add_term(Monomial(e), make_rational(c));
        }
        return p;
    };

    CanonicalForm cf;
    cf.f.assign(d, Polynomial(d));
    SkewPolyMatrix a(d, d);
    for (int i = 0; i < d; ++i) {
        cf.f[i] = random_poly(m - 2, d);
        for (int j = i + 1; j < d; ++j) a.set(i, j, random_poly(m - 1, 3));
    }
    cf.a = a;
    VectorField vf = assemble(cf);
    // Top up until the degree really is m; the leading coefficient of the
    // bumped entry is linear in the number of bumps, so two always suffice.
    Polynomial bump(d);
    bump.add_term(Monomial::unit(d, 0, m - 1), make_rational(1));
    for (int tries = 0; vf.degree() < m; ++tries) {
        if (tries >= 3) throw InternalInconsistencyError("degree top-up failed");
        a.set(0, 1, a.at(0, 1) + bump);
        cf.a = a;
        vf = assemble(cf);
    }
    return vf;
}

}  // namespace spherevf
