#include "spherevf/json_io.hpp"

#include <stdexcept>

#include "spherevf/errors.hpp"

namespace spherevf {

namespace {

Json poly_json(const Polynomial& p, char letter = 'x') { return p.str(letter); }

Json rational_json(const Rational& r) { return rational_to_string(r); }

std::string mode_name(CheckMode m) {
    return m == CheckMode::RingIdentity ? "ringIdentity" : "moduloSphere";
}

std::string monomial_str(const Monomial& m) {
    Polynomial p(m.var_count());
    p.add_term(m, make_rational(1));
    return p.str();
}

Rational rational_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return make_rational(j.get<long>());
        if (j.is_string()) return rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw BadParametersError(std::string("bad rational: ") + e.what());
    }
    throw BadParametersError("rationals must be integers or \"p/q\" strings");
}

linalg::Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw BadParametersError("expected an array of rationals");
    linalg::Vec v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

SkewPolyMatrix skew_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw BadParametersError("seed must be a square array");
    const int d = static_cast<int>(j.size());
    std::vector<std::vector<Polynomial>> m(d);
    for (int i = 0; i < d; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != d)
            throw BadParametersError("seed must be a square array");
        for (const auto& e : j[i])
            m[i].push_back(Polynomial::parse(e.get<std::string>(), d));
    }
    SkewPolyMatrix a(d, d);
    for (int i = 0; i < d; ++i) {
        if (!m[i][i].is_zero()) throw BadParametersError("seed matrix is not skew");
        for (int k = i + 1; k < d; ++k) {
            if (m[k][i] != -m[i][k]) throw BadParametersError("seed matrix is not skew");
            a.set(i, k, m[i][k]);
        }
    }
    return a;
}

}  // namespace

Json to_json(const VectorField& vf) {
    Json comps = Json::array();
    for (const auto& p : vf.components) comps.push_back(poly_json(p));
    return Json{{"dim", vf.dim()}, {"components", comps}};
}

VectorField vector_field_from_json(const Json& j) {
    try {
        const int d = j.at("dim").get<int>();
        const auto& comps = j.at("components");
        if (d < 1 || !comps.is_array() || static_cast<int>(comps.size()) != d)
            throw BadParametersError("components must list exactly dim polynomials");
        VectorField vf;
        for (const auto& c : comps)
            vf.components.push_back(Polynomial::parse(c.get<std::string>(), d));
        return vf;
    } catch (const Json::exception& e) {
        throw BadParametersError(std::string("bad vector field object: ") + e.what());
    }
}

Json to_json(const linalg::Vec& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(rational_json(r));
    return out;
}

Json to_json(const linalg::Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rational_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const SkewPolyMatrix& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.dim(); ++j) row.push_back(poly_json(a.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const Hyperplane& h) {
    return Json{{"a", to_json(h.a)}, {"b", rational_json(h.b)}};
}

Json to_json(const TangencyCertificate& c) {
    return Json{{"cofactor", poly_json(c.cofactor)}};
}

Json to_json(const InvarianceCertificate& c) {
    return Json{{"f", poly_json(c.f)},
                {"cofactor", poly_json(c.cofactor)},
                {"mode", mode_name(c.mode)},
                {"sphereMultiplier", poly_json(c.sphere_multiplier)}};
}

Json to_json(const CanonicalForm& cf) {
    Json f = Json::array();
    for (const auto& p : cf.f) f.push_back(poly_json(p));
    Json out{{"f", f}, {"a", to_json(cf.a)}, {"layerCount", cf.layer_count}};
    if (cf.layer_count > 0) {
        Json layers = Json::array();
        for (const auto& row : cf.f_layers) {
            Json lr = Json::array();
            for (const auto& p : row) lr.push_back(poly_json(p));
            layers.push_back(lr);
        }
        out["fLayers"] = layers;
    }
    return out;
}

Json to_json(const HyperplaneFinding& f) {
    return Json{{"a", to_json(f.a)},
                {"b", rational_json(f.b)},
                {"multiplicity", f.multiplicity},
                {"cofactor", poly_json(f.cofactor)}};
}

Json to_json(const HyperplaneSearchResult& r) {
    Json findings = Json::array();
    for (const auto& f : r.findings) findings.push_back(to_json(f));
    return Json{{"kind", r.kind == HyperplaneKind::Meridian ? "meridian" : "parallel"},
                {"findings", findings},
                {"complete", r.complete},
                {"allParallelsInvariant", r.all_invariant},
                {"degenerateExtactic", r.degenerate_extactic},
                {"extactic", poly_json(r.extactic)},
                {"flags", r.flags}};
}

Json to_json(const GreatSphereKernel& k) {
    Json basis = Json::array();
    for (const auto& v : k.basis) basis.push_back(to_json(v));
    return Json{{"basis", basis}, {"allInvariant", k.all_invariant}};
}

Json to_json(const HamiltonianReport& r) {
    Json out{{"b", to_json(r.b)}, {"symmetric", r.symmetric}};
    out["h"] = r.h ? Json(poly_json(*r.h)) : Json(nullptr);
    return out;
}

Json to_json(const ObstructionReport& r) {
    Json out{{"verdict", r.verdict == ObstructionVerdict::NotHamiltonian ? "notHamiltonian"
                                                                         : "inconclusive"}};
    if (r.witness) {
        Json powers = Json::array();
        for (const auto& [i, k, c] : r.witness->pure_powers)
            powers.push_back(Json{{"component", i + 1},
                                  {"variable", k + 1},
                                  {"coefficient", rational_json(c)}});
        out["witness"] = Json{{"m", r.witness->m}, {"purePowers", powers}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json to_json(const CubicKernelResult& r) {
    Json basis = Json::array();
    for (const auto& v : r.basis) basis.push_back(to_json(v));
    Json monos = Json::array();
    for (const auto& m : r.monomial_basis) monos.push_back(monomial_str(m));
    return Json{{"dimension", r.dimension}, {"basis", basis}, {"monomialBasis", monos}};
}

Json to_json(const ProjectedField& pf) {
    Json comps = Json::array();
    for (const auto& p : pf.r) comps.push_back(poly_json(p, 'u'));
    return Json{{"n", pf.n},
                {"components", comps},
                {"sourceDegree", pf.source_degree},
                {"timeRescale", pf.time_rescale}};
}

Json to_json(const IntegrabilityCertificate& c) {
    Json integrals = Json::array();
    for (const auto& g : c.integrals) integrals.push_back(poly_json(g));
    Json modes = Json::array();
    for (CheckMode m : c.modes) modes.push_back(mode_name(m));
    return Json{{"integrals", integrals},
                {"modes", modes},
                {"point", to_json(c.point)},
                {"jacobianRank", c.jacobian_rank}};
}

Json to_json(const GeneratedField& g) {
    Json meridians = Json::array();
    for (const auto& [a, mult] : g.meridians)
        meridians.push_back(
            Json{{"a", to_json(a)}, {"b", "0"}, {"multiplicity", mult}});
    Json parallels = Json::array();
    for (const auto& [k, mult] : g.parallels)
        parallels.push_back(Json{{"offset", rational_json(k)}, {"multiplicity", mult}});
    Json integrals = Json::array();
    for (const auto& p : g.first_integrals) integrals.push_back(poly_json(p));
    Json out{{"family", g.family},
             {"field", to_json(g.field)},
             {"meridians", meridians},
             {"parallels", parallels},
             {"firstIntegrals", integrals},
             {"noMeridians", g.no_meridians}};
    out["rotation"] = g.rotation ? to_json(*g.rotation) : Json(nullptr);
    out["extacticDivisor"] =
        g.extactic_divisor ? Json{{"factor", poly_json(g.extactic_divisor->first)},
                                  {"power", g.extactic_divisor->second}}
                           : Json(nullptr);
    return out;
}

FamilySpec family_spec_from_json(const std::string& family, const Json& params) {
    if (!params.is_object()) throw BadParametersError("params must be a JSON object");
    for (const auto& [key, value] : params.items()) {
        (void)value;
        if (key != "n" && key != "m" && key != "a" && key != "c" && key != "constants" &&
            key != "linearForms" && key != "aPoly" && key != "seed")
            throw BadParametersError("unknown parameter key: " + key);
    }
    FamilySpec spec;
    spec.family = family;
    try {
        if (params.contains("n")) spec.n = params.at("n").get<int>();
        if (params.contains("m")) spec.m = params.at("m").get<int>();
        if (params.contains("a")) spec.a = vec_from_json(params.at("a"));
        if (params.contains("c")) spec.c = rational_from_json(params.at("c"));
        if (params.contains("constants"))
            for (const auto& e : params.at("constants"))
                spec.constants.push_back(rational_from_json(e));
        if (params.contains("linearForms"))
            for (const auto& row : params.at("linearForms"))
                spec.linear_forms.push_back(vec_from_json(row));
        if (params.contains("aPoly")) {
            if (!params.contains("n"))
                throw BadParametersError("aPoly needs n to fix the variable count");
            spec.a_poly = Polynomial::parse(params.at("aPoly").get<std::string>(), spec.n + 1);
        }
        if (params.contains("seed")) spec.seed = skew_from_json(params.at("seed"));
    } catch (const Json::exception& e) {
        throw BadParametersError(std::string("bad params object: ") + e.what());
    }
    return spec;
}

}  // namespace spherevf
