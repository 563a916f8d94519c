// Command-line front end. Exit codes: 0 = success (or positive verdict),
// 1 = negative verdict / failed analysis on well-formed input, 2 = malformed
// request (parse errors, wrong shapes, bad flags). JSON reports carry
// schemaVersion, echo the exact input, and back every verdict with a
// certificate object; identical requests print identical bytes.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spherevf/errors.hpp"
#include "spherevf/json_io.hpp"

using namespace spherevf;

namespace {

struct Io {
    std::string field_text;
    std::string input_path;
    std::string format = "text";
};

void add_io(CLI::App* cmd, Io& io, bool needs_field = true) {
    if (needs_field) {
        cmd->add_option("--field", io.field_text, "inline field text, e.g. \"dim 3; P1 = -x2; P2 = x1; P3 = 0\"");
        cmd->add_option("--input", io.input_path, "file holding the field text");
    }
    cmd->add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("SPHEREVF_FORMAT");
}

std::pair<std::string, VectorField> load_field(const Io& io) {
    std::string raw = io.field_text;
    if (!io.input_path.empty()) {
        std::ifstream in(io.input_path);
        if (!in) throw BadParametersError("cannot read input file: " + io.input_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        raw = ss.str();
    }
    if (raw.empty()) throw BadParametersError("no field given: use --field or --input");
    return {raw, parse_vector_field(raw)};
}

Json envelope(const std::string& command) {
    return Json{{"schemaVersion", 1}, {"command", command}};
}

void embed_input(Json& rep, const std::string& raw, const VectorField& vf) {
    rep["input"] = Json{{"raw", raw}, {"field", to_json(vf)}};
}

int emit(const Json& rep, const Io& io, const std::string& text, int code) {
    if (io.format == "json")
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << text;
    return code;
}

std::vector<Polynomial> parse_poly_list(const std::string& arg, int vars) {
    std::vector<Polynomial> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos)
            out.push_back(Polynomial::parse(item, vars));
    return out;
}

linalg::Vec parse_rational_vector(const std::string& arg) {
    linalg::Vec v;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(rational_from_string(item));
        } catch (const std::invalid_argument& e) {
            throw BadParametersError(std::string("bad rational entry: ") + e.what());
        }
    }
    return v;
}

std::string hyperplane_text(const HyperplaneFinding& f) {
    return Hyperplane(f.a, f.b).polynomial().str() + " = 0";
}

int run_check_tangent(const Io& io) {
    auto [raw, vf] = load_field(io);
    Json rep = envelope("check-tangent");
    embed_input(rep, raw, vf);
    std::ostringstream text;
    int code = 0;
    try {
        TangencyCertificate cert = tangency_cofactor(vf);
        rep["tangent"] = true;
        rep["certificate"] = to_json(cert);
        text << "tangent: yes\ncofactor: " << cert.cofactor.str() << "\n";
    } catch (const NotTangentError&) {
        Polynomial radial(vf.dim());
        for (int i = 0; i < vf.dim(); ++i)
            radial += vf.components[i] * Polynomial::variable(vf.dim(), i);
        rep["tangent"] = false;
        rep["certificate"] = Json{{"radialFunction", radial.str()},
                                  {"divisor", unit_sphere_polynomial(vf.dim()).str()}};
        text << "tangent: no\nradial function " << radial.str() << " is not a multiple of "
             << unit_sphere_polynomial(vf.dim()).str() << "\n";
        code = 1;
    }
    return emit(rep, io, text.str(), code);
}

int run_decompose(const Io& io, bool layered) {
    auto [raw, vf] = load_field(io);
    CanonicalForm cf = layered ? layered_decompose(vf) : canonical_decompose(vf);
    Json rep = envelope("decompose");
    embed_input(rep, raw, vf);
    rep["canonicalForm"] = to_json(cf);
    std::ostringstream text;
    const int d = vf.dim();
    for (int i = 0; i < d; ++i) text << "f" << i + 1 << " = " << cf.f[i].str() << "\n";
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (!cf.a.at(i, j).is_zero())
                text << "A[" << i + 1 << "][" << j + 1 << "] = " << cf.a.at(i, j).str() << "\n";
    if (layered) text << "layers: " << cf.layer_count << "\n";
    return emit(rep, io, text.str(), 0);
}

int run_extactic(const Io& io, const std::string& basis_arg, const std::string& kind) {
    auto [raw, vf] = load_field(io);
    const int d = vf.dim();
    std::vector<Polynomial> basis;
    if (!basis_arg.empty()) {
        basis = parse_poly_list(basis_arg, d);
    } else if (kind == "parallel") {
        basis = {Polynomial::constant(d, make_rational(1)), Polynomial::variable(d, d - 1)};
    } else {
        for (int i = 0; i + 1 < d; ++i) basis.push_back(Polynomial::variable(d, i));
    }
    if (basis.empty()) throw BadParametersError("empty basis");
    Polynomial e = extactic_polynomial(vf, basis);
    Json rep = envelope("extactic");
    embed_input(rep, raw, vf);
    Json basis_json = Json::array();
    for (const auto& p : basis) basis_json.push_back(p.str());
    rep["basis"] = basis_json;
    rep["extactic"] = e.str();
    std::ostringstream text;
    text << "extactic: " << e.str() << "\n";
    return emit(rep, io, text.str(), 0);
}

int run_hyperplanes(const Io& io, bool meridian, const std::string& candidates_arg) {
    auto [raw, vf] = load_field(io);
    const int d = vf.dim();
    HyperplaneSearchResult r;
    if (meridian) {
        std::vector<linalg::Vec> candidates;
        std::stringstream ss(candidates_arg);
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            linalg::Vec v = parse_rational_vector(item);
            if (static_cast<int>(v.size()) == d - 1) v.push_back(Rational(0));
            if (static_cast<int>(v.size()) != d)
                throw BadParametersError("candidate length must be dim or dim-1");
            candidates.push_back(std::move(v));
        }
        r = find_meridians(vf, candidates);
    } else {
        r = find_parallels(vf);
    }
    Json rep = envelope(meridian ? "meridians" : "parallels");
    embed_input(rep, raw, vf);
    rep["search"] = to_json(r);
    std::ostringstream text;
    text << (meridian ? "meridians" : "parallels") << " found: " << r.findings.size()
         << (r.complete ? " (complete)" : " (candidates only)") << "\n";
    for (const auto& f : r.findings)
        text << "  " << hyperplane_text(f) << "   multiplicity " << f.multiplicity << "\n";
    if (r.all_invariant) text << "last component vanishes: every parallel is invariant\n";
    if (r.degenerate_extactic) text << "extactic vanishes identically\n";
    for (const auto& flag : r.flags) text << "note: " << flag << "\n";
    return emit(rep, io, text.str(), 0);
}

int run_sphere_check(const Io& io, const std::string& a_arg, const std::string& b_arg) {
    auto [raw, vf] = load_field(io);
    linalg::Vec a = parse_rational_vector(a_arg);
    if (static_cast<int>(a.size()) != vf.dim())
        throw BadParametersError("normal vector length must match dim");
    Rational b;
    try {
        b = rational_from_string(b_arg);
    } catch (const std::invalid_argument& e) {
        throw BadParametersError(std::string("bad offset: ") + e.what());
    }
    Hyperplane h(a, b);
    Json rep = envelope("sphere-check");
    embed_input(rep, raw, vf);
    rep["hyperplane"] = to_json(h);
    std::ostringstream text;
    int code = 0;
    try {
        InvarianceCertificate cert = sphere_invariance_check(vf, h);
        rep["invariant"] = true;
        rep["certificate"] = to_json(cert);
        text << "invariant: yes\ncofactor: " << cert.cofactor.str() << "\n";
    } catch (const NotInvariantError&) {
        rep["invariant"] = false;
        rep["certificate"] = Json{{"checked", cone_polynomial(h).str()}};
        text << "invariant: no\n";
        code = 1;
    }
    return emit(rep, io, text.str(), code);
}

int run_hamiltonian(const Io& io, int m, const std::string& verify_arg) {
    auto [raw, vf] = load_field(io);
    Json rep = envelope("hamiltonian");
    embed_input(rep, raw, vf);
    std::ostringstream text;
    int code = 0;
    if (!verify_arg.empty()) {
        Polynomial h = Polynomial::parse(verify_arg, vf.dim());
        bool ok = verify_hamiltonian(vf, h);
        rep["hamiltonian"] = ok;
        rep["certificate"] = Json{{"h", h.str()}};
        text << "hamiltonian with given h: " << (ok ? "yes" : "no") << "\n";
        code = ok ? 0 : 1;
    } else if (m > 0) {
        ObstructionReport r = obstruction_check(canonical_decompose(vf), m);
        rep["obstruction"] = to_json(r);
        if (r.verdict == ObstructionVerdict::NotHamiltonian) {
            text << "verdict: not hamiltonian (degree obstruction)\n";
            code = 1;
        } else {
            text << "verdict: inconclusive\n";
        }
    } else {
        HamiltonianReport r = deg1_hamiltonian_test(vf);
        rep["report"] = to_json(r);
        rep["hamiltonian"] = r.symmetric;
        if (r.symmetric) {
            text << "hamiltonian: yes\nh = " << r.h->str() << "\n";
        } else {
            text << "hamiltonian: no (rewired matrix is asymmetric)\n";
            code = 1;
        }
    }
    return emit(rep, io, text.str(), code);
}

int run_project(const Io& io) {
    auto [raw, vf] = load_field(io);
    ProjectedField pf = push_forward(vf);
    bool equator = equator_transfer_check(vf);
    Json rep = envelope("project");
    embed_input(rep, raw, vf);
    rep["projection"] = to_json(pf);
    rep["equatorInvariant"] = equator;
    std::ostringstream text;
    for (int i = 0; i < static_cast<int>(pf.r.size()); ++i)
        text << "R" << i + 1 << " = " << pf.r[i].str('u') << "\n";
    text << "time rescale: " << pf.time_rescale << "\n";
    text << "equator invariant: " << (equator ? "yes" : "no") << "\n";
    return emit(rep, io, text.str(), 0);
}

int run_integrals(const Io& io, const std::string& candidates_arg) {
    auto [raw, vf] = load_field(io);
    std::vector<Polynomial> candidates = parse_poly_list(candidates_arg, vf.dim());
    if (candidates.empty()) throw BadParametersError("no candidate integrals given");
    Json rep = envelope("integrals");
    embed_input(rep, raw, vf);
    IntegrabilityCertificate cert = integrability_certificate(vf, candidates);
    rep["certificate"] = to_json(cert);
    std::ostringstream text;
    text << "independent first integrals: " << cert.jacobian_rank << "\n";
    for (std::size_t i = 0; i < cert.integrals.size(); ++i)
        text << "  " << cert.integrals[i].str() << "\n";
    return emit(rep, io, text.str(), 0);
}

int run_generate(const Io& io, const std::string& family, const std::string& params_arg,
                 std::uint64_t seed) {
    Json params;
    try {
        params = Json::parse(params_arg);
    } catch (const Json::exception& e) {
        throw BadParametersError(std::string("params is not valid JSON: ") + e.what());
    }
    Json rep = envelope("generate");
    rep["family"] = family;
    rep["params"] = params;
    std::ostringstream text;
    if (family == "random") {
        if (!params.is_object()) throw BadParametersError("params must be a JSON object");
        int n = 2, m = 2, bound = 5;
        for (const auto& [key, value] : params.items()) {
            if (key == "n")
                n = value.get<int>();
            else if (key == "m")
                m = value.get<int>();
            else if (key == "bound")
                bound = value.get<int>();
            else
                throw BadParametersError("unknown parameter key: " + key);
        }
        rep["seed"] = seed;
        VectorField vf = random_tangent_field(n, m, bound, seed);
        rep["field"] = to_json(vf);
        text << vector_field_to_text(vf) << "\n";
    } else {
        GeneratedField g = generate(family_spec_from_json(family, params));
        rep["generated"] = to_json(g);
        text << vector_field_to_text(g.field) << "\n";
        for (const auto& [a, mult] : g.meridians)
            text << "meridian: " << Hyperplane(a, Rational(0)).polynomial().str()
                 << " = 0   multiplicity " << mult << "\n";
        for (const auto& [k, mult] : g.parallels)
            text << "parallel: x" << g.field.dim() << " = " << rational_to_string(k)
                 << "   multiplicity " << mult << "\n";
        for (const auto& p : g.first_integrals)
            text << "first integral: " << p.str() << "\n";
        if (g.no_meridians) text << "no invariant meridians\n";
    }
    return emit(rep, io, text.str(), 0);
}

int run_selftest(const Io& io, const std::string& which) {
    if (which != "cubic-kernel-s3")
        throw BadParametersError("unknown selftest: " + which);
    CubicKernelResult r = cubic_kernel_s3();
    Json rep = envelope("selftest");
    rep["name"] = which;
    rep["result"] = to_json(r);
    std::ostringstream text;
    text << "cubic kernel on the 3-sphere: kernel dimension " << r.dimension << " ("
         << r.monomial_basis.size() << " admissible monomials)\n";
    return emit(rep, io, text.str(), r.dimension == 0 ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of polynomial vector fields tangent to the unit sphere"};
    app.require_subcommand(1);
    int code = 0;

    Io io_tangent;
    auto* c_tangent = app.add_subcommand("check-tangent", "decide tangency, print the cofactor");
    add_io(c_tangent, io_tangent);
    c_tangent->callback([&]() { code = run_check_tangent(io_tangent); });

    Io io_decomp;
    bool layered = false;
    auto* c_decomp = app.add_subcommand("decompose", "canonical form (radial parts + skew matrix)");
    add_io(c_decomp, io_decomp);
    c_decomp->add_flag("--layered", layered, "split radial parts into sphere-power layers");
    c_decomp->callback([&]() { code = run_decompose(io_decomp, layered); });

    Io io_ext;
    std::string basis_arg, kind = "meridian";
    auto* c_ext = app.add_subcommand("extactic", "extactic polynomial of a linear system");
    add_io(c_ext, io_ext);
    c_ext->add_option("--basis", basis_arg, "semicolon-separated basis polynomials");
    c_ext->add_option("--kind", kind, "built-in basis when --basis is absent")
        ->check(CLI::IsMember({"meridian", "parallel"}));
    c_ext->callback([&]() { code = run_extactic(io_ext, basis_arg, kind); });

    Io io_mer;
    std::string cand_arg;
    auto* c_mer = app.add_subcommand("meridians", "invariant hyperplanes through the poles");
    add_io(c_mer, io_mer);
    c_mer->add_option("--candidates", cand_arg, "semicolon-separated normal vectors a1,a2,...");
    c_mer->callback([&]() { code = run_hyperplanes(io_mer, true, cand_arg); });

    Io io_par;
    auto* c_par = app.add_subcommand("parallels", "invariant level sets of the last coordinate");
    add_io(c_par, io_par);
    c_par->callback([&]() { code = run_hyperplanes(io_par, false, ""); });

    Io io_sph;
    std::string a_arg, b_arg = "0";
    auto* c_sph = app.add_subcommand("sphere-check", "invariance of the sphere section a.x + b = 0");
    add_io(c_sph, io_sph);
    c_sph->add_option("--a", a_arg, "comma-separated normal vector")->required();
    c_sph->add_option("--b", b_arg, "rational offset");
    c_sph->callback([&]() { code = run_sphere_check(io_sph, a_arg, b_arg); });

    Io io_ham;
    int obstruction_m = 0;
    std::string verify_arg;
    auto* c_ham = app.add_subcommand("hamiltonian", "Hamiltonian structure tests");
    add_io(c_ham, io_ham);
    c_ham->add_option("--m", obstruction_m, "run the degree-(m+2) obstruction instead");
    c_ham->add_option("--verify", verify_arg, "candidate h to verify against the pairing");
    c_ham->callback([&]() { code = run_hamiltonian(io_ham, obstruction_m, verify_arg); });

    Io io_proj;
    auto* c_proj = app.add_subcommand("project", "stereographic push-forward from the north pole");
    add_io(c_proj, io_proj);
    c_proj->callback([&]() { code = run_project(io_proj); });

    Io io_int;
    std::string int_arg;
    auto* c_int = app.add_subcommand("integrals", "certify candidate first integrals");
    add_io(c_int, io_int);
    c_int->add_option("--candidates", int_arg, "semicolon-separated candidate integrals")
        ->required();
    c_int->callback([&]() { code = run_integrals(io_int, int_arg); });

    Io io_gen;
    std::string family, params_arg = "{}";
    std::uint64_t seed = 0;
    auto* c_gen = app.add_subcommand("generate", "build a named family or a random tangent field");
    add_io(c_gen, io_gen, false);
    c_gen->add_option("--family", family, "family id, or \"random\"")->required();
    c_gen->add_option("--params", params_arg, "JSON parameter object");
    c_gen->add_option("--seed", seed, "seed for --family random");
    c_gen->callback([&]() { code = run_generate(io_gen, family, params_arg, seed); });

    Io io_self;
    std::string which;
    auto* c_self = app.add_subcommand("selftest", "run a built-in fixed computation");
    add_io(c_self, io_self, false);
    c_self->add_option("name", which, "selftest name (cubic-kernel-s3)")->required();
    c_self->callback([&]() { code = run_selftest(io_self, which); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadParametersError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptySectionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OddDimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ClearingFailedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DependentBasisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotDegreeOneHomogeneousError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotHomogeneousError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadDegreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisViolatedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // Domain negatives on well-formed input: not tangent, not invariant,
        // integrals not certified, ...
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
