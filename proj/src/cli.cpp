#include "fstruct/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "fstruct/checks.hpp"
#include "fstruct/error.hpp"
#include "fstruct/json_io.hpp"

namespace fstruct::cli {

namespace {

using io::Json;

struct Options {
    std::string spec;
    std::string points;
    std::string beta;
    std::string scales;
    std::string chart = "default";
    std::string method;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
    int samples = 0;
    // verify
    std::string vandermonde;
    bool generalized_vi = false;
    bool axiom = false;
    int faces = 0;
};

struct Outcome {
    std::string text;
    int code = kExitOk;
};

FactorizationStructure load_structure(const Options& o) {
    if (o.spec.empty()) fail(ErrorKind::Parse, "--spec is required");
    return io::structure_from(io::read_json_file(o.spec), o.seed);
}

std::vector<std::vector<Rat>> load_points(const Options& o) {
    if (o.points.empty()) fail(ErrorKind::Parse, "--points is required");
    return io::points_from(io::read_json_file(o.points));
}

Vec load_beta(const Options& o) {
    if (o.beta.empty()) fail(ErrorKind::Parse, "--beta is required");
    return io::parse_csv(o.beta);
}

std::vector<Rat> load_scales(const Options& o) { return o.scales.empty() ? std::vector<Rat>{} : io::parse_csv(o.scales); }

Chart load_chart(const FactorizationStructure& f, const Options& o) {
    if (o.chart == "default") return default_chart(f);
    if (o.chart == "momentum") return momentum_chart(f);
    return chart_from_tensor(f, io::tensor_from(io::read_json_file(o.chart)));
}

Cone load_cone(const Options& o) {
    const FactorizationStructure f = load_structure(o);
    return build_cone(f, load_chart(f, o), load_points(o));
}

bool gale_applicable(const Cone& cone) {
    return cone.origin && cone.origin->charted.structure.is_product_sv() && cone.origin->charted.chart.is_default;
}

std::vector<FacetCertificate> facets_by(const Cone& cone, const std::string& method) {
    if (method == "gale") return enumerate_facets_gale(cone);
    if (method == "brute") return enumerate_facets_bruteforce(cone);
    // auto
    return gale_applicable(cone) ? enumerate_facets_gale(cone) : enumerate_facets_bruteforce(cone);
}

Json bools(const std::vector<bool>& v) {
    Json out = Json::array();
    for (bool b : v) out.push_back(b);
    return out;
}

Outcome cmd_build(const Options& o) {
    const FactorizationStructure f = load_structure(o);
    const AxiomReport axiom = verify_axiom(f, o.samples > 0 ? o.samples : 8, o.seed);
    Json degrees = Json::array();
    if (axiom.pass()) {
        for (int s = 0; s < f.m(); ++s) degrees.push_back(curve_polynomials(f, s, o.seed).degree);
    }
    const Json out{{"structure", io::to_json(f)},
                   {"axiom", io::to_json(axiom)},
                   {"curve_degrees", degrees},
                   {"status", axiom.pass() ? "PASS" : "FAIL"}};
    return {io::dump(out), axiom.pass() ? kExitOk : kExitMismatch};
}

Outcome cmd_curve(const Options& o, std::ostream& err) {
    const FactorizationStructure f = load_structure(o);
    Json curves = Json::array();
    std::vector<FactorizationCurve> all;
    bool verified = true;
    for (int s = 0; s < f.m(); ++s) {
        const FactorizationCurve c = curve_polynomials(f, s, o.seed);
        Json entry = io::to_json(c);
        const auto dec = decompose_curve(f, c);
        if (const auto* cert = std::get_if<DecompositionCertificate>(&dec)) {
            entry["decomposition"] = io::to_json(*cert);
            const bool ok = verify_certificate(f, c, *cert);
            entry["decomposition"]["verified"] = ok;
            verified = verified && ok;
        } else {
            const auto& ind = std::get<Indecomposable>(dec);
            entry["decomposition"] = io::to_json(ind);
            err << "WARNING: factorization curve of slot " << s << " is indecomposable (" << ind.reason
                << "); this would be a counterexample worth reporting\n";
        }
        curves.push_back(entry);
        all.push_back(c);
    }
    // Slots grouped by curve equivalence, in order of first slot.
    Json classes = Json::array();
    std::vector<bool> used(all.size(), false);
    for (std::size_t a = 0; a < all.size(); ++a) {
        if (used[a]) continue;
        Json cls = Json::array({a});
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            if (!used[b] && curves_equivalent(f, all[a], all[b])) {
                used[b] = true;
                cls.push_back(b);
            }
        }
        classes.push_back(cls);
    }
    return {io::dump(Json{{"curves", curves}, {"equivalence_classes", classes}}), verified ? kExitOk : kExitMismatch};
}

Outcome cmd_cone(const Options& o) {
    const Cone cone = load_cone(o);
    Json out = io::to_json(cone);
    out["full_dimensional"] = is_full_dimensional(cone);
    out["pointed"] = is_pointed(cone);
    return {io::dump(out), kExitOk};
}

Json diff_json(const std::vector<FacetCertificate>& from, const std::vector<FacetCertificate>& against) {
    Json out = Json::array();
    for (const FacetCertificate& f : from) {
        const bool found = std::any_of(against.begin(), against.end(), [&](const FacetCertificate& g) { return same_facet(f, g); });
        if (!found) out.push_back(io::to_json(f));
    }
    return out;
}

Outcome cmd_facets(const Options& o) {
    const Cone cone = load_cone(o);
    const std::string method = o.method.empty() ? "gale" : o.method;
    Json out{{"method", method}};
    int code = kExitOk;
    std::vector<FacetCertificate> facets;
    if (method == "both") {
        facets = enumerate_facets_gale(cone);
        const std::vector<FacetCertificate> oracle = enumerate_facets_bruteforce(cone);
        const Json only_gale = diff_json(facets, oracle);
        const Json only_oracle = diff_json(oracle, facets);
        const bool match = only_gale.empty() && only_oracle.empty() && facets.size() == oracle.size();
        out["oracle"] = io::to_json(oracle);
        out["diff"] = Json{{"only_gale", only_gale}, {"only_oracle", only_oracle}};
        out["match"] = match;
        if (!match) code = kExitMismatch;
    } else if (method == "gale" || method == "brute") {
        facets = facets_by(cone, method);
    } else {
        fail(ErrorKind::Parse, "--method must be gale, brute or both");
    }
    out["facets"] = io::to_json(facets);
    out["simplicial"] = is_simplicial(cone, facets);
    out["extremal"] = bools(extremal_generators(cone, facets));
    return {io::dump(out), code};
}

Outcome cmd_polytope(const Options& o) {
    const Cone cone = load_cone(o);
    if (o.format != "json" && o.format != "off") fail(ErrorKind::Parse, "--format must be json or off");
    if (o.format == "off" && cone.ambient_dim != 3) fail(ErrorKind::InvalidArgument, "OFF export needs m = 2");
    const std::vector<FacetCertificate> facets = facets_by(cone, o.method);
    const PolytopeSection section = polytope_section(cone, facets, load_beta(o));
    if (o.format == "off") return {to_off(section), kExitOk};
    return {io::dump(io::to_json(section)), kExitOk};
}

Outcome cmd_verify(const Options& o) {
    const int chosen = static_cast<int>(!o.vandermonde.empty()) + static_cast<int>(o.generalized_vi) +
                       static_cast<int>(o.axiom) + static_cast<int>(o.faces > 0);
    if (chosen != 1) fail(ErrorKind::Parse, "choose exactly one of --vandermonde, --generalized-vi, --axiom, --faces");
    Json out;
    bool pass = false;
    if (!o.vandermonde.empty()) {
        const std::vector<Rat> xs = io::parse_csv(o.vandermonde);
        const VandermondeCheck c = vandermonde_full_check(xs);
        pass = c.ok();
        out = Json{{"check", "vandermonde"},
                   {"sum", io::to_json(vandermonde_identity(xs))},
                   {"sum_identity", c.sum_identity},
                   {"matrix_identity", c.matrix_identity},
                   {"delta_identities", c.delta_identities}};
    } else if (o.generalized_vi) {
        const FactorizationStructure f = load_structure(o);
        const ChartedStructure cs = make_charted(f, default_chart(f));
        std::optional<Vec> beta;
        if (!o.beta.empty()) beta = load_beta(o);
        const GeneralizedViSweep s = generalized_vi_sweep(cs, o.samples > 0 ? o.samples : 50, o.seed, beta);
        pass = s.pass();
        out = Json{{"check", "generalized_vi"},
                   {"trials", s.trials},
                   {"evaluations", s.evaluations},
                   {"nonzero_values", s.nonzero_values},
                   {"nonzero_beta_pairings", s.nonzero_beta_pairings},
                   {"skipped", s.skipped}};
    } else if (o.axiom) {
        const FactorizationStructure f = load_structure(o);
        const AxiomReport r = verify_axiom(f, o.samples > 0 ? o.samples : 8, o.seed);
        pass = r.pass();
        out = Json{{"check", "axiom"}, {"report", io::to_json(r)}};
    } else {
        const FactorizationStructure f = load_structure(o);
        const FaceSweep s = face_codim_sweep(f, o.faces, o.samples > 0 ? o.samples : 50, o.seed);
        pass = s.pass();
        Json exceptional = Json::array();
        for (const FaceSample& e : s.exceptional) {
            Json cons = Json::array();
            for (const auto& [slot, ell] : e.constraints) cons.push_back(Json{{"slot", slot}, {"point", io::to_json(ell)}});
            exceptional.push_back(Json{{"constraints", cons}, {"codim", e.codim}, {"reverified", e.reverified}});
        }
        out = Json{{"check", "faces"}, {"r", s.r}, {"samples", s.samples}, {"generic", s.generic}, {"exceptional", exceptional}};
    }
    out["pass"] = pass;
    return {io::dump(out), pass ? kExitOk : kExitMismatch};
}

Outcome cmd_delzant(const Options& o) {
    const FactorizationStructure f = load_structure(o);
    const std::vector<std::vector<Rat>> params = load_points(o);
    const Vec beta = load_beta(o);
    const std::vector<Rat> scales = load_scales(o);
    const bool simplex = f.meta() && f.meta()->groups() == 1 && params.size() == 1 && params[0].size() == f.dim() &&
                         o.chart == "default";
    if (simplex) {
        std::vector<Rat> xs = params[0];
        return {io::dump(io::to_json(simplex_delzant_check(f, xs, scales, beta))), kExitOk};
    }
    const Cone cone = build_cone(f, load_chart(f, o), params);
    const std::vector<FacetCertificate> facets = facets_by(cone, o.method);
    const RationalDelzantReport r = rational_delzant_check(cone, facets, scales, beta);
    if (r.status == DelzantStatus::BetaNotInterior) fail(ErrorKind::BetaNotInterior, "beta is not interior to the cone");
    return {io::dump(io::to_json(r)), kExitOk};
}

std::filesystem::path output_path(const std::string& out) {
    std::filesystem::path p(out);
    // The only environment knob: a directory for relative --out paths.
    if (const char* dir = std::getenv("FSTRUCT_OUTPUT_DIR"); dir != nullptr && *dir != '\0' && p.is_relative()) {
        p = std::filesystem::path(dir) / p;
    }
    return p;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--spec", o.spec, "structure JSON file");
    sub->add_option("--seed", o.seed, "seed for every random draw")->capture_default_str();
    sub->add_option("--out", o.out, "write the result here instead of stdout");
}

void add_cone_inputs(CLI::App* sub, Options& o) {
    sub->add_option("--points", o.points, "points JSON file");
    sub->add_option("--chart", o.chart, "default, momentum, or a tensor JSON file")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact factorization structures, compatible cones and polytopes", "fstruct"};
    app.require_subcommand(1, 1);

    CLI::App* build = app.add_subcommand("build", "build a structure and verify its defining axiom");
    add_common(build, o);
    build->add_option("--samples", o.samples, "axiom samples per slot");

    CLI::App* curve = app.add_subcommand("curve", "factorization curves with decomposition certificates");
    add_common(curve, o);

    CLI::App* cone = app.add_subcommand("cone", "compatible cone from curve parameters");
    add_common(cone, o);
    add_cone_inputs(cone, o);

    CLI::App* facets = app.add_subcommand("facets", "facets by the Gale condition, the oracle, or both");
    add_common(facets, o);
    add_cone_inputs(facets, o);
    facets->add_option("--method", o.method, "gale | brute | both");

    CLI::App* polytope = app.add_subcommand("polytope", "section of the dual cone by beta");
    add_common(polytope, o);
    add_cone_inputs(polytope, o);
    polytope->add_option("--beta", o.beta, "comma separated rationals");
    polytope->add_option("--method", o.method, "gale | brute (default: gale when applicable)");
    polytope->add_option("--format", o.format, "json | off")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "exact identity and genericity checks");
    add_common(verify, o);
    verify->add_option("--vandermonde", o.vandermonde, "comma separated distinct rationals");
    verify->add_flag("--generalized-vi", o.generalized_vi, "generalized Vandermonde identity on --spec");
    verify->add_flag("--axiom", o.axiom, "defining axiom on --spec");
    verify->add_option("--faces", o.faces, "face codimension check with r constraints");
    verify->add_option("--samples", o.samples, "number of seeded samples");
    verify->add_option("--beta", o.beta, "fixed beta for --generalized-vi");

    CLI::App* delzant = app.add_subcommand("delzant", "Delzant verdict for a compatible polytope");
    add_common(delzant, o);
    add_cone_inputs(delzant, o);
    delzant->add_option("--beta", o.beta, "comma separated rationals");
    delzant->add_option("--scales", o.scales, "positive scales C_r, one per generator");
    delzant->add_option("--method", o.method, "gale | brute");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    Outcome result;
    try {
        if (*build) result = cmd_build(o);
        else if (*curve) result = cmd_curve(o, err);
        else if (*cone) result = cmd_cone(o);
        else if (*facets) result = cmd_facets(o);
        else if (*polytope) result = cmd_polytope(o);
        else if (*verify) result = cmd_verify(o);
        else result = cmd_delzant(o);
    } catch (const Error& e) {
        Json payload{{"error", error_kind_name(e.kind())}, {"message", e.what()}};
        if (e.detail()) payload["detail"] = *e.detail();
        err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        result = {io::dump(payload), e.kind() == ErrorKind::Internal ? kExitMismatch : kExitValidation};
    }

    if (o.out.empty()) {
        out << result.text;
    } else {
        const std::filesystem::path path = output_path(o.out);
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << path.string() << "\n";
            return kExitValidation;
        }
        file << result.text;
    }
    return result.code;
}

}  // namespace fstruct::cli
