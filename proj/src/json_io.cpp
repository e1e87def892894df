#include "fstruct/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fstruct/error.hpp"

namespace fstruct::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_from(const Json& j, const char* what) {
    if (!j.is_number_integer()) fail(ErrorKind::Parse, std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> ints_from(const Json& j, const char* what) {
    if (!j.is_array()) fail(ErrorKind::Parse, std::string(what) + " must be an array");
    std::vector<int> out;
    for (const Json& x : j) out.push_back(int_from(x, what));
    return out;
}

Pair pair_from(const Json& j) {
    const Vec v = vec_from(j);
    if (v.size() != 2) fail(ErrorKind::Parse, "expected a pair of rationals");
    return {v[0], v[1]};
}

Json pair_json(const Pair& p) { return Json::array({to_json(p[0]), to_json(p[1])}); }

Json mat_json(const Mat& m) {
    Json rows = Json::array();
    for (const Vec& r : m.row_vectors()) rows.push_back(to_json(r));
    return rows;
}

Json vecs_json(const std::vector<Vec>& vs) {
    Json out = Json::array();
    for (const Vec& v : vs) out.push_back(to_json(v));
    return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Parse, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(ErrorKind::Parse, path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rat rat_from(const Json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(mpz_class(std::to_string(j.get<long long>())));
    fail(ErrorKind::Parse, "rationals must be \"p/q\" strings or integers");
}

Json to_json(const Rat& r) { return format_rat(r); }

Vec vec_from(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::Parse, "expected an array of rationals");
    Vec out;
    for (const Json& x : j) out.push_back(rat_from(x));
    return out;
}

Json to_json(const Vec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(to_json(x));
    return out;
}

Vec parse_csv(const std::string& text) {
    Vec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    if (out.empty()) fail(ErrorKind::Parse, "empty list of rationals");
    return out;
}

Tensor tensor_from(const Json& j) {
    const int m = int_from(field(j, "m"), "m");
    if (m < 0 || m > 20) fail(ErrorKind::Parse, "tensor slot count out of range");
    Vec coeffs = vec_from(field(j, "coeffs"));
    if (coeffs.size() != (std::size_t{1} << m)) fail(ErrorKind::Parse, "tensor needs 2^m coefficients");
    return Tensor(m, std::move(coeffs));
}

Json to_json(const Tensor& t) { return Json{{"m", t.slots()}, {"coeffs", to_json(t.coeffs())}}; }

Json to_json(const ProjPoint& p) { return pair_json(p.vector()); }

ProjPoint point_from(const Json& j) {
    const Pair p = pair_from(j);
    if (sgn(p[0]) == 0 && sgn(p[1]) == 0) fail(ErrorKind::Parse, "projective point cannot be zero");
    return ProjPoint::make(p[0], p[1]);
}

FactorizationStructure structure_from(const Json& spec, std::uint64_t seed) {
    const Json& kind_j = field(spec, "kind");
    if (!kind_j.is_string()) fail(ErrorKind::Parse, "kind must be a string");
    const std::string kind = kind_j.get<std::string>();
    if (kind == "veronese") {
        const int m = int_from(field(spec, "m"), "m");
        if (m < 1) fail(ErrorKind::Parse, "m must be positive");
        return build_veronese(m);
    }
    if (kind == "product_sv") {
        const std::vector<int> partition = ints_from(field(spec, "partition"), "partition");
        std::vector<Pair> base(partition.size(), Pair{Rat(1), Rat(0)});
        if (spec.contains("base_points")) {
            const Json& b = spec.at("base_points");
            if (!b.is_array() || b.size() != partition.size()) fail(ErrorKind::Parse, "one base point per group");
            for (std::size_t r = 0; r < b.size(); ++r) base[r] = pair_from(b[r]);
        }
        return build_product_sv(partition, base);
    }
    if (kind == "standard_sv") {
        const std::vector<int> partition = ints_from(field(spec, "partition"), "partition");
        const Json& g = field(spec, "gammas");
        if (!g.is_array()) fail(ErrorKind::Parse, "gammas must be an array");
        std::vector<Tensor> gammas;
        for (const Json& t : g) gammas.push_back(tensor_from(t));
        return build_standard_sv(partition, gammas);
    }
    if (kind == "product") {
        const Json& factors = field(spec, "factors");
        if (!factors.is_array() || factors.size() != 2) fail(ErrorKind::Parse, "product needs two factors");
        return product(structure_from(factors[0], seed), structure_from(factors[1], seed),
                       tensor_from(field(spec, "S")), tensor_from(field(spec, "T")));
    }
    if (kind == "quotient") {
        const FactorizationStructure base = structure_from(field(spec, "of"), seed);
        return quotient(base, int_from(field(spec, "slot"), "slot"), point_from(field(spec, "lambda")), seed).structure;
    }
    if (kind == "image") {
        const int m = int_from(field(spec, "m"), "m");
        const Json& b = field(spec, "basis");
        if (!b.is_array()) fail(ErrorKind::Parse, "basis must be an array");
        std::vector<Tensor> basis;
        for (const Json& t : b) basis.push_back(tensor_from(t));
        return FactorizationStructure::from_spanning(m, basis);
    }
    fail(ErrorKind::Parse, "unknown structure kind \"" + kind + "\"");
}

Json to_json(const FactorizationStructure& f) {
    Json basis = Json::array();
    for (const Tensor& t : f.basis()) basis.push_back(to_json(t));
    Json out{{"m", f.m()}, {"dim", f.dim()}, {"basis", basis}, {"product_sv", f.is_product_sv()}};
    if (f.meta()) {
        const SegreVeroneseData& d = *f.meta();
        Json gammas = Json::array();
        for (const Tensor& t : d.gammas) gammas.push_back(to_json(t));
        Json meta{{"partition", d.partition}, {"gammas", gammas}};
        if (const auto base = d.product_base_points()) {
            Json pts = Json::array();
            for (const Pair& p : *base) pts.push_back(pair_json(p));
            meta["base_points"] = pts;
        }
        out["segre_veronese"] = meta;
    }
    return out;
}

Json to_json(const AxiomReport& report) {
    Json slots = Json::array();
    for (const SlotVerdict& s : report.slots) {
        Json exceptional = Json::array();
        for (std::size_t k = 0; k < s.exceptional.size(); ++k) {
            exceptional.push_back(Json{{"point", to_json(s.exceptional[k])}, {"dim", s.exceptional_dims[k]}});
        }
        slots.push_back(Json{{"slot", s.slot},
                             {"pass", s.pass},
                             {"generic_dim", s.generic_dim},
                             {"draws", s.draws},
                             {"dim_one", s.dim_one},
                             {"exceptional", exceptional}});
    }
    return Json{{"pass", report.pass()},
                {"samples_per_slot", report.samples_per_slot},
                {"seed", report.seed},
                {"slots", slots}};
}

Json to_json(const Poly& p) { return to_json(Vec(p.coeffs())); }

Json to_json(const FactorizationCurve& c) {
    Json coords = Json::array();
    for (const Poly& p : c.coords) coords.push_back(to_json(p));
    return Json{{"slot", c.slot}, {"degree", c.degree}, {"coords", coords}};
}

FactorizationCurve curve_from(const Json& j) {
    FactorizationCurve c;
    c.slot = int_from(field(j, "slot"), "slot");
    c.degree = int_from(field(j, "degree"), "degree");
    const Json& coords = field(j, "coords");
    if (!coords.is_array()) fail(ErrorKind::Parse, "coords must be an array");
    for (const Json& p : coords) c.coords.emplace_back(vec_from(p));
    return c;
}

Json to_json(const DecompositionCertificate& cert) {
    Json transforms = Json::array();
    for (const Mat& m : cert.transforms) transforms.push_back(mat_json(m));
    return Json{{"decomposable", true}, {"slots", cert.slots}, {"transforms", transforms}, {"gamma", to_json(cert.gamma)}};
}

Json to_json(const Indecomposable& ind) {
    return Json{{"decomposable", false}, {"failing_slot", ind.failing_slot}, {"reason", ind.reason}};
}

std::vector<std::vector<Rat>> points_from(const Json& j) {
    const Json& groups = field(j, "groups");
    if (!groups.is_array()) fail(ErrorKind::Parse, "groups must be an array");
    std::vector<std::vector<Rat>> out;
    for (const Json& g : groups) {
        Vec v = vec_from(g);
        for (std::size_t a = 0; a < v.size(); ++a)
            for (std::size_t b = a + 1; b < v.size(); ++b) {
                if (v[a] == v[b]) fail(ErrorKind::RepeatedParameter, "repeated parameter " + format_rat(v[a]));
            }
        out.push_back(std::move(v));
    }
    return out;
}

Json to_json(const Cone& cone) {
    Json prov = Json::array();
    for (const Provenance& p : cone.provenance) prov.push_back(Json{{"group", p.group}, {"parameter", to_json(p.parameter)}});
    return Json{{"ambient_dim", cone.ambient_dim}, {"generators", vecs_json(cone.generators)}, {"provenance", prov}};
}

Json to_json(const FacetCertificate& f) {
    return Json{{"normal", to_json(f.normal)}, {"incident", f.incident}, {"kind", facet_kind_name(f.kind)}};
}

FacetCertificate facet_from(const Json& j) {
    FacetCertificate f;
    f.normal = vec_from(field(j, "normal"));
    for (int i : ints_from(field(j, "incident"), "incident")) {
        if (i < 0) fail(ErrorKind::Parse, "incident indices are nonnegative");
        f.incident.push_back(static_cast<std::size_t>(i));
    }
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "type1") f.kind = FacetKind::TypeOne;
    else if (kind == "type2") f.kind = FacetKind::TypeTwo;
    else if (kind == "oracle") f.kind = FacetKind::Oracle;
    else fail(ErrorKind::Parse, "unknown facet kind " + kind);
    return f;
}

Json to_json(const std::vector<FacetCertificate>& facets) {
    Json out = Json::array();
    for (const FacetCertificate& f : facets) out.push_back(to_json(f));
    return out;
}

Json to_json(const PolytopeSection& s) {
    return Json{{"beta", to_json(s.beta)},
                {"vertices", vecs_json(s.vertices)},
                {"normals", vecs_json(s.normals)},
                {"facet_generators", s.facet_generators},
                {"incidence", s.incidence}};
}

Json to_json(const Lattice& l) { return vecs_json(l.basis); }

Json to_json(const DelzantVerdict& v) {
    return Json{{"status", delzant_status_name(v.status)},
                {"coords", to_json(v.coords)},
                {"scales", to_json(Vec(v.scales))},
                {"lattice_basis", to_json(v.lattice)},
                {"notes", v.notes}};
}

Json to_json(const RationalDelzantReport& r) {
    return Json{{"status", delzant_status_name(r.status)},
                {"lattice_basis", to_json(r.lattice)},
                {"facet_generators", r.facet_generators},
                {"normal_coords", vecs_json(r.normal_coords)},
                {"vertex_determinants", to_json(Vec(r.vertex_determinants))},
                {"delzant_at_all_vertices", r.delzant_at_all_vertices},
                {"notes", r.notes}};
}

}  // namespace fstruct::io
