#include "fstruct/polyhedra.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "fstruct/error.hpp"

namespace fstruct {

namespace {

const SegreVeroneseData& require_meta(const FactorizationStructure& f) {
    if (!f.meta()) fail(ErrorKind::InvalidArgument, "operation needs Segre-Veronese structure data");
    return *f.meta();
}

std::vector<Pair> repeated(const Pair& p, int count) { return std::vector<Pair>(static_cast<std::size_t>(count), p); }

// Calls `visit` with every k-subset of [0, n) in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::size_t> zero_set(const Cone& cone, const Vec& normal) {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < cone.generators.size(); ++g) {
        if (sgn(dot(normal, cone.generators[g])) == 0) out.push_back(g);
    }
    return out;
}

std::size_t generator_rank(const Cone& cone, std::span<const std::size_t> subset) {
    std::vector<Vec> rows;
    for (std::size_t i : subset) rows.push_back(cone.generators.at(i));
    return rank(Mat::from_rows(rows, cone.ambient_dim));
}

std::vector<FacetCertificate> sorted_facets(std::map<std::vector<std::size_t>, FacetCertificate> by_incidence) {
    std::vector<FacetCertificate> out;
    for (auto& [key, cert] : by_incidence) out.push_back(std::move(cert));
    return out;
}

}  // namespace

Chart default_chart(const FactorizationStructure& f) {
    const SegreVeroneseData& d = require_meta(f);
    const std::vector<AdaptedFrame> frames = f.frames();
    Tensor eps(f.m());
    for (int j = 0; j < d.groups(); ++j) {
        const AdaptedFrame& fj = frames[static_cast<std::size_t>(j)];
        std::vector<Pair> rest;
        for (int r = 0; r < d.groups(); ++r) {
            if (r == j) continue;
            const std::vector<Pair> part = repeated(frames[static_cast<std::size_t>(r)].vector({Rat(1), Rat(0)}),
                                                    d.partition[static_cast<std::size_t>(r)]);
            rest.insert(rest.end(), part.begin(), part.end());
        }
        const Tensor inner = kron(repeated(fj.vector({Rat(0), Rat(-1)}), d.partition[static_cast<std::size_t>(j)]));
        eps += insert_slots(inner, d.group_slots(j), kron(rest));
    }
    return Chart{f.pullback(eps), true};
}

Chart chart_from_tensor(const FactorizationStructure& f, const Tensor& epsilon) {
    require(epsilon.slots() == f.m(), "chart tensor has the wrong slot count");
    Chart c{f.pullback(epsilon), false};
    if (is_zero(c.covector)) fail(ErrorKind::ChartDegenerate, "chart tensor annihilates the structure");
    return c;
}

Chart momentum_chart(const FactorizationStructure& f) {
    return chart_from_tensor(f, kron(repeated({Rat(0), Rat(1)}, f.m())));
}

ProjPoint ChartedStructure::parameter_point(int group, const Rat& x) const {
    const Pair v = frames.at(static_cast<std::size_t>(group)).vector({Rat(1), x});
    return ProjPoint::make(v[0], v[1]);
}

Vec ChartedStructure::point(int group, const Rat& x) const {
    const Vec p = curve_point(curves.at(static_cast<std::size_t>(group)), parameter_point(group, x));
    const Rat d = dot(p, chart.covector);
    if (sgn(d) == 0) {
        fail(ErrorKind::ChartDegenerate, "curve point of group " + std::to_string(group) + " at parameter " +
                                             format_rat(x) + " pairs to zero with the chart");
    }
    return scaled(p, Rat(1) / d);
}

ChartedStructure make_charted(const FactorizationStructure& f, const Chart& chart) {
    const SegreVeroneseData& d = require_meta(f);
    require(chart.covector.size() == f.dim(), "chart has the wrong dimension");
    ChartedStructure out{f, chart, f.frames(), {}};
    for (int j = 0; j < d.groups(); ++j) out.curves.push_back(curve_polynomials(f, d.first_slot(j)));
    return out;
}

Vec curve_in_chart(const FactorizationStructure& f, int group, const Rat& x, const Chart& chart) {
    return make_charted(f, chart).point(group, x);
}

Cone build_cone(const FactorizationStructure& f, const Chart& chart, std::vector<std::vector<Rat>> params) {
    const SegreVeroneseData& d = require_meta(f);
    require(static_cast<int>(params.size()) == d.groups(), "one parameter list per group is required");
    for (auto& list : params) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            fail(ErrorKind::RepeatedParameter, "repeated parameter within a group");
        }
    }
    Cone cone;
    cone.ambient_dim = f.dim();
    ConeOrigin origin{make_charted(f, chart), params};
    for (int j = 0; j < d.groups(); ++j) {
        for (const Rat& x : params[static_cast<std::size_t>(j)]) {
            cone.generators.push_back(origin.charted.point(j, x));
            cone.provenance.push_back({j, x});
        }
    }
    if (!is_full_dimensional(cone)) {
        fail(ErrorKind::NotFullDimensional,
             "generators span a proper subspace; every group needs at least d_j points and one group more");
    }
    cone.origin = std::move(origin);
    return cone;
}

Cone cone_from_generators(std::vector<Vec> generators) {
    require(!generators.empty(), "a cone needs generators");
    Cone cone;
    cone.ambient_dim = generators.front().size();
    for (const Vec& g : generators) {
        require(g.size() == cone.ambient_dim, "generators must share the ambient dimension");
        require(!is_zero(g), "generators must be nonzero");
    }
    cone.generators = std::move(generators);
    return cone;
}

const char* facet_kind_name(FacetKind kind) {
    switch (kind) {
        case FacetKind::TypeOne: return "type1";
        case FacetKind::TypeTwo: return "type2";
        case FacetKind::Oracle: return "oracle";
    }
    return "oracle";
}

bool same_facet(const FacetCertificate& a, const FacetCertificate& b) {
    return a.normal == b.normal && a.incident == b.incident;
}

std::variant<FacetCertificate, Rejected> gale_facet_test(const Cone& cone, std::span<const std::size_t> candidate) {
    if (!cone.origin) fail(ErrorKind::InvalidArgument, "Gale test needs a cone built from a structure");
    const ChartedStructure& cs = cone.origin->charted;
    if (!cs.structure.is_product_sv() || !cs.chart.is_default) {
        fail(ErrorKind::InvalidArgument, "Gale test needs a product Segre-Veronese cone in the default chart");
    }
    const SegreVeroneseData& d = *cs.structure.meta();
    const int m = cs.structure.m();
    const int k = d.groups();
    if (static_cast<int>(candidate.size()) != m) return Rejected{"candidate must have m generators", {}};

    std::vector<bool> chosen(cone.generators.size(), false);
    std::vector<std::vector<Rat>> xs(static_cast<std::size_t>(k));
    for (std::size_t g : candidate) {
        require(g < cone.generators.size(), "candidate index out of range");
        if (chosen[g]) return Rejected{"candidate repeats a generator", {}};
        chosen[g] = true;
        xs[static_cast<std::size_t>(cone.provenance[g].group)].push_back(cone.provenance[g].parameter);
    }
    int plus_one = -1, minus_one = -1;
    bool type_one = true;
    for (int j = 0; j < k; ++j) {
        const int diff = static_cast<int>(xs[static_cast<std::size_t>(j)].size()) - d.partition[static_cast<std::size_t>(j)];
        if (diff == 0) continue;
        type_one = false;
        if (diff == 1 && plus_one < 0) plus_one = j;
        else if (diff == -1 && minus_one < 0) minus_one = j;
        else return Rejected{"candidate distribution is neither type one nor type two", {}};
    }
    if (!type_one && (plus_one < 0 || minus_one < 0)) {
        return Rejected{"candidate distribution is neither type one nor type two", {}};
    }
    if (generator_rank(cone, candidate) != static_cast<std::size_t>(m)) return Rejected{"candidate is dependent", {}};

    // Normal: phi^t of a product of (1, x) factors in adapted coordinates, with (0, 1) first in group r for type two.
    std::vector<Pair> factors;
    for (int j = 0; j < k; ++j) {
        const AdaptedFrame& fr = cs.frames[static_cast<std::size_t>(j)];
        const auto& xj = xs[static_cast<std::size_t>(j)];
        const int dj = d.partition[static_cast<std::size_t>(j)];
        if (!type_one && j == minus_one) {
            factors.push_back(fr.vector({Rat(0), Rat(1)}));
            for (const Rat& x : xj) factors.push_back(fr.vector({Rat(1), x}));
        } else {
            for (int i = 0; i < dj; ++i) factors.push_back(fr.vector({Rat(1), xj[static_cast<std::size_t>(i)]}));
        }
    }
    Vec normal = cs.structure.pullback(kron(factors));

    // p_j(t) on the remaining parameters; for type two only group r is off the hyperplane.
    std::vector<Rat> predicted(cone.generators.size(), Rat(0));
    std::vector<int> signs;
    for (std::size_t g = 0; g < cone.generators.size(); ++g) {
        if (chosen[g]) continue;
        const int j = cone.provenance[g].group;
        if (!type_one && j != minus_one) continue;
        Rat v = type_one ? Rat(1) : Rat(-1);
        for (const Rat& x : xs[static_cast<std::size_t>(j)]) v *= cone.provenance[g].parameter - x;
        predicted[g] = v;
        if (sgn(v) != 0) signs.push_back(sgn(v));
    }
    const bool has_pos = std::find(signs.begin(), signs.end(), 1) != signs.end();
    const bool has_neg = std::find(signs.begin(), signs.end(), -1) != signs.end();
    if (has_pos && has_neg) return Rejected{"sign polynomial changes sign on the remaining parameters", signs};
    if (!has_pos && !has_neg) return Rejected{"no generator off the hyperplane", signs};

    for (std::size_t g = 0; g < cone.generators.size(); ++g) {
        if (dot(normal, cone.generators[g]) != predicted[g]) {
            fail(ErrorKind::Internal, "Gale sign prediction disagrees with direct pairing at generator " + std::to_string(g));
        }
    }
    if (has_neg) normal = scaled(normal, Rat(-1));
    FacetCertificate cert;
    cert.normal = ray_normalized(normal);
    cert.incident = zero_set(cone, cert.normal);
    cert.kind = type_one ? FacetKind::TypeOne : FacetKind::TypeTwo;
    return cert;
}

std::vector<FacetCertificate> enumerate_facets_gale(const Cone& cone) {
    if (!cone.origin) fail(ErrorKind::InvalidArgument, "Gale enumeration needs a cone built from a structure");
    const SegreVeroneseData& d = require_meta(cone.origin->charted.structure);
    const int k = d.groups();
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(k));
    for (std::size_t g = 0; g < cone.generators.size(); ++g) {
        members[static_cast<std::size_t>(cone.provenance[g].group)].push_back(g);
    }
    auto count = [&](int j) { return members[static_cast<std::size_t>(j)].size(); };
    auto part = [&](int j) { return static_cast<std::size_t>(d.partition[static_cast<std::size_t>(j)]); };

    std::map<std::vector<std::size_t>, FacetCertificate> found;
    auto consider = [&](const std::vector<std::size_t>& candidate) {
        auto result = gale_facet_test(cone, candidate);
        if (auto* cert = std::get_if<FacetCertificate>(&result)) found.emplace(cert->incident, std::move(*cert));
    };

    // Type one: d_j parameters from every group.
    std::function<void(int, std::vector<std::size_t>&)> type_one = [&](int j, std::vector<std::size_t>& acc) {
        if (j == k) { consider(acc); return; }
        for_each_subset(count(j), part(j), [&](const std::vector<std::size_t>& sub) {
            const std::size_t before = acc.size();
            for (std::size_t i : sub) acc.push_back(members[static_cast<std::size_t>(j)][i]);
            type_one(j + 1, acc);
            acc.resize(before);
        });
    };
    std::vector<std::size_t> acc;
    type_one(0, acc);

    // Type two: the hyperplane depends only on the d_r - 1 parameters of group r.
    for (int r = 0; r < k; ++r) {
        int donor = -1;
        bool enough = true;
        for (int j = 0; j < k; ++j) {
            if (j == r) continue;
            if (count(j) < part(j)) enough = false;
            if (donor < 0 && count(j) >= part(j) + 1) donor = j;
        }
        if (!enough || donor < 0) continue;
        std::vector<std::size_t> fixed;
        for (int j = 0; j < k; ++j) {
            if (j == r) continue;
            const std::size_t take = part(j) + (j == donor ? 1 : 0);
            for (std::size_t i = 0; i < take; ++i) fixed.push_back(members[static_cast<std::size_t>(j)][i]);
        }
        for_each_subset(count(r), part(r) - 1, [&](const std::vector<std::size_t>& sub) {
            std::vector<std::size_t> candidate = fixed;
            for (std::size_t i : sub) candidate.push_back(members[static_cast<std::size_t>(r)][i]);
            std::sort(candidate.begin(), candidate.end());
            consider(candidate);
        });
    }
    return sorted_facets(std::move(found));
}

std::vector<FacetCertificate> enumerate_facets_bruteforce(const Cone& cone) {
    if (!is_full_dimensional(cone)) fail(ErrorKind::NotFullDimensional, "cone is not full-dimensional");
    if (!is_pointed(cone)) fail(ErrorKind::NotPointed, "cone contains a line");
    const std::size_t m = cone.ambient_dim - 1;
    std::map<std::vector<std::size_t>, FacetCertificate> found;
    for_each_subset(cone.generators.size(), m, [&](const std::vector<std::size_t>& subset) {
        std::vector<Vec> rows;
        for (std::size_t i : subset) rows.push_back(cone.generators[i]);
        const Subspace ker = kernel(Mat::from_rows(rows, cone.ambient_dim));
        if (ker.dim() != 1) return;
        Vec normal = ker.basis().row(0);
        int side = 0;
        for (const Vec& g : cone.generators) {
            const int s = sgn(dot(normal, g));
            if (s == 0) continue;
            if (side != 0 && s != side) return;
            side = s;
        }
        if (side < 0) normal = scaled(normal, Rat(-1));
        FacetCertificate cert;
        cert.normal = ray_normalized(normal);
        cert.incident = zero_set(cone, cert.normal);
        cert.kind = FacetKind::Oracle;
        found.emplace(cert.incident, std::move(cert));
    });
    return sorted_facets(std::move(found));
}

bool is_full_dimensional(const Cone& cone) {
    return rank(Mat::from_rows(cone.generators, cone.ambient_dim)) == cone.ambient_dim;
}

bool is_pointed(const Cone& cone) {
    // Phase one for: G c = 0, sum c = 1, c >= 0. Pointed iff infeasible.
    const std::size_t n = cone.generators.size();
    const std::size_t rows = cone.ambient_dim + 1;
    const std::size_t cols = n + rows;
    Mat t(rows, cols + 1);
    for (std::size_t i = 0; i < cone.ambient_dim; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = cone.generators[j][i];
    for (std::size_t j = 0; j < n; ++j) t(rows - 1, j) = 1;
    t(rows - 1, cols) = 1;
    for (std::size_t i = 0; i < rows; ++i) t(i, n + i) = 1;
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;

    for (;;) {
        // Reduced costs for minimizing the sum of artificials; Bland's rule prevents cycling.
        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j < cols && !entering; ++j) {
            Rat reduced = j >= n ? Rat(1) : Rat(0);
            for (std::size_t i = 0; i < rows; ++i) {
                if (basis[i] >= n) reduced -= t(i, j);
            }
            if (sgn(reduced) < 0) entering = j;
        }
        if (!entering) break;
        const std::size_t e = *entering;
        std::optional<std::size_t> leave;
        Rat best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (sgn(t(i, e)) <= 0) continue;
            const Rat ratio = t(i, cols) / t(i, e);
            if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (!leave) break;
        const std::size_t p = *leave;
        const Rat inv = Rat(1) / t(p, e);
        for (std::size_t j = 0; j <= cols; ++j) t(p, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == p || sgn(t(i, e)) == 0) continue;
            const Rat factor = t(i, e);
            for (std::size_t j = 0; j <= cols; ++j) t(i, j) -= factor * t(p, j);
        }
        basis[p] = e;
    }
    Rat objective = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] >= n) objective += t(i, cols);
    }
    return sgn(objective) > 0;
}

bool is_simplicial(const Cone& cone, std::span<const FacetCertificate> facets) {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const FacetCertificate& f) { return f.incident.size() + 1 == cone.ambient_dim; });
}

std::vector<bool> extremal_generators(const Cone& cone, std::span<const FacetCertificate> facets) {
    std::vector<bool> out(cone.generators.size(), false);
    for (std::size_t g = 0; g < cone.generators.size(); ++g) {
        std::vector<Vec> normals;
        for (const FacetCertificate& f : facets) {
            if (std::binary_search(f.incident.begin(), f.incident.end(), g)) normals.push_back(f.normal);
        }
        if (!normals.empty()) out[g] = rank(Mat::from_rows(normals, cone.ambient_dim)) + 1 == cone.ambient_dim;
    }
    return out;
}

FaceSubspace face_subspace(const FactorizationStructure& f, std::span<const std::pair<int, ProjPoint>> constraints) {
    require(!constraints.empty(), "face subspace needs at least one constraint");
    const std::size_t n = std::size_t{1} << f.m();
    std::vector<int> seen;
    Subspace meet = Subspace::full(n);
    FaceSubspace out;
    out.via_hyperplanes = Subspace::full(f.dim());
    for (const auto& [slot, ell] : constraints) {
        require(std::find(seen.begin(), seen.end(), slot) == seen.end(), "face constraints need distinct slots");
        seen.push_back(slot);
        const Subspace sigma = sigma_subspace(f.m(), slot, ell);
        meet = intersect(meet, sigma);
        std::vector<Vec> images;
        for (const Vec& v : sigma.basis_vectors()) images.push_back(f.pullback(Tensor(f.m(), v)));
        out.via_hyperplanes = intersect(out.via_hyperplanes, Subspace::span(f.dim(), images));
    }
    std::vector<Vec> images;
    for (const Vec& v : meet.basis_vectors()) images.push_back(f.pullback(Tensor(f.m(), v)));
    out.subspace = Subspace::span(f.dim(), images);
    out.codim = f.dim() - out.subspace.dim();
    out.agrees = out.subspace == out.via_hyperplanes;
    return out;
}

std::size_t face_dual_dimension(const FactorizationStructure& f, std::span<const std::pair<int, ProjPoint>> constraints) {
    const std::size_t n = std::size_t{1} << f.m();
    Subspace total(n);
    for (const auto& [slot, ell] : constraints) total = sum(total, sigma_annihilator(f.m(), slot, ell));
    return intersect(f.image(), total).dim();
}

PolytopeSection polytope_section(const Cone& cone, std::span<const FacetCertificate> facets, const Vec& beta) {
    require(beta.size() == cone.ambient_dim, "beta has the wrong dimension");
    require(!facets.empty(), "polytope section needs the cone facets");
    PolytopeSection out;
    out.beta = beta;
    for (const FacetCertificate& f : facets) {
        const Rat value = dot(f.normal, beta);
        if (sgn(value) <= 0) {
            fail(ErrorKind::BetaNotInterior, "beta pairs to " + format_rat(value) + " with a facet normal");
        }
        out.vertices.push_back(scaled(f.normal, Rat(1) / value));
    }
    const std::vector<bool> extremal = extremal_generators(cone, facets);
    std::vector<long> position(cone.generators.size(), -1);
    for (std::size_t g = 0; g < extremal.size(); ++g) {
        if (!extremal[g]) continue;
        position[g] = static_cast<long>(out.facet_generators.size());
        out.facet_generators.push_back(g);
        out.normals.push_back(cone.generators[g]);
    }
    for (const FacetCertificate& f : facets) {
        std::vector<std::size_t> row;
        for (std::size_t g : f.incident) {
            if (position[g] >= 0) row.push_back(static_cast<std::size_t>(position[g]));
        }
        out.incidence.push_back(std::move(row));
    }
    return out;
}

std::string to_off(const PolytopeSection& section) {
    require(!section.vertices.empty() && section.vertices.front().size() == 3, "OFF export needs a polygon (m = 2)");
    // Walk the polygon: consecutive vertices share a facet.
    const std::size_t nv = section.vertices.size();
    std::vector<std::size_t> order{0};
    std::vector<bool> used(nv, false);
    used[0] = true;
    while (order.size() < nv) {
        const auto& cur = section.incidence[order.back()];
        std::optional<std::size_t> next;
        for (std::size_t v = 0; v < nv && !next; ++v) {
            if (used[v]) continue;
            for (std::size_t facet : section.incidence[v]) {
                if (std::find(cur.begin(), cur.end(), facet) != cur.end()) { next = v; break; }
            }
        }
        if (!next) fail(ErrorKind::Internal, "polygon vertex cycle is broken");
        used[*next] = true;
        order.push_back(*next);
    }
    std::ostringstream os;
    os << "OFF\n" << nv << " 1 0\n";
    char buf[64];
    for (const Vec& v : section.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.12g", v[i].get_d());
            os << (i ? " " : "") << buf;
        }
        os << '\n';
    }
    os << nv;
    for (std::size_t v : order) os << ' ' << v;
    os << '\n';
    return os.str();
}

}  // namespace fstruct
