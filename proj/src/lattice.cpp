#include "fstruct/lattice.hpp"

#include <algorithm>

#include "fstruct/error.hpp"

namespace fstruct {

namespace {

Rat power(const Rat& x, std::size_t e) {
    Rat out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= x;
    return out;
}

Rat delta(const std::vector<Rat>& xs, std::size_t r) {
    Rat d = 1;
    for (std::size_t q = 0; q < xs.size(); ++q) {
        if (q != r) d *= xs[r] - xs[q];
    }
    if (sgn(d) == 0) fail(ErrorKind::RepeatedParameter, "values must be distinct");
    return d;
}

}  // namespace

std::vector<Rat> elementary_symmetric(const std::vector<Rat>& xs) {
    std::vector<Rat> sigma(xs.size() + 1, Rat(0));
    sigma[0] = 1;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        for (std::size_t i = k + 1; i > 0; --i) sigma[i] += sigma[i - 1] * xs[k];
    }
    return sigma;
}

Rat sigma_partial(const std::vector<Rat>& xs, std::size_t r, std::size_t i) {
    if (i == 0) return 0;
    std::vector<Rat> rest;
    for (std::size_t q = 0; q < xs.size(); ++q) {
        if (q != r) rest.push_back(xs[q]);
    }
    return elementary_symmetric(rest)[i - 1];
}

Vec vandermonde_identity(const std::vector<Rat>& xs) {
    require(xs.size() >= 2, "at least two values are required");
    const std::size_t m = xs.size() - 1;
    Vec acc = zeros(m + 1);
    for (std::size_t r = 0; r < xs.size(); ++r) {
        const Rat inv = Rat(1) / delta(xs, r);
        for (std::size_t k = 0; k <= m; ++k) {
            const Rat term = power(xs[r], m - k) * inv;
            if (k % 2 == 0) acc[k] += term;
            else acc[k] -= term;
        }
    }
    return acc;
}

VandermondeCheck vandermonde_full_check(const std::vector<Rat>& xs) {
    VandermondeCheck out;
    const std::size_t n = xs.size();
    out.sum_identity = vandermonde_identity(xs) == unit(n, 0);

    Mat d(n, n), x(n, n);
    std::vector<Rat> deltas(n);
    for (std::size_t r = 0; r < n; ++r) {
        deltas[r] = delta(xs, r);
        for (std::size_t i = 1; i <= n; ++i) d(r, i - 1) = sigma_partial(xs, r, i);
    }
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t c = 0; c < n; ++c) {
            const Rat v = power(xs[c], n - j);
            x(j - 1, c) = j % 2 == 0 ? v : Rat(-v);
        }
    }
    Mat expected(n, n);
    for (std::size_t r = 0; r < n; ++r) expected(r, r) = -deltas[r];
    out.matrix_identity = d * x == expected;

    out.delta_identities = true;
    for (std::size_t i = 1; i <= n && out.delta_identities; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            Rat acc = 0;
            for (std::size_t r = 0; r < n; ++r) {
                const Rat term = power(xs[r], n - j) * d(r, i - 1) / deltas[r];
                if ((j - 1) % 2 == 0) acc += term;
                else acc -= term;
            }
            if (acc != Rat(i == j ? 1 : 0)) { out.delta_identities = false; break; }
        }
    }
    return out;
}

GeneralizedViValue generalized_vi_check(const ChartedStructure& cs, const Vec& beta, const std::vector<Rat>& xs, int i,
                                        int j) {
    const FactorizationStructure& f = cs.structure;
    const SegreVeroneseData& d = *f.meta();
    require(static_cast<int>(xs.size()) == f.m(), "one parameter per slot is required");
    require(i != j && i >= 0 && j >= 0 && i < f.m() && j < f.m(), "slots i and j must be distinct and in range");
    require(beta.size() == f.dim(), "beta has the wrong dimension");

    std::vector<Pair> factors;
    for (int s = 0; s < f.m(); ++s) {
        factors.push_back(cs.frames[static_cast<std::size_t>(d.group_of_slot(s))].vector({Rat(1), xs[static_cast<std::size_t>(s)]}));
    }
    const Vec phi_x = f.pullback(kron(factors));
    factors[static_cast<std::size_t>(i)] = cs.frames[static_cast<std::size_t>(d.group_of_slot(i))].vector({Rat(0), Rat(1)});
    const Vec phi_dx = f.pullback(kron(factors));

    const Rat den = dot(phi_x, beta);
    if (sgn(den) == 0) fail(ErrorKind::DenominatorVanishes, "the point pairs to zero with beta");
    const Vec d_mu = scaled(subtracted(scaled(phi_dx, den), scaled(phi_x, dot(phi_dx, beta))), Rat(1) / (den * den));

    const FactorizationCurve cj = curve_polynomials(f, j);
    const Pair lj = cs.frames[static_cast<std::size_t>(d.group_of_slot(j))].vector({Rat(1), xs[static_cast<std::size_t>(j)]});
    Vec psi = curve_point(cj, ProjPoint::make(lj[0], lj[1]));
    const Rat norm = dot(psi, cs.chart.covector);
    if (sgn(norm) == 0) fail(ErrorKind::ChartDegenerate, "curve point pairs to zero with the chart");
    psi = scaled(psi, Rat(1) / norm);
    return {dot(d_mu, psi), dot(d_mu, beta)};
}

bool is_integral(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

std::optional<Vec> lattice_coordinates(const Lattice& lattice, const Vec& v) {
    require(!lattice.basis.empty(), "empty lattice");
    const Mat bt = Mat::from_rows(lattice.basis, v.size()).transposed();
    return solve(bt, v);
}

Lattice common_lattice(const std::vector<Vec>& basis, const std::vector<Vec>& extras) {
    require(!basis.empty(), "common lattice needs basis vectors");
    const std::size_t n = basis.front().size();
    const Mat b = Mat::from_rows(basis, n);
    if (rank(b) != basis.size()) fail(ErrorKind::DependentBasis, "lattice basis vectors are dependent");
    const Mat bt = b.transposed();
    std::vector<mpz_class> l(basis.size(), mpz_class(1));
    for (const Vec& e : extras) {
        const std::optional<Vec> c = solve(bt, e);
        if (!c) fail(ErrorKind::NoCommonLattice, "a vector lies outside the span of the basis");
        for (std::size_t r = 0; r < c->size(); ++r) mpz_lcm(l[r].get_mpz_t(), l[r].get_mpz_t(), (*c)[r].get_den_mpz_t());
    }
    Lattice out;
    for (std::size_t r = 0; r < basis.size(); ++r) out.basis.push_back(scaled(basis[r], Rat(1) / Rat(l[r])));
    for (const auto* group : {&basis, &extras}) {
        for (const Vec& v : *group) {
            const auto c = lattice_coordinates(out, v);
            if (!c || !is_integral(*c)) fail(ErrorKind::Internal, "common lattice does not contain an input");
        }
    }
    return out;
}

const char* delzant_status_name(DelzantStatus s) {
    switch (s) {
        case DelzantStatus::Delzant: return "Delzant";
        case DelzantStatus::RationalDelzant: return "RationalDelzant";
        case DelzantStatus::BetaNotInterior: return "BetaNotInterior";
    }
    return "BetaNotInterior";
}

DelzantVerdict simplex_delzant_check(const FactorizationStructure& f, const std::vector<Rat>& xs,
                                     const std::vector<Rat>& scales, const Vec& beta) {
    require(f.meta() && f.meta()->groups() == 1, "simplex Delzant check needs a Veronese structure");
    require(xs.size() == f.dim(), "need m + 1 parameters");
    require(scales.empty() || scales.size() == xs.size(), "one scale per parameter");
    require(beta.size() == f.dim(), "beta has the wrong dimension");
    for (std::size_t r = 0; r < xs.size(); ++r)
        for (std::size_t q = r + 1; q < xs.size(); ++q) {
            if (xs[r] == xs[q]) fail(ErrorKind::RepeatedParameter, "parameters must be distinct");
        }
    DelzantVerdict out;
    out.scales = scales.empty() ? std::vector<Rat>(xs.size(), Rat(1)) : scales;
    for (const Rat& c : out.scales) require(sgn(c) > 0, "scales must be positive");

    const ChartedStructure cs = make_charted(f, default_chart(f));
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < xs.size(); ++r) gens.push_back(scaled(cs.point(0, xs[r]), out.scales[r]));
    const Mat cols = Mat::from_rows(gens, f.dim()).transposed();
    const std::optional<Vec> a = solve(cols, beta);
    if (!a || rank(cols) != f.dim()) fail(ErrorKind::Internal, "simplex generators are dependent");
    out.coords = *a;

    if (std::any_of(a->begin(), a->end(), [](const Rat& x) { return sgn(x) <= 0; })) {
        out.status = DelzantStatus::BetaNotInterior;
        out.notes.push_back("beta has a nonpositive coordinate in the generator basis");
        return out;
    }
    const bool equal = std::all_of(a->begin(), a->end(), [&](const Rat& x) { return x == a->front(); });
    if (equal) {
        out.status = DelzantStatus::Delzant;
        out.notes.push_back("beta has equal coordinates; the scaled generators give a Delzant simplex");
    } else {
        out.status = DelzantStatus::RationalDelzant;
        for (std::size_t r = 0; r < gens.size(); ++r) {
            out.scales[r] *= (*a)[r];
            gens[r] = scaled(gens[r], (*a)[r]);
        }
        out.notes.push_back("scales multiplied by the beta coordinates; in the rescaled generators beta has coordinates (1, ..., 1)");
    }
    out.lattice.basis = gens;
    return out;
}

namespace {

// h / <beta> identified with Q^m by subtracting the beta component at its first nonzero coordinate.
Vec mod_beta(const Vec& v, const Vec& beta) {
    std::size_t p = 0;
    while (sgn(beta[p]) == 0) ++p;
    const Rat c = v[p] / beta[p];
    Vec out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != p) out.push_back(v[i] - c * beta[i]);
    }
    return out;
}

}  // namespace

RationalDelzantReport rational_delzant_check(const Cone& cone, std::span<const FacetCertificate> facets,
                                             const std::vector<Rat>& scales, const Vec& beta) {
    require(beta.size() == cone.ambient_dim && !is_zero(beta), "beta must be a nonzero vector of the right dimension");
    require(scales.empty() || scales.size() == cone.generators.size(), "one scale per generator");
    RationalDelzantReport out;
    for (const FacetCertificate& f : facets) {
        if (sgn(dot(f.normal, beta)) <= 0) {
            out.status = DelzantStatus::BetaNotInterior;
            out.notes.push_back("beta is not in the interior of the cone");
            return out;
        }
    }
    const PolytopeSection section = polytope_section(cone, facets, beta);
    out.facet_generators = section.facet_generators;
    std::vector<Vec> reduced;
    for (std::size_t g : section.facet_generators) {
        const Rat c = scales.empty() ? Rat(1) : scales[g];
        require(sgn(c) > 0, "scales must be positive");
        reduced.push_back(mod_beta(scaled(cone.generators[g], c), beta));
    }
    const std::size_t m = cone.ambient_dim - 1;
    const std::vector<std::size_t> chosen = greedy_independent(reduced, m);
    require(chosen.size() == m, "normals do not span the quotient");
    std::vector<Vec> basis, extras;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) basis.push_back(reduced[i]);
        else extras.push_back(reduced[i]);
    }
    out.lattice = common_lattice(basis, extras);
    for (const Vec& v : reduced) out.normal_coords.push_back(*lattice_coordinates(out.lattice, v));

    out.delzant_at_all_vertices = true;
    for (const auto& through : section.incidence) {
        if (through.size() != m) {
            out.vertex_determinants.push_back(0);
            out.delzant_at_all_vertices = false;
            continue;
        }
        std::vector<Vec> rows;
        for (std::size_t k : through) rows.push_back(out.normal_coords[k]);
        const Rat det = determinant(Mat::from_rows(rows, m));
        out.vertex_determinants.push_back(det);
        if (abs(det) != 1) out.delzant_at_all_vertices = false;
    }
    // Over Q every beta is rational for the lattice, so the verdict never depends on beta beyond interiority.
    out.status = DelzantStatus::RationalDelzant;
    out.notes.push_back("all input data is rational, so beta is automatically rational for the lattice");
    out.notes.push_back("every normal modulo beta has integral coordinates in the lattice basis");
    out.notes.push_back(out.delzant_at_all_vertices ? "each vertex's normals form a basis of the lattice"
                                                    : "some vertex's normals do not form a basis of the lattice");
    return out;
}

}  // namespace fstruct
