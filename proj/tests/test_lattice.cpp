#include <doctest.h>

#include "fstruct/checks.hpp"
#include "fstruct/error.hpp"
#include "fstruct/lattice.hpp"
#include "fstruct/sampling.hpp"
#include "oracle.hpp"

using namespace fstruct;

namespace {

std::vector<Rat> rats(std::initializer_list<int> xs) {
    std::vector<Rat> out;
    for (int x : xs) out.push_back(x);
    return out;
}

// beta in the basis of columns, by Cramer's rule over Leibniz determinants.
Vec cramer(const std::vector<Vec>& cols, const Vec& beta) {
    const std::size_t n = cols.size();
    auto rows_of = [&](const std::vector<Vec>& cs) {
        std::vector<Vec> rows(n, Vec(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) rows[r][c] = cs[c][r];
        return rows;
    };
    const Rat d = oracle::det(rows_of(cols));
    Vec out;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Vec> cs = cols;
        cs[k] = beta;
        out.push_back(oracle::det(rows_of(cs)) / d);
    }
    return out;
}

}  // namespace

TEST_CASE("elementary symmetric functions") {
    CHECK(elementary_symmetric(rats({1, 2, 3})) == rats({1, 6, 11, 6}));
    CHECK(elementary_symmetric({}) == rats({1}));
    CHECK(elementary_symmetric(rats({0, 0})) == rats({1, 0, 0}));
    Sampler rng(61, 1);
    for (int k = 0; k < 30; ++k) {
        std::vector<Rat> xs;
        for (std::size_t i = 0; i < 1 + rng.below(6); ++i) xs.push_back(rng.rational(9, 4));
        const std::vector<Rat> sigma = elementary_symmetric(xs), expand = oracle::expand_roots(xs);
        for (std::size_t i = 0; i < sigma.size(); ++i) CHECK(expand[i] == (i % 2 == 0 ? sigma[i] : Rat(-sigma[i])));
    }
}

TEST_CASE("Vandermonde identity examples") {
    CHECK(vandermonde_identity(rats({0, 1})) == Vec{1, 0});
    CHECK(vandermonde_identity(rats({0, 1, 2})) == Vec{1, 0, 0});
    CHECK_THROWS_AS((void)vandermonde_identity(rats({0, 1, 1})), Error);
    CHECK(vandermonde_full_check(rats({0, 1})).ok());
    CHECK(vandermonde_full_check(rats({1, 2, 3})).ok());
    CHECK_THROWS_AS((void)vandermonde_full_check(rats({2, 5, 2})), Error);
}

TEST_CASE("property: Vandermonde identities on random tuples") {
    Sampler rng(62, 1);
    for (int m = 1; m <= 8; ++m) {
        for (int k = 0; k < 20; ++k) {
            const std::vector<Rat> xs = rng.distinct_sorted(static_cast<std::size_t>(m) + 1, 40, 9);
            CHECK(vandermonde_identity(xs) == unit(static_cast<std::size_t>(m) + 1, 0));
            if (m <= 6 && k < 10) CHECK(vandermonde_full_check(xs).ok());
        }
    }
}

TEST_CASE("generalized Vandermonde identity") {
    const FactorizationStructure v2 = build_veronese(2);
    const ChartedStructure cs = make_charted(v2, default_chart(v2));
    const GeneralizedViValue v = generalized_vi_check(cs, Vec{1, 0, 0}, rats({0, 1}), 0, 1);
    CHECK(v.value == 0);
    CHECK(v.beta_pairing == 0);
    // The denominator vanishes when the point pairs to zero with beta.
    CHECK_THROWS_AS((void)generalized_vi_check(cs, Vec{0, 0, 1}, rats({0, 1}), 0, 1), Error);

    const FactorizationStructure sv = build_product_sv({2, 1}, {Pair{1, 0}, Pair{1, 0}});
    const GeneralizedViSweep s = generalized_vi_sweep(make_charted(sv, default_chart(sv)), 20, 5);
    CHECK(s.pass());
    CHECK(s.evaluations > 100);
    // Non-standard base points go through the adapted frames.
    const FactorizationStructure tilted = build_product_sv({2, 2}, {Pair{2, 1}, Pair{0, 1}});
    CHECK(generalized_vi_sweep(make_charted(tilted, default_chart(tilted)), 10, 6).pass());
}

TEST_CASE("common lattice") {
    const Lattice l = common_lattice({{1, 0}, {0, 1}}, {{Rat(1, 2), Rat(1, 3)}});
    CHECK(l.basis == std::vector<Vec>{{Rat(1, 2), 0}, {0, Rat(1, 3)}});
    CHECK(is_integral(*lattice_coordinates(l, Vec{Rat(1, 2), Rat(1, 3)})));
    CHECK(common_lattice({{1, 0}, {0, 1}}, {{2, 3}, {1, 0}}).basis == std::vector<Vec>{{1, 0}, {0, 1}});
    CHECK_THROWS_AS((void)common_lattice({{1, 2}, {2, 4}}, {}), Error);
    CHECK_THROWS_AS((void)common_lattice({{1, 0, 0}}, {{0, 1, 0}}), Error);

    Sampler rng(63, 1);
    for (int k = 0; k < 30; ++k) {
        std::vector<Vec> basis{{1, rng.rational(3, 2), 0}, {0, 1, rng.rational(3, 2)}, {rng.rational(3, 2), 0, 1}};
        if (oracle::det(basis) == 0) continue;
        std::vector<Vec> extras;
        for (int e = 0; e < 3; ++e) extras.push_back({rng.rational(5, 6), rng.rational(5, 6), rng.rational(5, 6)});
        const Lattice lat = common_lattice(basis, extras);
        for (const auto* group : {&basis, &extras})
            for (const Vec& v : *group) CHECK(is_integral(*lattice_coordinates(lat, v)));
    }
}

TEST_CASE("simplex Delzant examples") {
    const FactorizationStructure v2 = build_veronese(2);
    const std::vector<Rat> xs = rats({0, 1, 2});
    // Oracle: the generators are moment-curve points; solve by Cramer's rule.
    const std::vector<Vec> gens{oracle::moment(2, 0), oracle::moment(2, 1), oracle::moment(2, 2)};
    CHECK(cramer(gens, Vec{5, -3, 3}) == Vec{1, 1, 1});
    CHECK(cramer(gens, Vec{1, -1, 2}) == Vec{1, 1, 0});
    CHECK(cramer(gens, Vec{5, -3, 6}) == Vec{4, 1, 1});

    const DelzantVerdict d = simplex_delzant_check(v2, xs, {}, Vec{5, -3, 3});
    CHECK(d.status == DelzantStatus::Delzant);
    CHECK(d.coords == Vec{1, 1, 1});
    const DelzantVerdict b = simplex_delzant_check(v2, xs, {}, Vec{1, -1, 2});
    CHECK(b.status == DelzantStatus::BetaNotInterior);
    CHECK(b.coords == Vec{1, 1, 0});
    const DelzantVerdict r = simplex_delzant_check(v2, xs, {}, Vec{5, -3, 6});
    CHECK(r.status == DelzantStatus::RationalDelzant);
    CHECK(r.coords == Vec{4, 1, 1});
    CHECK(r.scales == rats({4, 1, 1}));
    CHECK_THROWS_AS((void)simplex_delzant_check(v2, rats({0, 1, 1}), {}, Vec{5, -3, 3}), Error);
}

TEST_CASE("property: simplex verdicts are invariant under positive rescaling of beta") {
    Sampler rng(64, 1);
    for (int m = 1; m <= 4; ++m) {
        const FactorizationStructure v = build_veronese(m);
        for (int k = 0; k < 10; ++k) {
            const std::vector<Rat> xs = rng.distinct_sorted(static_cast<std::size_t>(m) + 1, 10, 3);
            Vec beta;
            for (int i = 0; i <= m; ++i) beta.push_back(rng.rational(20, 3));
            Rat c(1 + static_cast<long>(rng.below(9)), 1 + static_cast<long>(rng.below(4)));
            c.canonicalize();
            const DelzantVerdict a = simplex_delzant_check(v, xs, {}, beta);
            const DelzantVerdict b = simplex_delzant_check(v, xs, {}, scaled(beta, c));
            CHECK(a.status == b.status);
            CHECK(scaled(a.coords, c) == b.coords);
        }
    }
}

TEST_CASE("rational Delzant report") {
    const FactorizationStructure v3 = build_veronese(3);
    const Cone c = build_cone(v3, default_chart(v3), {rats({1, 2, 3, 4, 5})});
    const auto facets = enumerate_facets_gale(c);
    const Vec beta{225, -55, 15, -5};
    const RationalDelzantReport r = rational_delzant_check(c, facets, {}, beta);
    CHECK(r.status == DelzantStatus::RationalDelzant);
    REQUIRE(r.normal_coords.size() == 5);
    for (const Vec& v : r.normal_coords) CHECK(is_integral(v));
    CHECK(r.vertex_determinants.size() == facets.size());
    CHECK(!r.notes.empty());
    // A generator lies on the boundary of the cone.
    CHECK(rational_delzant_check(c, facets, {}, c.generators[0]).status == DelzantStatus::BetaNotInterior);

    // Simplex sub-case: vertex smoothness in the constructed lattice agrees with the simplex verdict.
    const FactorizationStructure v2 = build_veronese(2);
    const Cone s = build_cone(v2, default_chart(v2), {rats({0, 1, 2})});
    const auto sf = enumerate_facets_gale(s);
    for (const Vec& b : {Vec{5, -3, 3}, Vec{5, -3, 6}}) {
        const RationalDelzantReport rr = rational_delzant_check(s, sf, {}, b);
        const DelzantVerdict sv = simplex_delzant_check(v2, rats({0, 1, 2}), {}, b);
        CHECK(rr.delzant_at_all_vertices == (sv.status == DelzantStatus::Delzant));
    }
    const RationalDelzantReport outside = rational_delzant_check(s, sf, {}, Vec{1, -1, 2});
    CHECK(outside.status == DelzantStatus::BetaNotInterior);
}
