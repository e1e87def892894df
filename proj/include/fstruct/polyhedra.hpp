#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fstruct/curves.hpp"
#include "fstruct/structure.hpp"

namespace fstruct {

// A covector on the structure space, stored as phi^t of a tensor in V.
struct Chart {
    Vec covector;
    bool is_default = false;
};

// Product Segre-Veronese structures use adapted coordinates on each group; others use standard coordinates.
[[nodiscard]] Chart default_chart(const FactorizationStructure& f);
[[nodiscard]] Chart chart_from_tensor(const FactorizationStructure& f, const Tensor& epsilon);
// (0, 1)^{⊗m}.
[[nodiscard]] Chart momentum_chart(const FactorizationStructure& f);

// A structure with its chart and one curve per group, computed once.
struct ChartedStructure {
    FactorizationStructure structure;
    Chart chart;
    std::vector<AdaptedFrame> frames;
    std::vector<FactorizationCurve> curves;

    // Curve point of `group` at adapted parameter x, scaled to pair to 1 with the chart.
    [[nodiscard]] Vec point(int group, const Rat& x) const;
    // The point [1:x] of W_group in standard coordinates.
    [[nodiscard]] ProjPoint parameter_point(int group, const Rat& x) const;
};

[[nodiscard]] ChartedStructure make_charted(const FactorizationStructure& f, const Chart& chart);
[[nodiscard]] Vec curve_in_chart(const FactorizationStructure& f, int group, const Rat& x, const Chart& chart);

struct Provenance {
    int group = 0;
    Rat parameter;
};

struct ConeOrigin {
    ChartedStructure charted;
    std::vector<std::vector<Rat>> params;
};

// Generators are ordered group by group, parameters increasing within a group.
struct Cone {
    std::size_t ambient_dim = 0;
    std::vector<Vec> generators;
    std::vector<Provenance> provenance;
    std::optional<ConeOrigin> origin;
};

[[nodiscard]] Cone build_cone(const FactorizationStructure& f, const Chart& chart, std::vector<std::vector<Rat>> params);
[[nodiscard]] Cone cone_from_generators(std::vector<Vec> generators);

enum class FacetKind { TypeOne, TypeTwo, Oracle };
[[nodiscard]] const char* facet_kind_name(FacetKind kind);

// Normal is oriented nonnegative on the cone and scaled so its first nonzero entry is ±1.
struct FacetCertificate {
    Vec normal;
    std::vector<std::size_t> incident;
    FacetKind kind = FacetKind::Oracle;
};

// Same hyperplane and incidence; the kind is provenance only.
[[nodiscard]] bool same_facet(const FacetCertificate& a, const FacetCertificate& b);

struct Rejected {
    std::string reason;
    std::vector<int> signs;
};

[[nodiscard]] std::variant<FacetCertificate, Rejected> gale_facet_test(const Cone& cone,
                                                                       std::span<const std::size_t> candidate);
[[nodiscard]] std::vector<FacetCertificate> enumerate_facets_gale(const Cone& cone);
[[nodiscard]] std::vector<FacetCertificate> enumerate_facets_bruteforce(const Cone& cone);

[[nodiscard]] bool is_full_dimensional(const Cone& cone);
// No nonzero nonnegative combination of generators vanishes (exact phase-one simplex).
[[nodiscard]] bool is_pointed(const Cone& cone);
[[nodiscard]] bool is_simplicial(const Cone& cone, std::span<const FacetCertificate> facets);
// Generators spanning an extremal ray, read from the facet incidence.
[[nodiscard]] std::vector<bool> extremal_generators(const Cone& cone, std::span<const FacetCertificate> facets);

struct FaceSubspace {
    Subspace subspace;  // phi^t of the intersection of the Sigma subspaces, inside h*
    std::size_t codim = 0;
    Subspace via_hyperplanes;  // intersection of the phi^t(Sigma) separately
    bool agrees = false;
};

[[nodiscard]] FaceSubspace face_subspace(const FactorizationStructure& f,
                                         std::span<const std::pair<int, ProjPoint>> constraints);
// dim(phi(h) ∩ (Sigma^0_1 + ... + Sigma^0_r)); equals the codimension of the face subspace.
[[nodiscard]] std::size_t face_dual_dimension(const FactorizationStructure& f,
                                              std::span<const std::pair<int, ProjPoint>> constraints);

struct PolytopeSection {
    Vec beta;
    // One vertex per cone facet, in facet order; each pairs to 1 with beta.
    std::vector<Vec> vertices;
    // Extremal generators; each is a polytope facet normal (modulo beta).
    std::vector<std::size_t> facet_generators;
    std::vector<Vec> normals;
    // Per vertex: positions into facet_generators of the facets through it.
    std::vector<std::vector<std::size_t>> incidence;
};

[[nodiscard]] PolytopeSection polytope_section(const Cone& cone, std::span<const FacetCertificate> facets,
                                               const Vec& beta);
// Requires a 3-dimensional cone; the polygon is written with its ambient coordinates.
[[nodiscard]] std::string to_off(const PolytopeSection& section);

}  // namespace fstruct
