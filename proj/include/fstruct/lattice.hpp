#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fstruct/polyhedra.hpp"

namespace fstruct {

// sigma_0, ..., sigma_n of the given values.
[[nodiscard]] std::vector<Rat> elementary_symmetric(const std::vector<Rat>& xs);
// d sigma_i / d x_r, which is sigma_{i-1} of the values without x_r.
[[nodiscard]] Rat sigma_partial(const std::vector<Rat>& xs, std::size_t r, std::size_t i);

// sum_r (x_r^m, -x_r^{m-1}, ..., (-1)^m) / Delta_r for m + 1 distinct values; equals e_0.
[[nodiscard]] Vec vandermonde_identity(const std::vector<Rat>& xs);

struct VandermondeCheck {
    bool sum_identity = false;
    bool matrix_identity = false;
    bool delta_identities = false;

    [[nodiscard]] bool ok() const { return sum_identity && matrix_identity && delta_identities; }
};

[[nodiscard]] VandermondeCheck vandermonde_full_check(const std::vector<Rat>& xs);

struct GeneralizedViValue {
    Rat value;         // pairing of d_i mu_beta with the normalized psi_j
    Rat beta_pairing;  // pairing of d_i mu_beta with beta
};

// One parameter per slot; i != j.
[[nodiscard]] GeneralizedViValue generalized_vi_check(const ChartedStructure& cs, const Vec& beta,
                                                      const std::vector<Rat>& xs, int i, int j);

struct Lattice {
    std::vector<Vec> basis;
};

// Lattice spanned by basis_r / L_r, L_r the lcm of the denominators of the r-th coordinates of the extras.
[[nodiscard]] Lattice common_lattice(const std::vector<Vec>& basis, const std::vector<Vec>& extras);
[[nodiscard]] std::optional<Vec> lattice_coordinates(const Lattice& lattice, const Vec& v);
[[nodiscard]] bool is_integral(const Vec& v);

enum class DelzantStatus { Delzant, RationalDelzant, BetaNotInterior };
[[nodiscard]] const char* delzant_status_name(DelzantStatus s);

struct DelzantVerdict {
    DelzantStatus status = DelzantStatus::BetaNotInterior;
    // Coordinates of beta in the input generators C_r g_r.
    Vec coords;
    // Input scales, or the rescale a_r C_r for RationalDelzant.
    std::vector<Rat> scales;
    Lattice lattice;
    std::vector<std::string> notes;
};

// Simplex cone of m + 1 points on the rational normal curve; beta = sum_r a_r (C_r g_r).
[[nodiscard]] DelzantVerdict simplex_delzant_check(const FactorizationStructure& f, const std::vector<Rat>& xs,
                                                   const std::vector<Rat>& scales, const Vec& beta);

struct RationalDelzantReport {
    DelzantStatus status = DelzantStatus::BetaNotInterior;
    // Lattice in h / <beta>, coordinates after dropping one coordinate.
    Lattice lattice;
    std::vector<std::size_t> facet_generators;
    std::vector<Vec> normal_coords;
    std::vector<Rat> vertex_determinants;
    bool delzant_at_all_vertices = false;
    std::vector<std::string> notes;
};

[[nodiscard]] RationalDelzantReport rational_delzant_check(const Cone& cone, std::span<const FacetCertificate> facets,
                                                           const std::vector<Rat>& scales, const Vec& beta);

}  // namespace fstruct
