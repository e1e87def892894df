#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fstruct/lattice.hpp"
#include "fstruct/polyhedra.hpp"

namespace fstruct {

// Seeded sweeps over "generic" samples, shared by the CLI and the acceptance harness.

struct GeneralizedViSweep {
    int trials = 0;
    int evaluations = 0;
    int nonzero_values = 0;
    int nonzero_beta_pairings = 0;
    // Trials where the denominator or the chart vanished; they are skipped, not counted as passes.
    int skipped = 0;

    [[nodiscard]] bool pass() const { return evaluations > 0 && nonzero_values == 0 && nonzero_beta_pairings == 0; }
};

// Every ordered pair i != j per trial; beta is drawn per trial unless fixed.
[[nodiscard]] GeneralizedViSweep generalized_vi_sweep(const ChartedStructure& cs, int trials, std::uint64_t seed,
                                                      const std::optional<Vec>& beta = std::nullopt);

struct FaceSample {
    std::vector<std::pair<int, ProjPoint>> constraints;
    std::size_t codim = 0;
    bool agrees = false;
    // For exceptional samples: the dual-side dimension confirms the drop.
    bool reverified = false;
};

struct FaceSweep {
    int r = 0;
    int samples = 0;
    int generic = 0;
    std::vector<FaceSample> exceptional;

    [[nodiscard]] double generic_fraction() const { return samples == 0 ? 0.0 : static_cast<double>(generic) / samples; }
    [[nodiscard]] bool all_reverified() const;
    [[nodiscard]] bool pass(double threshold = 0.9) const { return generic_fraction() >= threshold && all_reverified(); }
};

[[nodiscard]] FaceSweep face_codim_sweep(const FactorizationStructure& f, int r, int samples, std::uint64_t seed);

}  // namespace fstruct
