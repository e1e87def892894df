#include "fstruct/checks.hpp"

#include <algorithm>
#include <numeric>

#include "fstruct/error.hpp"
#include "fstruct/sampling.hpp"

namespace fstruct {

GeneralizedViSweep generalized_vi_sweep(const ChartedStructure& cs, int trials, std::uint64_t seed,
                                        const std::optional<Vec>& beta) {
    const int m = cs.structure.m();
    require(m >= 2, "generalized Vandermonde needs at least two slots");
    GeneralizedViSweep out;
    out.trials = trials;
    Sampler rng(seed, 0x9e11);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Rat> xs;
        for (int s = 0; s < m; ++s) xs.push_back(rng.rational(12, 6));
        Vec b;
        if (beta) {
            b = *beta;
        } else {
            for (std::size_t k = 0; k < cs.structure.dim(); ++k) b.push_back(rng.rational(9, 4));
        }
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                try {
                    const GeneralizedViValue v = generalized_vi_check(cs, b, xs, i, j);
                    ++out.evaluations;
                    if (sgn(v.value) != 0) ++out.nonzero_values;
                    if (sgn(v.beta_pairing) != 0) ++out.nonzero_beta_pairings;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::DenominatorVanishes && e.kind() != ErrorKind::ChartDegenerate) throw;
                    ++out.skipped;
                }
            }
        }
    }
    return out;
}

bool FaceSweep::all_reverified() const {
    return std::all_of(exceptional.begin(), exceptional.end(), [](const FaceSample& s) { return s.reverified; });
}

FaceSweep face_codim_sweep(const FactorizationStructure& f, int r, int samples, std::uint64_t seed) {
    require(r >= 1 && r <= f.m(), "face rank must lie in 1..m");
    FaceSweep out;
    out.r = r;
    out.samples = samples;
    Sampler rng(seed, 0xface);
    for (int k = 0; k < samples; ++k) {
        std::vector<int> slots(static_cast<std::size_t>(f.m()));
        std::iota(slots.begin(), slots.end(), 0);
        // Partial Fisher-Yates picks r distinct slots.
        for (int a = 0; a < r; ++a) {
            const auto pick = static_cast<std::size_t>(a) + rng.below(static_cast<std::uint64_t>(f.m() - a));
            std::swap(slots[static_cast<std::size_t>(a)], slots[pick]);
        }
        slots.resize(static_cast<std::size_t>(r));
        std::sort(slots.begin(), slots.end());
        FaceSample sample;
        for (int s : slots) sample.constraints.emplace_back(s, ProjPoint::affine(rng.rational(16, 8)));
        const FaceSubspace face = face_subspace(f, sample.constraints);
        sample.codim = face.codim;
        sample.agrees = face.agrees;
        if (face.codim == static_cast<std::size_t>(r)) {
            ++out.generic;
            continue;
        }
        sample.reverified = face_dual_dimension(f, sample.constraints) == face.codim && face.codim < static_cast<std::size_t>(r);
        out.exceptional.push_back(std::move(sample));
    }
    return out;
}

}  // namespace fstruct
