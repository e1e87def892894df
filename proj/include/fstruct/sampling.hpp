#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fstruct/rational.hpp"

namespace fstruct {

// Deterministic rational sampler. Only raw engine output is used, never std distributions,
// so draws are identical across standard libraries.
class Sampler {
public:
    Sampler(std::uint64_t seed, std::uint64_t stream);

    [[nodiscard]] std::uint64_t below(std::uint64_t n);
    // Numerator in [-height, height], denominator in [1, den_height].
    [[nodiscard]] Rat rational(int height, int den_height);
    [[nodiscard]] std::vector<Rat> distinct_sorted(std::size_t n, int height, int den_height);
    [[nodiscard]] Pair nonzero_pair(int height);

private:
    std::mt19937_64 engine_;
};

[[nodiscard]] std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace fstruct
