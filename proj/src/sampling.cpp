#include "fstruct/sampling.hpp"

#include <algorithm>

#include "fstruct/error.hpp"

namespace fstruct {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) { return splitmix64(seed ^ splitmix64(stream)); }

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) : engine_(mix_seed(seed, stream)) {}

std::uint64_t Sampler::below(std::uint64_t n) {
    require(n > 0, "sampler range must be positive");
    return engine_() % n;
}

Rat Sampler::rational(int height, int den_height) {
    const long num = static_cast<long>(below(2 * static_cast<std::uint64_t>(height) + 1)) - height;
    const long den = static_cast<long>(below(static_cast<std::uint64_t>(den_height))) + 1;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::vector<Rat> Sampler::distinct_sorted(std::size_t n, int height, int den_height) {
    std::vector<Rat> out;
    for (int attempts = 0; out.size() < n; ++attempts) {
        require(attempts < 10000, "could not draw enough distinct rationals");
        Rat r = rational(height, den_height);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Pair Sampler::nonzero_pair(int height) {
    for (;;) {
        Pair p{rational(height, 1), rational(height, 1)};
        if (sgn(p[0]) != 0 || sgn(p[1]) != 0) return p;
    }
}

}  // namespace fstruct
