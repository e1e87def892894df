#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace fstruct {

// Always canonical: lowest terms, positive denominator.
using Rat = mpq_class;
using Vec = std::vector<Rat>;
using Pair = std::array<Rat, 2>;

[[nodiscard]] Rat parse_rat(std::string_view text);
[[nodiscard]] std::string format_rat(const Rat& value);

[[nodiscard]] inline int sign(const Rat& value) { return sgn(value); }

[[nodiscard]] Rat dot(const Vec& a, const Vec& b);
[[nodiscard]] bool is_zero(const Vec& v);
[[nodiscard]] Vec scaled(const Vec& v, const Rat& factor);
[[nodiscard]] Vec added(const Vec& a, const Vec& b);
[[nodiscard]] Vec subtracted(const Vec& a, const Vec& b);
[[nodiscard]] Vec zeros(std::size_t n);
[[nodiscard]] Vec unit(std::size_t n, std::size_t index);

// First nonzero coordinate becomes 1.
[[nodiscard]] Vec projective_normalized(const Vec& v);
// First nonzero coordinate becomes +1 or -1; the direction is kept.
[[nodiscard]] Vec ray_normalized(const Vec& v);
[[nodiscard]] bool proportional(const Vec& a, const Vec& b);

[[nodiscard]] mpz_class lcm_of_denominators(const Vec& v);

}  // namespace fstruct
