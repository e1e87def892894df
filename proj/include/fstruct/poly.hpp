#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fstruct/rational.hpp"

namespace fstruct {

// Univariate polynomial over Q, coefficients lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    [[nodiscard]] static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
    [[nodiscard]] static Poly monomial(const Rat& c, std::size_t degree);
    [[nodiscard]] static Poly x() { return monomial(Rat(1), 1); }

    // -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    [[nodiscard]] Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    [[nodiscard]] Rat operator()(const Rat& x) const;
    // sum_k c_k s^(d-k) t^k, the degree-d homogenization evaluated at [s:t].
    [[nodiscard]] Rat eval_homogeneous(const Rat& s, const Rat& t, int d) const;

    [[nodiscard]] Poly derivative() const;
    [[nodiscard]] Poly monic() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(Poly a) { return a *= Rat(-1); }
    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

[[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Throws when b does not divide a.
[[nodiscard]] Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
[[nodiscard]] Poly gcd(Poly a, Poly b);
[[nodiscard]] Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);
// Distinct rational roots in increasing order.
[[nodiscard]] std::vector<Rat> rational_roots(const Poly& p);

// Divide by the common gcd, clear to primitive integer coefficients, first nonzero component with positive leading coefficient.
[[nodiscard]] std::vector<Poly> poly_gcd_reduce(std::vector<Poly> v);

using PolyMatrix = std::vector<std::vector<Poly>>;

[[nodiscard]] Poly determinant(const PolyMatrix& m);
// Signed maximal minors of the selected rows (cols - 1 of them), gcd-reduced.
[[nodiscard]] std::vector<Poly> kernel_vector_minors(const PolyMatrix& m, std::span<const std::size_t> rows);

}  // namespace fstruct
