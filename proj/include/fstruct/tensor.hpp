#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fstruct/linalg.hpp"
#include "fstruct/rational.hpp"

namespace fstruct {

// Element of (Q^2)^{⊗m}. Index is the bitstring (b_0 ... b_{m-1}) with slot 0 most significant.
// Zero slots is allowed and means a scalar.
class Tensor {
public:
    Tensor() : Tensor(0) {}
    explicit Tensor(int slots);
    Tensor(int slots, Vec coeffs);

    [[nodiscard]] int slots() const noexcept { return slots_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    [[nodiscard]] const Vec& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Rat& operator[](std::size_t index) { return coeffs_[index]; }
    [[nodiscard]] const Rat& operator[](std::size_t index) const { return coeffs_[index]; }
    [[nodiscard]] bool is_zero() const { return fstruct::is_zero(coeffs_); }

    [[nodiscard]] static std::size_t bit(int slots, int slot) { return std::size_t{1} << (slots - 1 - slot); }

    Tensor& operator+=(const Tensor& o);
    Tensor& operator*=(const Rat& c);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator*(Tensor a, const Rat& c) { return a *= c; }
    friend bool operator==(const Tensor& a, const Tensor& b) = default;

private:
    int slots_;
    Vec coeffs_;
};

// Point [s:t] of P(Q^2), normalized so that its first nonzero coordinate is 1.
struct ProjPoint {
    Rat s;
    Rat t;

    [[nodiscard]] static ProjPoint make(const Rat& s, const Rat& t);
    [[nodiscard]] static ProjPoint affine(const Rat& x) { return make(Rat(1), x); }
    [[nodiscard]] static ProjPoint infinity() { return make(Rat(0), Rat(1)); }
    [[nodiscard]] Pair vector() const { return {s, t}; }
    // Spans the annihilator line: [1:x] gives (x, -1).
    [[nodiscard]] Pair annihilator() const { return {t, -s}; }
    [[nodiscard]] static ProjPoint from_annihilator(const Pair& u) { return make(-u[1], u[0]); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) = default;
};

[[nodiscard]] Rat pair_dot(const Pair& a, const Pair& b);
[[nodiscard]] Tensor kron(std::span<const Pair> factors);
[[nodiscard]] Tensor outer(const Tensor& a, const Tensor& b);
[[nodiscard]] Rat pairing(const Tensor& a, const Tensor& b);

// Contraction of one slot against v: (v0 t|_{b=0} + v1 t|_{b=1}).
[[nodiscard]] Tensor contract_slot(const Tensor& t, int slot, const Pair& v);
// 2 x 2^{m-1} matrix; row b is the subtensor with the given slot fixed to b.
[[nodiscard]] Mat slot_flattening(const Tensor& t, int slot);

// Sigma^0: tensors in V* with the annihilator of ell in the given slot.
[[nodiscard]] Subspace sigma_annihilator(int m, int slot, const ProjPoint& ell);
// Sigma: tensors in V with ell in the given slot.
[[nodiscard]] Subspace sigma_subspace(int m, int slot, const ProjPoint& ell);
[[nodiscard]] Subspace symmetric_subspace(int m);

// Sum of all d-fold tensor products with `weight` factors equal to b and the rest equal to a.
[[nodiscard]] Tensor symmetric_basis_tensor(int d, int weight, const Pair& a, const Pair& b);

// Places `inner` at the (increasing) slot positions and `rest` at the remaining slots.
[[nodiscard]] Tensor insert_slots(const Tensor& inner, std::span<const int> positions, const Tensor& rest);

[[nodiscard]] std::vector<Vec> coeff_vectors(const std::vector<Tensor>& tensors);

}  // namespace fstruct
