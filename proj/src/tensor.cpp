#include "fstruct/tensor.hpp"

#include <algorithm>
#include <bit>

#include "fstruct/error.hpp"

namespace fstruct {

Tensor::Tensor(int slots) : slots_(slots) {
    require(slots >= 0 && slots <= 20, "tensor slot count out of range");
    coeffs_.assign(std::size_t{1} << slots, Rat(0));
}

Tensor::Tensor(int slots, Vec coeffs) : slots_(slots), coeffs_(std::move(coeffs)) {
    require(slots >= 0 && slots <= 20, "tensor slot count out of range");
    if (coeffs_.size() != (std::size_t{1} << slots)) {
        fail(ErrorKind::InvalidArgument, "tensor over " + std::to_string(slots) + " slots needs " +
                                             std::to_string(std::size_t{1} << slots) + " coefficients");
    }
}

Tensor& Tensor::operator+=(const Tensor& o) {
    require(o.slots_ == slots_, "tensor sum: slot mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Tensor& Tensor::operator*=(const Rat& c) {
    for (Rat& x : coeffs_) x *= c;
    return *this;
}

ProjPoint ProjPoint::make(const Rat& s, const Rat& t) {
    if (sgn(s) != 0) return {Rat(1), t / s};
    if (sgn(t) != 0) return {Rat(0), Rat(1)};
    fail(ErrorKind::InvalidArgument, "[0:0] is not a projective point");
}

Rat pair_dot(const Pair& a, const Pair& b) { return a[0] * b[0] + a[1] * b[1]; }

Tensor kron(std::span<const Pair> factors) {
    const int m = static_cast<int>(factors.size());
    Tensor out(m);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        Rat v = 1;
        for (int s = 0; s < m && sgn(v) != 0; ++s) v *= factors[static_cast<std::size_t>(s)][(idx & Tensor::bit(m, s)) ? 1 : 0];
        out[idx] = v;
    }
    return out;
}

Tensor outer(const Tensor& a, const Tensor& b) {
    Tensor out(a.slots() + b.slots());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[(i << b.slots()) | j] = a[i] * b[j];
    }
    return out;
}

Rat pairing(const Tensor& a, const Tensor& b) {
    require(a.slots() == b.slots(), "pairing: slot mismatch");
    return dot(a.coeffs(), b.coeffs());
}

namespace {

// Inserts bit value `b` at `slot` of an (m-1)-slot index, producing an m-slot index.
std::size_t expand_index(std::size_t rest, int m, int slot, std::size_t b) {
    const int low_bits = m - 1 - slot;
    const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;
    const std::size_t low = rest & low_mask;
    const std::size_t high = rest >> low_bits;
    return (high << (low_bits + 1)) | (b << low_bits) | low;
}

}  // namespace

Tensor contract_slot(const Tensor& t, int slot, const Pair& v) {
    const int m = t.slots();
    require(slot >= 0 && slot < m, "contract_slot: slot out of range");
    Tensor out(m - 1);
    for (std::size_t rest = 0; rest < out.size(); ++rest) {
        out[rest] = v[0] * t[expand_index(rest, m, slot, 0)] + v[1] * t[expand_index(rest, m, slot, 1)];
    }
    return out;
}

Mat slot_flattening(const Tensor& t, int slot) {
    const int m = t.slots();
    require(slot >= 0 && slot < m, "slot_flattening: slot out of range");
    const std::size_t half = t.size() / 2;
    Mat out(2, half);
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t rest = 0; rest < half; ++rest) out(b, rest) = t[expand_index(rest, m, slot, b)];
    return out;
}

namespace {

Subspace slot_fixed_subspace(int m, int slot, const Pair& factor) {
    require(slot >= 0 && slot < m, "slot out of range");
    std::vector<Vec> vectors;
    const std::size_t half = std::size_t{1} << (m - 1);
    for (std::size_t rest = 0; rest < half; ++rest) {
        Vec v = zeros(std::size_t{1} << m);
        v[expand_index(rest, m, slot, 0)] = factor[0];
        v[expand_index(rest, m, slot, 1)] = factor[1];
        vectors.push_back(std::move(v));
    }
    return Subspace::span(std::size_t{1} << m, vectors);
}

}  // namespace

Subspace sigma_annihilator(int m, int slot, const ProjPoint& ell) { return slot_fixed_subspace(m, slot, ell.annihilator()); }

Subspace sigma_subspace(int m, int slot, const ProjPoint& ell) { return slot_fixed_subspace(m, slot, ell.vector()); }

Tensor symmetric_basis_tensor(int d, int weight, const Pair& a, const Pair& b) {
    require(weight >= 0 && weight <= d, "symmetric basis weight out of range");
    Tensor out(d);
    std::vector<Pair> factors(static_cast<std::size_t>(d));
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        if (std::popcount(mask) != weight) continue;
        for (int s = 0; s < d; ++s) factors[static_cast<std::size_t>(s)] = (mask & (1u << s)) ? b : a;
        out += kron(factors);
    }
    return out;
}

Subspace symmetric_subspace(int m) {
    std::vector<Vec> vectors;
    for (int w = 0; w <= m; ++w) vectors.push_back(symmetric_basis_tensor(m, w, {1, 0}, {0, 1}).coeffs());
    return Subspace::span(std::size_t{1} << m, vectors);
}

Tensor insert_slots(const Tensor& inner, std::span<const int> positions, const Tensor& rest) {
    const int m = inner.slots() + rest.slots();
    require(static_cast<int>(positions.size()) == inner.slots(), "insert_slots: position count mismatch");
    std::vector<bool> is_inner(static_cast<std::size_t>(m), false);
    for (int p : positions) {
        require(p >= 0 && p < m && !is_inner[static_cast<std::size_t>(p)], "insert_slots: bad positions");
        is_inner[static_cast<std::size_t>(p)] = true;
    }
    Tensor out(m);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        std::size_t i_idx = 0, r_idx = 0;
        for (int s = 0; s < m; ++s) {
            const std::size_t b = (idx & Tensor::bit(m, s)) ? 1 : 0;
            if (is_inner[static_cast<std::size_t>(s)]) i_idx = (i_idx << 1) | b;
            else r_idx = (r_idx << 1) | b;
        }
        out[idx] = inner[i_idx] * rest[r_idx];
    }
    return out;
}

std::vector<Vec> coeff_vectors(const std::vector<Tensor>& tensors) {
    std::vector<Vec> out;
    out.reserve(tensors.size());
    for (const Tensor& t : tensors) out.push_back(t.coeffs());
    return out;
}

}  // namespace fstruct
