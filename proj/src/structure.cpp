#include "fstruct/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fstruct/error.hpp"
#include "fstruct/sampling.hpp"

namespace fstruct {

namespace {

const Pair kE0{Rat(1), Rat(0)};
const Pair kE1{Rat(0), Rat(1)};

Pair normalized_pair(const Pair& p) {
    Vec v = projective_normalized(Vec{p[0], p[1]});
    return {v[0], v[1]};
}

bool pairs_proportional(const Pair& a, const Pair& b) { return sgn(a[0] * b[1] - a[1] * b[0]) == 0; }

Tensor power_kron(const std::vector<std::pair<Pair, int>>& factors) {
    std::vector<Pair> flat;
    for (const auto& [p, count] : factors) flat.insert(flat.end(), static_cast<std::size_t>(count), p);
    return kron(flat);
}

std::vector<Tensor> sv_spanning(const SegreVeroneseData& d) {
    std::vector<Tensor> out;
    for (int j = 0; j < d.groups(); ++j) {
        const std::vector<int> slots = d.group_slots(j);
        const int dj = d.partition[static_cast<std::size_t>(j)];
        for (int w = 0; w <= dj; ++w) {
            out.push_back(insert_slots(symmetric_basis_tensor(dj, w, kE0, kE1), slots, d.gammas[static_cast<std::size_t>(j)]));
        }
    }
    return out;
}

void validate_partition(const std::vector<int>& partition) {
    require(!partition.empty(), "partition must be nonempty");
    for (int d : partition) require(d >= 1, "partition parts must be positive");
    require(std::accumulate(partition.begin(), partition.end(), 0) <= 12, "at most 12 slots are supported");
}

// Rank-one factor of the flattening at `slot`, if the flattening has rank one.
std::optional<Pair> slot_factor(const Tensor& t, int slot) {
    const Mat f = slot_flattening(t, slot);
    std::optional<Pair> u;
    for (std::size_t c = 0; c < f.cols(); ++c) {
        Pair col{f(0, c), f(1, c)};
        if (sgn(col[0]) == 0 && sgn(col[1]) == 0) continue;
        if (!u) u = col;
        else if (!pairs_proportional(*u, col)) return std::nullopt;
    }
    if (!u) return std::nullopt;
    return normalized_pair(*u);
}

}  // namespace

int SegreVeroneseData::m() const { return std::accumulate(partition.begin(), partition.end(), 0); }

int SegreVeroneseData::first_slot(int group) const {
    return std::accumulate(partition.begin(), partition.begin() + group, 0);
}

std::vector<int> SegreVeroneseData::group_slots(int group) const {
    std::vector<int> slots(static_cast<std::size_t>(partition.at(static_cast<std::size_t>(group))));
    std::iota(slots.begin(), slots.end(), first_slot(group));
    return slots;
}

int SegreVeroneseData::group_of_slot(int slot) const {
    int acc = 0;
    for (int j = 0; j < groups(); ++j) {
        acc += partition[static_cast<std::size_t>(j)];
        if (slot < acc) return j;
    }
    fail(ErrorKind::InvalidArgument, "slot out of range");
}

std::optional<std::vector<Pair>> SegreVeroneseData::product_base_points() const {
    if (groups() == 1) return std::vector<Pair>{kE0};
    if (!decomposable) return std::nullopt;
    std::vector<Pair> base(static_cast<std::size_t>(groups()));
    for (int r = 0; r < groups(); ++r) {
        std::optional<Pair> ar;
        for (int j = 0; j < groups(); ++j) {
            if (j == r) continue;
            const Pair& x = (*decomposable)[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
            if (!ar) ar = x;
            else if (!pairs_proportional(*ar, x)) return std::nullopt;
        }
        base[static_cast<std::size_t>(r)] = normalized_pair(*ar);
    }
    return base;
}

AdaptedFrame AdaptedFrame::for_base_point(const Pair& a) {
    AdaptedFrame f;
    f.a = normalized_pair(a);
    f.b = sgn(f.a[0]) != 0 ? kE1 : kE0;
    return f;
}

Pair AdaptedFrame::vector(const Pair& c) const {
    const Rat det = a[0] * b[1] - a[1] * b[0];
    return {(b[1] * c[0] - a[1] * c[1]) / det, (a[0] * c[1] - b[0] * c[0]) / det};
}

Pair AdaptedFrame::covector(const Pair& c) const {
    return {c[0] * a[0] + c[1] * b[0], c[0] * a[1] + c[1] * b[1]};
}

FactorizationStructure::FactorizationStructure(std::vector<Tensor> basis, std::optional<SegreVeroneseData> meta)
    : m_(basis.empty() ? 0 : basis.front().slots()), basis_(std::move(basis)), meta_(std::move(meta)) {
    require(!basis_.empty() && m_ >= 1, "a structure needs at least one slot and one basis tensor");
    for (const Tensor& t : basis_) require(t.slots() == m_, "basis tensors must share the slot count");
    const std::size_t n = std::size_t{1} << m_;
    image_ = Subspace::span(n, coeff_vectors(basis_));
    if (image_.dim() != basis_.size() || image_.dim() != static_cast<std::size_t>(m_) + 1) {
        fail(ErrorKind::DimensionMismatch,
             "image has dimension " + std::to_string(image_.dim()) + ", expected " + std::to_string(m_ + 1),
             static_cast<long>(image_.dim()));
    }
    if (meta_) require(meta_->m() == m_, "structure data slot count mismatch");

    const std::size_t k = basis_.size();
    Mat aug(k, n + k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t c = 0; c < n; ++c) aug(a, c) = basis_[a][c];
        aug(a, n + a) = 1;
    }
    const RrefResult red = rref(std::move(aug));
    rref_to_basis_ = Mat(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t a = 0; a < k; ++a) rref_to_basis_(i, a) = red.reduced(i, n + a);
}

FactorizationStructure FactorizationStructure::from_spanning(int m, const std::vector<Tensor>& spanning,
                                                             std::optional<SegreVeroneseData> meta) {
    const std::size_t n = std::size_t{1} << m;
    const std::vector<std::size_t> chosen = greedy_independent(coeff_vectors(spanning), n);
    if (chosen.size() != static_cast<std::size_t>(m) + 1) {
        fail(ErrorKind::DimensionMismatch,
             "image has dimension " + std::to_string(chosen.size()) + ", expected " + std::to_string(m + 1),
             static_cast<long>(chosen.size()));
    }
    std::vector<Tensor> basis;
    for (std::size_t i : chosen) basis.push_back(spanning[i]);
    return FactorizationStructure(std::move(basis), std::move(meta));
}

Tensor FactorizationStructure::tensor_of(const Vec& coords) const {
    require(coords.size() == basis_.size(), "coordinate vector has wrong length");
    Tensor out(m_);
    for (std::size_t a = 0; a < basis_.size(); ++a) {
        if (sgn(coords[a]) != 0) out += basis_[a] * coords[a];
    }
    return out;
}

std::optional<Vec> FactorizationStructure::coords_of(const Tensor& t) const {
    require(t.slots() == m_, "tensor slot count mismatch");
    const std::optional<Vec> c = image_.coordinates(t.coeffs());
    if (!c) return std::nullopt;
    Vec out = zeros(basis_.size());
    for (std::size_t i = 0; i < c->size(); ++i) {
        if (sgn((*c)[i]) == 0) continue;
        for (std::size_t a = 0; a < basis_.size(); ++a) out[a] += (*c)[i] * rref_to_basis_(i, a);
    }
    return out;
}

Vec FactorizationStructure::pullback(const Tensor& v) const {
    Vec out(basis_.size());
    for (std::size_t a = 0; a < basis_.size(); ++a) out[a] = pairing(basis_[a], v);
    return out;
}

std::vector<AdaptedFrame> FactorizationStructure::frames() const {
    if (!meta_) return {};
    std::vector<AdaptedFrame> out(static_cast<std::size_t>(meta_->groups()));
    if (auto base = meta_->product_base_points()) {
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = AdaptedFrame::for_base_point((*base)[j]);
    }
    return out;
}

bool FactorizationStructure::is_product_sv() const { return meta_ && meta_->product_base_points().has_value(); }

FactorizationStructure build_product_sv(const std::vector<int>& partition, const std::vector<Pair>& base_points) {
    validate_partition(partition);
    require(base_points.size() == partition.size(), "one base point per group is required");
    const std::size_t k = partition.size();
    std::vector<AdaptedFrame> frames;
    for (const Pair& p : base_points) {
        require(sgn(p[0]) != 0 || sgn(p[1]) != 0, "base points must be nonzero");
        frames.push_back(AdaptedFrame::for_base_point(p));
    }
    SegreVeroneseData data;
    data.partition = partition;
    data.decomposable = std::vector<std::vector<Pair>>(k, std::vector<Pair>(k, Pair{Rat(0), Rat(0)}));
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::pair<Pair, int>> factors;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == j) continue;
            (*data.decomposable)[j][r] = frames[r].a;
            factors.emplace_back(frames[r].a, partition[r]);
        }
        data.gammas.push_back(power_kron(factors));
    }
    std::vector<std::pair<Pair, int>> all;
    for (std::size_t r = 0; r < k; ++r) all.emplace_back(frames[r].a, partition[r]);
    std::vector<Tensor> basis{power_kron(all)};
    for (std::size_t j = 0; j < k; ++j) {
        const std::vector<int> slots = data.group_slots(static_cast<int>(j));
        for (int w = 1; w <= partition[j]; ++w) {
            basis.push_back(insert_slots(symmetric_basis_tensor(partition[j], w, frames[j].a, frames[j].b), slots, data.gammas[j]));
        }
    }
    return FactorizationStructure(std::move(basis), std::move(data));
}

FactorizationStructure build_veronese(int m) {
    require(m >= 1, "Veronese structure needs m >= 1");
    return build_product_sv({m}, {kE0});
}

std::optional<std::vector<Pair>> factor_decomposable(const Tensor& t, const std::vector<int>& group_sizes) {
    if (t.is_zero()) return std::nullopt;
    std::vector<Pair> per_slot;
    for (int s = 0; s < t.slots(); ++s) {
        std::optional<Pair> u = slot_factor(t, s);
        if (!u) return std::nullopt;
        per_slot.push_back(*u);
    }
    std::vector<Pair> out;
    std::size_t s = 0;
    for (int size : group_sizes) {
        for (int i = 1; i < size; ++i) {
            if (!pairs_proportional(per_slot[s], per_slot[s + static_cast<std::size_t>(i)])) return std::nullopt;
        }
        out.push_back(per_slot[s]);
        s += static_cast<std::size_t>(size);
    }
    require(s == per_slot.size(), "group sizes do not cover the tensor");
    const Tensor k = kron(per_slot);
    std::size_t lead = 0;
    while (sgn(k[lead]) == 0) ++lead;
    if (!(k * (t[lead] / k[lead]) == t)) return std::nullopt;
    return out;
}

std::vector<int> sv_symmetry_diagnostics(const std::vector<int>& partition, const std::vector<Tensor>& gammas) {
    std::vector<int> bad;
    for (std::size_t j = 0; j < partition.size() && j < gammas.size(); ++j) {
        const Tensor& g = gammas[j];
        int offset = 0;
        bool symmetric = true;
        for (std::size_t r = 0; r < partition.size() && symmetric; ++r) {
            if (r == j) continue;
            // Symmetric in a block iff invariant under adjacent transpositions inside it.
            for (int s = offset; s + 1 < offset + partition[r] && symmetric; ++s) {
                for (std::size_t idx = 0; idx < g.size(); ++idx) {
                    const std::size_t b1 = Tensor::bit(g.slots(), s), b2 = Tensor::bit(g.slots(), s + 1);
                    const bool x = idx & b1, y = idx & b2;
                    if (x == y) continue;
                    const std::size_t swapped = idx ^ b1 ^ b2;
                    if (g[idx] != g[swapped]) { symmetric = false; break; }
                }
            }
            offset += partition[r];
        }
        if (!symmetric) bad.push_back(static_cast<int>(j));
    }
    return bad;
}

FactorizationStructure build_standard_sv(const std::vector<int>& partition, const std::vector<Tensor>& gammas) {
    validate_partition(partition);
    require(gammas.size() == partition.size(), "one Gamma per group is required");
    SegreVeroneseData data;
    data.partition = partition;
    data.gammas = gammas;
    const int m = data.m();
    const std::size_t k = partition.size();
    std::vector<std::vector<Pair>> a(k, std::vector<Pair>(k, Pair{Rat(0), Rat(0)}));
    bool decomposable = true;
    for (std::size_t j = 0; j < k; ++j) {
        require(gammas[j].slots() == m - partition[j], "Gamma_" + std::to_string(j) + " has the wrong slot count");
        require(!gammas[j].is_zero(), "Gamma_" + std::to_string(j) + " is zero");
        std::vector<int> sizes;
        for (std::size_t r = 0; r < k; ++r) {
            if (r != j) sizes.push_back(partition[r]);
        }
        const auto factors = factor_decomposable(gammas[j], sizes);
        if (!factors) { decomposable = false; continue; }
        std::size_t i = 0;
        for (std::size_t r = 0; r < k; ++r) {
            if (r != j) a[j][r] = (*factors)[i++];
        }
    }
    if (decomposable) data.decomposable = std::move(a);
    const std::vector<Tensor> spanning = sv_spanning(data);
    return FactorizationStructure::from_spanning(m, spanning, std::move(data));
}

FactorizationStructure product(const FactorizationStructure& f, const FactorizationStructure& g, const Tensor& s,
                               const Tensor& t) {
    require(s.slots() == f.m() && t.slots() == g.m(), "product: S and T must live on the factor spaces");
    require(!s.is_zero() && !t.is_zero(), "product: S and T must be nonzero");
    require(f.image().contains(s.coeffs()), "product: S must lie in the first image");
    require(g.image().contains(t.coeffs()), "product: T must lie in the second image");
    std::vector<Tensor> spanning;
    for (const Tensor& h : f.basis()) spanning.push_back(outer(h, t));
    for (const Tensor& h : g.basis()) spanning.push_back(outer(s, h));

    std::optional<SegreVeroneseData> meta;
    if (f.meta() && g.meta()) {
        const SegreVeroneseData& fm = *f.meta();
        const SegreVeroneseData& gm = *g.meta();
        SegreVeroneseData d;
        d.partition = fm.partition;
        d.partition.insert(d.partition.end(), gm.partition.begin(), gm.partition.end());
        for (const Tensor& gamma : fm.gammas) d.gammas.push_back(outer(gamma, t));
        for (const Tensor& gamma : gm.gammas) d.gammas.push_back(outer(s, gamma));
        const auto sf = factor_decomposable(s, fm.partition);
        const auto tf = factor_decomposable(t, gm.partition);
        if (fm.decomposable && gm.decomposable && sf && tf) {
            const std::size_t kf = fm.partition.size(), k = d.partition.size();
            std::vector<std::vector<Pair>> a(k, std::vector<Pair>(k, Pair{Rat(0), Rat(0)}));
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t r = 0; r < k; ++r) {
                    if (r == j) continue;
                    const bool jf = j < kf, rf = r < kf;
                    if (jf && rf) a[j][r] = (*fm.decomposable)[j][r];
                    else if (!jf && !rf) a[j][r] = (*gm.decomposable)[j - kf][r - kf];
                    else if (jf) a[j][r] = (*tf)[r - kf];
                    else a[j][r] = (*sf)[r];
                }
            }
            d.decomposable = std::move(a);
        }
        meta = std::move(d);
    }
    return FactorizationStructure::from_spanning(f.m() + g.m(), spanning, std::move(meta));
}

int intersection_dim(const FactorizationStructure& f, int slot, const ProjPoint& ell) {
    std::vector<Vec> rows;
    for (const Tensor& h : f.basis()) rows.push_back(contract_slot(h, slot, ell.vector()).coeffs());
    const std::size_t cols = std::size_t{1} << (f.m() - 1);
    return static_cast<int>(f.dim() - rank(Mat::from_rows(rows, cols)));
}

bool AxiomReport::pass() const {
    return !slots.empty() && std::all_of(slots.begin(), slots.end(), [](const SlotVerdict& v) { return v.pass; });
}

AxiomReport verify_axiom(const FactorizationStructure& f, int samples_per_slot, std::uint64_t seed) {
    require(samples_per_slot >= 1, "at least one sample per slot is required");
    AxiomReport report;
    report.samples_per_slot = samples_per_slot;
    report.seed = seed;
    const int budget = 4 * samples_per_slot + 16;
    for (int slot = 0; slot < f.m(); ++slot) {
        Sampler sampler(seed, static_cast<std::uint64_t>(slot));
        SlotVerdict v;
        v.slot = slot;
        std::map<int, int> histogram;
        bool saw_zero = false;
        while (v.dim_one < samples_per_slot && v.draws < budget) {
            const ProjPoint ell = ProjPoint::affine(sampler.rational(64, 16));
            const int d = intersection_dim(f, slot, ell);
            ++v.draws;
            ++histogram[d];
            if (d == 1) {
                ++v.dim_one;
            } else {
                saw_zero = saw_zero || d == 0;
                v.exceptional.push_back(ell);
                v.exceptional_dims.push_back(d);
            }
            if (v.draws >= 2 * samples_per_slot + 8 && 2 * v.dim_one <= v.draws) break;
        }
        v.generic_dim = std::max_element(histogram.begin(), histogram.end(),
                                         [](const auto& x, const auto& y) { return x.second < y.second; })->first;
        v.pass = !saw_zero && v.dim_one >= samples_per_slot && 2 * v.dim_one > v.draws;
        report.slots.push_back(std::move(v));
    }
    return report;
}

namespace {

std::optional<SegreVeroneseData> quotient_meta(const SegreVeroneseData& d, int slot, const Pair& v) {
    const int g = d.group_of_slot(slot);
    const std::size_t k = d.partition.size();
    const bool removed = d.partition[static_cast<std::size_t>(g)] == 1;
    SegreVeroneseData out;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < k; ++j) {
        if (removed && static_cast<int>(j) == g) continue;
        kept.push_back(j);
        out.partition.push_back(d.partition[j] - (static_cast<int>(j) == g ? 1 : 0));
        if (static_cast<int>(j) == g) {
            out.gammas.push_back(d.gammas[j]);
            continue;
        }
        // Position of `slot` among the slots outside group j.
        const int pos = slot - (static_cast<int>(j) < g ? d.partition[j] : 0);
        Tensor contracted = contract_slot(d.gammas[j], pos, v);
        if (contracted.is_zero()) return std::nullopt;
        out.gammas.push_back(std::move(contracted));
    }
    if (d.decomposable) {
        std::vector<std::vector<Pair>> a;
        for (std::size_t j : kept) {
            std::vector<Pair> row;
            for (std::size_t r : kept) row.push_back((*d.decomposable)[j][r]);
            a.push_back(std::move(row));
        }
        out.decomposable = std::move(a);
    }
    return out;
}

}  // namespace

QuotientResult quotient(const FactorizationStructure& f, int slot, const ProjPoint& lambda, std::uint64_t seed) {
    require(f.m() >= 2, "quotient needs at least two slots");
    require(slot >= 0 && slot < f.m(), "quotient slot out of range");
    std::vector<Tensor> contracted;
    for (const Tensor& h : f.basis()) contracted.push_back(contract_slot(h, slot, lambda.vector()));
    const std::size_t n = std::size_t{1} << (f.m() - 1);
    const Subspace image = Subspace::span(n, coeff_vectors(contracted));
    if (image.dim() < static_cast<std::size_t>(f.m())) {
        fail(ErrorKind::QuotientDegenerate,
             "quotient image has dimension " + std::to_string(image.dim()) + " < " + std::to_string(f.m()),
             static_cast<long>(image.dim()));
    }

    std::optional<FactorizationStructure> result;
    if (f.meta()) {
        if (auto meta = quotient_meta(*f.meta(), slot, lambda.vector())) {
            try {
                std::optional<FactorizationStructure> rebuilt;
                if (auto base = meta->product_base_points()) rebuilt = build_product_sv(meta->partition, *base);
                else rebuilt = FactorizationStructure::from_spanning(f.m() - 1, sv_spanning(*meta), *meta);
                if (rebuilt->image() == image) result = std::move(rebuilt);
            } catch (const Error&) {
                // Data that no longer describes the image is dropped below.
            }
        }
    }
    if (!result) result = FactorizationStructure::from_spanning(f.m() - 1, contracted);

    AxiomReport axiom = verify_axiom(*result, 8, seed);
    if (!axiom.pass()) fail(ErrorKind::QuotientNotFactorization, "quotient fails the factorization axiom");
    return QuotientResult{std::move(*result), std::move(axiom)};
}

namespace {

struct SplitState {
    const std::vector<int>* partition;
    // Current Gamma per original group index; lives on the slots of the other current groups.
    std::map<int, Tensor> gammas;
};

// Slot positions occupied by `target` inside the domain of Gamma_owner, given the current groups.
std::vector<int> positions_in_domain(const std::vector<int>& groups, int owner, int target,
                                     const std::vector<int>& partition) {
    std::vector<int> out;
    int offset = 0;
    for (int g : groups) {
        if (g == owner) continue;
        const int size = partition[static_cast<std::size_t>(g)];
        if (g == target) {
            for (int i = 0; i < size; ++i) out.push_back(offset + i);
        }
        offset += size;
    }
    return out;
}

std::optional<SplitNode> split_node(const std::vector<int>& groups, const SplitState& state) {
    SplitNode node;
    node.groups = groups;
    if (groups.size() == 1) return node;
    const std::vector<int>& partition = *state.partition;
    for (int j : groups) {
        std::optional<Pair> q;
        bool admissible = true;
        for (int i : groups) {
            if (i == j || !admissible) continue;
            for (int p : positions_in_domain(groups, i, j, partition)) {
                const auto u = slot_factor(state.gammas.at(i), p);
                if (!u || (q && !pairs_proportional(*q, *u))) { admissible = false; break; }
                if (!q) q = u;
            }
        }
        if (!admissible || !q) continue;

        const Rat norm = pair_dot(*q, *q);
        const Pair w{(*q)[0] / norm, (*q)[1] / norm};
        SplitState child_state{state.partition, {}};
        std::vector<int> rest;
        for (int i : groups) {
            if (i == j) continue;
            rest.push_back(i);
            const Tensor& gamma = state.gammas.at(i);
            std::vector<int> pos = positions_in_domain(groups, i, j, partition);
            Tensor reduced = gamma;
            for (auto it = pos.rbegin(); it != pos.rend(); ++it) reduced = contract_slot(reduced, *it, w);
            std::vector<Pair> qs(pos.size(), *q);
            if (!(insert_slots(kron(qs), pos, reduced) == gamma)) { admissible = false; break; }
            child_state.gammas.emplace(i, std::move(reduced));
        }
        if (!admissible) continue;

        // Gamma_j must lie in the structure carried by the remaining groups.
        int rest_m = 0;
        for (int i : rest) rest_m += partition[static_cast<std::size_t>(i)];
        std::vector<Vec> spanning;
        int offset = 0;
        for (int i : rest) {
            const int di = partition[static_cast<std::size_t>(i)];
            std::vector<int> slots(static_cast<std::size_t>(di));
            std::iota(slots.begin(), slots.end(), offset);
            for (int wgt = 0; wgt <= di; ++wgt) {
                spanning.push_back(insert_slots(symmetric_basis_tensor(di, wgt, kE0, kE1), slots, child_state.gammas.at(i)).coeffs());
            }
            offset += di;
        }
        const Subspace q_space = Subspace::span(std::size_t{1} << rest_m, spanning);
        if (!q_space.contains(state.gammas.at(j).coeffs())) continue;

        if (auto child = split_node(rest, child_state)) {
            node.branches.push_back(SplitBranch{j, *q, std::move(*child)});
        }
    }
    if (node.branches.empty()) return std::nullopt;
    return node;
}

}  // namespace

std::variant<SplitNode, NoSplit> full_product_split(const SegreVeroneseData& data) {
    validate_partition(data.partition);
    require(data.gammas.size() == data.partition.size(), "one Gamma per group is required");
    const int m = data.m();
    const std::size_t dim = greedy_independent(coeff_vectors(sv_spanning(data)), std::size_t{1} << m).size();
    std::vector<int> groups(data.partition.size());
    std::iota(groups.begin(), groups.end(), 0);
    if (dim != static_cast<std::size_t>(m) + 1) {
        return NoSplit{"structure has dimension " + std::to_string(dim) + ", expected " + std::to_string(m + 1), groups};
    }
    SplitState state{&data.partition, {}};
    for (int j : groups) state.gammas.emplace(j, data.gammas[static_cast<std::size_t>(j)]);
    if (auto node = split_node(groups, state)) return *node;
    return NoSplit{"no group admits a full product split: every Gamma_i fails to share a common factor in some group",
                   groups};
}

FactorizationStructure veronese_lift(const SegreVeroneseData& segre, const std::vector<int>& degrees) {
    const std::size_t k = segre.partition.size();
    for (int d : segre.partition) require(d == 1, "veronese_lift expects a Segre structure (all parts 1)");
    require(degrees.size() == k, "one degree per slot is required");
    validate_partition(degrees);
    const FactorizationStructure input = FactorizationStructure::from_spanning(static_cast<int>(k), sv_spanning(segre));
    (void)input;
    std::vector<std::vector<Pair>> a;
    if (segre.decomposable) {
        a = *segre.decomposable;
    } else {
        a.assign(k, std::vector<Pair>(k, Pair{Rat(0), Rat(0)}));
        for (std::size_t j = 0; j < k; ++j) {
            const auto f = factor_decomposable(segre.gammas[j], std::vector<int>(k - 1, 1));
            require(f.has_value(), "veronese_lift needs decomposable Segre data");
            std::size_t i = 0;
            for (std::size_t r = 0; r < k; ++r) {
                if (r != j) a[j][r] = (*f)[i++];
            }
        }
    }
    std::vector<Tensor> gammas;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::pair<Pair, int>> factors;
        for (std::size_t r = 0; r < k; ++r) {
            if (r != j) factors.emplace_back(a[j][r], degrees[r]);
        }
        gammas.push_back(power_kron(factors));
    }
    return build_standard_sv(degrees, gammas);
}

}  // namespace fstruct
