#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fstruct/linalg.hpp"
#include "fstruct/tensor.hpp"

namespace fstruct {

// Slots are grouped consecutively: group 0 owns slots [0, d_0), group 1 the next d_1, and so on.
struct SegreVeroneseData {
    std::vector<int> partition;
    // gammas[j] lives on the slots of every group except j, in increasing slot order.
    std::vector<Tensor> gammas;
    // decomposable[j][r] = a_j^r for r != j (entry j unused); gammas[j] is the product of their powers.
    std::optional<std::vector<std::vector<Pair>>> decomposable;

    [[nodiscard]] int m() const;
    [[nodiscard]] int groups() const { return static_cast<int>(partition.size()); }
    [[nodiscard]] int first_slot(int group) const;
    [[nodiscard]] std::vector<int> group_slots(int group) const;
    [[nodiscard]] int group_of_slot(int slot) const;
    // Base points a^r when every a_j^r agrees with a^r projectively; a single group uses (1, 0).
    [[nodiscard]] std::optional<std::vector<Pair>> product_base_points() const;
};

// Coordinates on W_j adapted to a base point: covector basis (a, b) and the dual vector basis.
struct AdaptedFrame {
    Pair a{Rat(1), Rat(0)};
    Pair b{Rat(0), Rat(1)};

    [[nodiscard]] static AdaptedFrame for_base_point(const Pair& a);
    // Standard coordinates of the vector with adapted coordinates c.
    [[nodiscard]] Pair vector(const Pair& c) const;
    [[nodiscard]] Pair covector(const Pair& c) const;
};

class FactorizationStructure {
public:
    // The basis must be independent with m + 1 elements; otherwise DimensionMismatch.
    FactorizationStructure(std::vector<Tensor> basis, std::optional<SegreVeroneseData> meta = std::nullopt);

    [[nodiscard]] static FactorizationStructure from_spanning(int m, const std::vector<Tensor>& spanning,
                                                              std::optional<SegreVeroneseData> meta = std::nullopt);

    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
    [[nodiscard]] const std::vector<Tensor>& basis() const noexcept { return basis_; }
    [[nodiscard]] const Subspace& image() const noexcept { return image_; }
    [[nodiscard]] const std::optional<SegreVeroneseData>& meta() const noexcept { return meta_; }

    [[nodiscard]] Tensor tensor_of(const Vec& coords) const;
    [[nodiscard]] std::optional<Vec> coords_of(const Tensor& t) const;
    // phi^t: a vector of V to its coordinates in the dual of the stored basis.
    [[nodiscard]] Vec pullback(const Tensor& v) const;

    // One frame per group; identity frames unless the structure is a product Segre-Veronese structure.
    [[nodiscard]] std::vector<AdaptedFrame> frames() const;
    [[nodiscard]] bool is_product_sv() const;

private:
    int m_;
    std::vector<Tensor> basis_;
    Subspace image_;
    Mat rref_to_basis_;
    std::optional<SegreVeroneseData> meta_;
};

[[nodiscard]] FactorizationStructure build_veronese(int m);
[[nodiscard]] FactorizationStructure build_product_sv(const std::vector<int>& partition, const std::vector<Pair>& base_points);
[[nodiscard]] FactorizationStructure build_standard_sv(const std::vector<int>& partition, const std::vector<Tensor>& gammas);
// Groups whose Gamma is not symmetric within each other group.
[[nodiscard]] std::vector<int> sv_symmetry_diagnostics(const std::vector<int>& partition, const std::vector<Tensor>& gammas);
// (a^r) with t proportional to the product of (a^r)^{⊗d_r}, if such a factorization exists.
[[nodiscard]] std::optional<std::vector<Pair>> factor_decomposable(const Tensor& t, const std::vector<int>& group_sizes);

[[nodiscard]] FactorizationStructure product(const FactorizationStructure& f, const FactorizationStructure& g,
                                             const Tensor& s, const Tensor& t);

struct SlotVerdict {
    int slot = 0;
    bool pass = false;
    int generic_dim = 0;
    int draws = 0;
    int dim_one = 0;
    std::vector<ProjPoint> exceptional;
    std::vector<int> exceptional_dims;
};

struct AxiomReport {
    int samples_per_slot = 0;
    std::uint64_t seed = 0;
    std::vector<SlotVerdict> slots;

    [[nodiscard]] bool pass() const;
};

// dim(image ∩ Sigma^0_{slot,ell}) computed from the contracted basis.
[[nodiscard]] int intersection_dim(const FactorizationStructure& f, int slot, const ProjPoint& ell);
[[nodiscard]] AxiomReport verify_axiom(const FactorizationStructure& f, int samples_per_slot, std::uint64_t seed);

struct QuotientResult {
    FactorizationStructure structure;
    AxiomReport axiom;
};

[[nodiscard]] QuotientResult quotient(const FactorizationStructure& f, int slot, const ProjPoint& lambda,
                                      std::uint64_t seed = 0);

struct SplitBranch;

struct SplitNode {
    std::vector<int> groups;
    std::vector<SplitBranch> branches;
};

struct SplitBranch {
    int group = 0;
    Pair q;
    SplitNode child;
};

struct NoSplit {
    std::string reason;
    std::vector<int> stuck_groups;
};

[[nodiscard]] std::variant<SplitNode, NoSplit> full_product_split(const SegreVeroneseData& data);
[[nodiscard]] FactorizationStructure veronese_lift(const SegreVeroneseData& segre, const std::vector<int>& degrees);

}  // namespace fstruct
