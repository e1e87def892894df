#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fstruct/poly.hpp"
#include "fstruct/structure.hpp"

namespace fstruct {

// Coordinates of psi_slot([1:x]) in the structure basis; `degree` homogenizes them.
// Components are gcd-free with integer coefficients; the first nonzero one has a positive lead.
struct FactorizationCurve {
    int slot = 0;
    int degree = 0;
    std::vector<Poly> coords;
};

using PolyTensor = std::vector<Poly>;

[[nodiscard]] FactorizationCurve curve_polynomials(const FactorizationStructure& f, int slot, std::uint64_t seed = 0);
[[nodiscard]] Vec curve_point(const FactorizationCurve& c, const ProjPoint& ell);
// phi applied to the curve: one polynomial per tensor coefficient.
[[nodiscard]] PolyTensor curve_tensor(const FactorizationStructure& f, const FactorizationCurve& c);

[[nodiscard]] std::optional<ProjPoint> curve_membership(const FactorizationStructure& f, const FactorizationCurve& c,
                                                        const Vec& p);
[[nodiscard]] bool curves_equivalent(const FactorizationStructure& f, const FactorizationCurve& a,
                                     const FactorizationCurve& b);

// phi(psi(ell)) = (⊗_{r in slots} transforms_r ell^0) ⊗ gamma, gamma on the remaining slots in order.
struct DecompositionCertificate {
    std::vector<int> slots;
    std::vector<Mat> transforms;
    Tensor gamma;
};

struct Indecomposable {
    int failing_slot = -1;
    std::string reason;
};

[[nodiscard]] std::variant<DecompositionCertificate, Indecomposable> decompose_curve(const FactorizationStructure& f,
                                                                                     const FactorizationCurve& c);
[[nodiscard]] bool verify_certificate(const FactorizationStructure& f, const FactorizationCurve& c,
                                      const DecompositionCertificate& cert);

struct CurveIntersection {
    ProjPoint first;
    ProjPoint second;
    Vec point;
};

struct IntersectionReport {
    std::vector<CurveIntersection> points;
    // Candidate parameters that are not rational remain; they are not enumerated.
    bool nonrational_locus = false;
};

// Pre: the curves are not equivalent.
[[nodiscard]] IntersectionReport curve_intersections(const FactorizationStructure& f, const FactorizationCurve& a,
                                                     const FactorizationCurve& b);

}  // namespace fstruct
