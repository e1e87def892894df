#include "fstruct/curves.hpp"

#include <algorithm>

#include "fstruct/error.hpp"
#include "fstruct/sampling.hpp"

namespace fstruct {

namespace {

constexpr int kRowSelectionAttempts = 8;

std::size_t expand(std::size_t rest, int m, int slot, std::size_t b) {
    const int low_bits = m - 1 - slot;
    const std::size_t low = rest & ((std::size_t{1} << low_bits) - 1);
    return ((rest >> low_bits) << (low_bits + 1)) | (b << low_bits) | low;
}

Poly poly_pow(const Poly& p, int e) {
    Poly out = Poly::constant(1);
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

struct PolyFactor {
    bool rank_one = false;
    // Primitive generator of the column space when rank_one.
    std::array<Poly, 2> factor;
};

PolyFactor poly_slot_factor(const PolyTensor& t, int m, int slot) {
    const std::size_t half = t.size() / 2;
    std::optional<std::array<Poly, 2>> u;
    for (std::size_t rest = 0; rest < half; ++rest) {
        const Poly& c0 = t[expand(rest, m, slot, 0)];
        const Poly& c1 = t[expand(rest, m, slot, 1)];
        if (c0.is_zero() && c1.is_zero()) continue;
        if (!u) {
            u = std::array<Poly, 2>{c0, c1};
        } else if (!((*u)[0] * c1 - (*u)[1] * c0).is_zero()) {
            return {};
        }
    }
    if (!u) return {};
    std::vector<Poly> reduced = poly_gcd_reduce({(*u)[0], (*u)[1]});
    return {true, {reduced[0], reduced[1]}};
}

Rat homogeneous_value(const Poly& p, int degree, const ProjPoint& ell) { return p.eval_homogeneous(ell.s, ell.t, degree); }

}  // namespace

FactorizationCurve curve_polynomials(const FactorizationStructure& f, int slot, std::uint64_t seed) {
    const int m = f.m();
    require(slot >= 0 && slot < m, "curve slot out of range");
    const std::size_t half = std::size_t{1} << (m - 1);
    const std::size_t cols = f.dim();
    // Row k: (1, x) contracted against slot `slot` of each basis tensor, at rest index k.
    PolyMatrix a(half, std::vector<Poly>(cols));
    for (std::size_t c = 0; c < cols; ++c) {
        const Mat flat = slot_flattening(f.basis()[c], slot);
        for (std::size_t k = 0; k < half; ++k) a[k][c] = Poly{flat(0, k), flat(1, k)};
    }

    Sampler sampler(seed, 0xC0FFEEULL + static_cast<std::uint64_t>(slot));
    for (int attempt = 0; attempt < kRowSelectionAttempts; ++attempt) {
        const Rat x0 = sampler.rational(64, 16);
        std::vector<Vec> numeric(half, Vec(cols));
        for (std::size_t k = 0; k < half; ++k)
            for (std::size_t c = 0; c < cols; ++c) numeric[k][c] = a[k][c](x0);
        std::vector<std::size_t> rows = greedy_independent(numeric, cols);
        if (rows.size() == cols) {
            fail(ErrorKind::InvalidArgument, "slot " + std::to_string(slot) +
                                                 ": image meets Sigma^0 trivially, not a factorization structure");
        }
        if (rows.size() + 1 < cols) continue;
        std::vector<Poly> v = kernel_vector_minors(a, rows);
        for (std::size_t k = 0; k < half; ++k) {
            Poly acc;
            for (std::size_t c = 0; c < cols; ++c) acc += a[k][c] * v[c];
            if (!acc.is_zero()) {
                fail(ErrorKind::InvalidArgument,
                     "slot " + std::to_string(slot) + ": curve kernel check failed, not a factorization structure");
            }
        }
        FactorizationCurve curve;
        curve.slot = slot;
        for (const Poly& p : v) curve.degree = std::max(curve.degree, p.degree());
        curve.coords = std::move(v);
        if (curve.degree > m) fail(ErrorKind::Internal, "curve degree exceeds the slot count");
        return curve;
    }
    fail(ErrorKind::DegenerateRowSelection,
         "slot " + std::to_string(slot) + ": no independent row selection after " +
             std::to_string(kRowSelectionAttempts) + " samples");
}

Vec curve_point(const FactorizationCurve& c, const ProjPoint& ell) {
    Vec out(c.coords.size());
    for (std::size_t a = 0; a < c.coords.size(); ++a) out[a] = homogeneous_value(c.coords[a], c.degree, ell);
    return out;
}

PolyTensor curve_tensor(const FactorizationStructure& f, const FactorizationCurve& c) {
    PolyTensor t(std::size_t{1} << f.m());
    for (std::size_t a = 0; a < f.dim(); ++a) {
        const Tensor& h = f.basis()[a];
        for (std::size_t idx = 0; idx < t.size(); ++idx) {
            if (sgn(h[idx]) != 0) t[idx] += c.coords[a] * h[idx];
        }
    }
    return t;
}

std::optional<ProjPoint> curve_membership(const FactorizationStructure& f, const FactorizationCurve& c, const Vec& p) {
    require(p.size() == f.dim(), "membership: coordinate vector has wrong length");
    if (is_zero(p)) return std::nullopt;
    const Mat flat = slot_flattening(f.tensor_of(p), c.slot);
    std::optional<Pair> u;
    for (std::size_t col = 0; col < flat.cols(); ++col) {
        const Pair x{flat(0, col), flat(1, col)};
        if (sgn(x[0]) == 0 && sgn(x[1]) == 0) continue;
        if (!u) u = x;
        else if (sgn((*u)[0] * x[1] - (*u)[1] * x[0]) != 0) return std::nullopt;
    }
    const ProjPoint ell = ProjPoint::from_annihilator(*u);
    if (!proportional(curve_point(c, ell), p)) return std::nullopt;
    return ell;
}

bool curves_equivalent(const FactorizationStructure& f, const FactorizationCurve& a, const FactorizationCurve& b) {
    const int samples = a.degree * b.degree + 1;
    for (const auto& [from, to] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
        for (int k = 0; k < samples; ++k) {
            if (!curve_membership(f, *to, curve_point(*from, ProjPoint::affine(Rat(k))))) return false;
        }
    }
    return true;
}

std::variant<DecompositionCertificate, Indecomposable> decompose_curve(const FactorizationStructure& f,
                                                                       const FactorizationCurve& c) {
    const int m = f.m();
    const PolyTensor t = curve_tensor(f, c);
    std::vector<int> moving;
    std::vector<std::array<Poly, 2>> factors;
    for (int r = 0; r < m; ++r) {
        const PolyFactor pf = poly_slot_factor(t, m, r);
        if (!pf.rank_one) continue;
        const int deg = std::max(pf.factor[0].degree(), pf.factor[1].degree());
        if (deg >= 2) return Indecomposable{r, "slot factor has degree " + std::to_string(deg)};
        if (deg == 1) {
            moving.push_back(r);
            factors.push_back(pf.factor);
        }
    }
    if (static_cast<int>(moving.size()) != c.degree) {
        int failing = -1;
        for (int r = 0; r < m && failing < 0; ++r) {
            if (std::find(moving.begin(), moving.end(), r) == moving.end()) failing = r;
        }
        return Indecomposable{failing, std::to_string(moving.size()) + " slots carry a linear factor, curve degree is " +
                                           std::to_string(c.degree)};
    }

    // Peel the moving slots from the highest down so lower slot positions stay valid.
    PolyTensor rest = t;
    int slots = m;
    for (std::size_t i = moving.size(); i-- > 0;) {
        const int r = moving[i];
        const auto& u = factors[i];
        const std::size_t b = u[0].is_zero() ? 1 : 0;
        PolyTensor next(rest.size() / 2);
        for (std::size_t k = 0; k < next.size(); ++k) {
            auto [q, rem] = divmod(rest[expand(k, slots, r, b)], u[b]);
            if (!rem.is_zero()) return Indecomposable{r, "slot factor does not divide the curve tensor"};
            for (std::size_t bb = 0; bb < 2; ++bb) {
                if (!(u[bb] * q == rest[expand(k, slots, r, bb)])) return Indecomposable{r, "slot does not split"};
            }
            next[k] = std::move(q);
        }
        rest = std::move(next);
        --slots;
    }

    Poly g;
    for (const Poly& p : rest) g = gcd(g, p);
    DecompositionCertificate cert;
    cert.gamma = Tensor(slots);
    for (std::size_t k = 0; k < rest.size(); ++k) {
        const Poly q = exact_div(rest[k], g);
        if (q.degree() > 0) {
            const int failing = slots > 0 ? [&] {
                for (int r = 0; r < m; ++r) {
                    if (std::find(moving.begin(), moving.end(), r) == moving.end()) return r;
                }
                return -1;
            }() : -1;
            return Indecomposable{failing, "remaining factor varies along the curve"};
        }
        cert.gamma[k] = q.coeff(0);
    }
    if (g.degree() > 0) return Indecomposable{-1, "curve tensor has a common polynomial factor"};
    for (std::size_t i = 0; i < moving.size(); ++i) {
        const auto& u = factors[i];
        Mat tr(2, 2);
        tr(0, 0) = u[0].coeff(1);
        tr(0, 1) = -u[0].coeff(0);
        tr(1, 0) = u[1].coeff(1);
        tr(1, 1) = -u[1].coeff(0);
        if (sgn(determinant(tr)) == 0) return Indecomposable{moving[i], "slot transform is singular"};
        cert.transforms.push_back(std::move(tr));
    }
    cert.slots = std::move(moving);
    if (!verify_certificate(f, c, cert)) fail(ErrorKind::Internal, "decomposition certificate failed verification");
    return cert;
}

bool verify_certificate(const FactorizationStructure& f, const FactorizationCurve& c, const DecompositionCertificate& cert) {
    if (cert.slots.size() != cert.transforms.size()) return false;
    if (cert.gamma.slots() + static_cast<int>(cert.slots.size()) != f.m()) return false;
    std::vector<ProjPoint> samples{ProjPoint::infinity()};
    for (int k = 0; k <= c.degree + 1; ++k) samples.push_back(ProjPoint::affine(Rat(k)));
    for (const ProjPoint& ell : samples) {
        std::vector<Pair> parts;
        const Pair ann = ell.annihilator();
        for (const Mat& g : cert.transforms) parts.push_back({g(0, 0) * ann[0] + g(0, 1) * ann[1], g(1, 0) * ann[0] + g(1, 1) * ann[1]});
        const Tensor predicted = insert_slots(kron(parts), cert.slots, cert.gamma);
        const Tensor actual = f.tensor_of(curve_point(c, ell));
        if (!proportional(predicted.coeffs(), actual.coeffs())) return false;
    }
    return true;
}

namespace {

struct Candidates {
    std::vector<ProjPoint> points;
    bool nonrational = false;
};

Candidates roots_of_gcd(const std::vector<Poly>& minors) {
    Poly g;
    for (const Poly& p : minors) g = gcd(g, p);
    Candidates out;
    out.points.push_back(ProjPoint::infinity());
    if (g.is_zero()) fail(ErrorKind::InvalidArgument, "curves meet in infinitely many points (equivalent curves)");
    Poly rest = g;
    for (const Rat& r : rational_roots(g)) {
        out.points.push_back(ProjPoint::affine(r));
        const Poly linear{-r, Rat(1)};
        while (divmod(rest, linear).second.is_zero()) rest = exact_div(rest, linear);
    }
    out.nonrational = rest.degree() > 0;
    return out;
}

}  // namespace

IntersectionReport curve_intersections(const FactorizationStructure& f, const FactorizationCurve& a,
                                       const FactorizationCurve& b) {
    const int m = f.m();
    const PolyTensor t = curve_tensor(f, a);
    Candidates cand;
    const PolyFactor pf = poly_slot_factor(t, m, b.slot);
    if (!pf.rank_one) {
        // Points of curve b have rank-one flattening at its slot.
        const std::size_t half = t.size() / 2;
        std::vector<Poly> minors;
        for (std::size_t p = 0; p < half; ++p) {
            for (std::size_t q = p + 1; q < half; ++q) {
                minors.push_back(t[expand(p, m, b.slot, 0)] * t[expand(q, m, b.slot, 1)] -
                                 t[expand(p, m, b.slot, 1)] * t[expand(q, m, b.slot, 0)]);
            }
        }
        cand = roots_of_gcd(minors);
    } else {
        // The only candidate on curve b over a([1:x]) is ell_2(x), read off the slot factor.
        const Poly s = -pf.factor[1];
        const Poly tt = pf.factor[0];
        std::vector<Poly> bb;
        for (const Poly& p : b.coords) {
            Poly acc;
            for (int k = 0; k <= b.degree; ++k) {
                const Rat ck = p.coeff(static_cast<std::size_t>(k));
                if (sgn(ck) != 0) acc += poly_pow(s, b.degree - k) * poly_pow(tt, k) * ck;
            }
            bb.push_back(std::move(acc));
        }
        std::vector<Poly> minors;
        for (std::size_t p = 0; p < bb.size(); ++p)
            for (std::size_t q = p + 1; q < bb.size(); ++q) minors.push_back(a.coords[p] * bb[q] - a.coords[q] * bb[p]);
        // Minors use the affine chart of curve a; the point at infinity is tested directly.
        cand = roots_of_gcd(minors);
    }

    IntersectionReport report;
    report.nonrational_locus = cand.nonrational;
    for (const ProjPoint& ell : cand.points) {
        const Vec p = curve_point(a, ell);
        if (auto ell2 = curve_membership(f, b, p)) {
            const bool seen = std::any_of(report.points.begin(), report.points.end(),
                                          [&](const CurveIntersection& x) { return x.first == ell; });
            if (!seen) report.points.push_back({ell, *ell2, projective_normalized(p)});
        }
    }
    return report;
}

}  // namespace fstruct
