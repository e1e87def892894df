#include "fstruct/poly.hpp"

#include <algorithm>

#include "fstruct/error.hpp"
#include "fstruct/linalg.hpp"

namespace fstruct {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
    std::vector<Rat> coeffs(degree + 1, Rat(0));
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat Poly::eval_homogeneous(const Rat& s, const Rat& t, int d) const {
    require(degree() <= d, "homogenization degree below polynomial degree");
    Rat acc = 0;
    Rat t_pow = 1;
    for (int k = 0; k <= d; ++k) {
        if (k > 0) t_pow *= t;
        const Rat c = coeff(static_cast<std::size_t>(k));
        if (sgn(c) == 0) continue;
        Rat s_pow = 1;
        for (int e = 0; e < d - k; ++e) s_pow *= s;
        acc += c * s_pow * t_pow;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * (Rat(1) / leading());
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    for (Rat& x : coeffs_) x *= c;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require(!b.is_zero(), "polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
    const Rat lead_inv = Rat(1) / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Rat c = rem[static_cast<std::size_t>(k)] * lead_inv;
        quot[static_cast<std::size_t>(k - db)] = c;
        if (sgn(c) == 0) continue;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coeff(static_cast<std::size_t>(i));
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorKind::Internal, "polynomial division is not exact");
    return q;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    require(xs.size() == ys.size(), "interpolation: size mismatch");
    // Newton divided differences.
    std::vector<Rat> dd = ys;
    const std::size_t n = xs.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    }
    Poly result;
    for (std::size_t i = n; i-- > 0;) {
        result = result * Poly{-xs[i], Rat(1)} + Poly::constant(dd[i]);
    }
    return result;
}

namespace {

int sign_changes(const std::vector<Poly>& chain, const Rat& x) {
    int changes = 0;
    int prev = 0;
    for (const Poly& p : chain) {
        const int s = sgn(p(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

Rat floor_rat(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rat(q);
}

// Rational with the smallest denominator in [lo, hi].
Rat simplest_between(const Rat& lo, const Rat& hi) {
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
    if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
    const Rat fl = floor_rat(lo);
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return fl + 1;
    return fl + Rat(1) / simplest_between(Rat(1) / (hi - fl), Rat(1) / (lo - fl));
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
    require(!p.is_zero(), "rational roots of the zero polynomial");
    if (p.degree() == 0) return {};
    Poly sf = exact_div(p, gcd(p, p.derivative()));
    // Clear to a primitive integer polynomial; rational roots then have denominators dividing the lead.
    sf *= Rat(lcm_of_denominators(sf.coeffs()));
    mpz_class lead = abs(sf.leading().get_num());

    std::vector<Poly> chain{sf, sf.derivative()};
    while (chain.back().degree() > 0) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }

    Rat bound = 0;
    for (const Rat& c : sf.coeffs()) bound = std::max(bound, Rat(abs(c) / abs(sf.leading())));
    bound += 1;
    const Rat width = Rat(1, 1) / Rat(mpz_class(2 * lead * lead));

    std::vector<Rat> roots;
    struct Interval { Rat lo, hi; int count; };
    std::vector<Interval> stack{{-bound, bound, sign_changes(chain, -bound) - sign_changes(chain, bound)}};
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (iv.count <= 0) continue;
        if (iv.count == 1) {
            // Exactly one real root in (lo, hi].
            while (iv.hi - iv.lo >= width) {
                const Rat mid = (iv.lo + iv.hi) / 2;
                if (sign_changes(chain, iv.lo) - sign_changes(chain, mid) == 1) iv.hi = mid;
                else iv.lo = mid;
            }
            const Rat candidate = simplest_between(iv.lo, iv.hi);
            if (sgn(sf(candidate)) == 0) roots.push_back(candidate);
            continue;
        }
        const Rat mid = (iv.lo + iv.hi) / 2;
        const int v_lo = sign_changes(chain, iv.lo);
        const int v_mid = sign_changes(chain, mid);
        const int v_hi = sign_changes(chain, iv.hi);
        stack.push_back({iv.lo, mid, v_lo - v_mid});
        stack.push_back({mid, iv.hi, v_mid - v_hi});
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Poly> poly_gcd_reduce(std::vector<Poly> v) {
    Poly g;
    for (const Poly& p : v) g = gcd(g, p);
    if (g.is_zero()) fail(ErrorKind::InvalidArgument, "gcd reduction of the zero vector");
    for (Poly& p : v) p = exact_div(p, g);

    std::vector<Rat> all;
    for (const Poly& p : v) all.insert(all.end(), p.coeffs().begin(), p.coeffs().end());
    const mpz_class den = lcm_of_denominators(all);
    mpz_class content = 0;
    for (const Rat& c : all) {
        const mpz_class n = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    Rat factor = Rat(den) / Rat(content);
    for (const Poly& p : v) {
        if (!p.is_zero()) {
            if (sgn(p.leading()) < 0) factor = -factor;
            break;
        }
    }
    for (Poly& p : v) p *= factor;
    return v;
}

Poly determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::constant(1);
    int bound = 0;
    for (const auto& row : m) {
        require(row.size() == n, "polynomial determinant of a non-square matrix");
        int row_deg = 0;
        for (const Poly& p : row) row_deg = std::max(row_deg, p.degree());
        bound += row_deg;
    }
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        const Rat x = k;
        Mat numeric(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) numeric(r, c) = m[r][c](x);
        xs.push_back(x);
        ys.push_back(determinant(std::move(numeric)));
    }
    return interpolate(xs, ys);
}

std::vector<Poly> kernel_vector_minors(const PolyMatrix& m, std::span<const std::size_t> rows) {
    require(!m.empty(), "kernel vector of an empty matrix");
    const std::size_t cols = m.front().size();
    require(rows.size() + 1 == cols, "row selection must have cols - 1 rows");
    std::vector<Poly> out;
    for (std::size_t skip = 0; skip < cols; ++skip) {
        PolyMatrix minor;
        for (std::size_t r : rows) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < cols; ++c) {
                if (c != skip) row.push_back(m.at(r).at(c));
            }
            minor.push_back(std::move(row));
        }
        Poly d = determinant(minor);
        out.push_back(skip % 2 == 0 ? d : -d);
    }
    bool all_zero = std::all_of(out.begin(), out.end(), [](const Poly& p) { return p.is_zero(); });
    if (all_zero) fail(ErrorKind::DegenerateRowSelection, "selected rows are dependent");
    return poly_gcd_reduce(std::move(out));
}

}  // namespace fstruct
