#pragma once

// Independent reference computations for tests. Nothing here calls library linear algebra:
// determinants are Leibniz sums and facet normals are generalized cross products.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "fstruct/rational.hpp"

namespace oracle {

using fstruct::Rat;
using fstruct::Vec;

inline Rat det(const std::vector<Vec>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total = 0;
    do {
        // Parity by counting inversions.
        int inv = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) inv += perm[a] > perm[b] ? 1 : 0;
        Rat term = inv % 2 == 0 ? Rat(1) : Rat(-1);
        for (std::size_t r = 0; r < n && term != 0; ++r) term *= rows[r][perm[r]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Rank by fraction-free elimination on a copy.
inline std::size_t rank(std::vector<Vec> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rat f = rows[i][c] / rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

// Normal to n-1 vectors in Q^n: cofactor expansion along a formal first row.
inline Vec cross(const std::vector<Vec>& vs) {
    const std::size_t n = vs.size() + 1;
    Vec out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Vec> minor;
        for (const Vec& v : vs) {
            Vec row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != k) row.push_back(v[c]);
            minor.push_back(row);
        }
        out[k] = k % 2 == 0 ? det(minor) : Rat(-det(minor));
    }
    return out;
}

inline Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Facet incidence sets of the cone spanned by the generators (assumed full-dimensional and pointed).
inline std::set<std::vector<std::size_t>> facet_incidences(const std::vector<Vec>& gens) {
    const std::size_t n = gens.front().size();
    std::vector<std::vector<std::size_t>> subs;
    std::vector<std::size_t> cur;
    subsets(gens.size(), n - 1, 0, cur, subs);
    std::set<std::vector<std::size_t>> out;
    for (const auto& s : subs) {
        std::vector<Vec> vs;
        for (std::size_t i : s) vs.push_back(gens[i]);
        const Vec normal = cross(vs);
        if (std::all_of(normal.begin(), normal.end(), [](const Rat& x) { return x == 0; })) continue;
        int pos = 0, neg = 0;
        std::vector<std::size_t> zero;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const int sg = sgn(dot(normal, gens[g]));
            if (sg > 0) ++pos;
            else if (sg < 0) ++neg;
            else zero.push_back(g);
        }
        if (pos == 0 || neg == 0) out.insert(zero);
    }
    return out;
}

// Coefficients of prod (x - x_r), highest degree first, by repeated multiplication.
inline std::vector<Rat> expand_roots(const std::vector<Rat>& xs) {
    std::vector<Rat> p{Rat(1)};
    for (const Rat& r : xs) {
        std::vector<Rat> q(p.size() + 1, Rat(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i];
            q[i + 1] -= r * p[i];
        }
        p = q;
    }
    return p;
}

// (x^m, -x^{m-1}, ..., (-1)^m).
inline Vec moment(int m, const Rat& x) {
    Vec out;
    for (int k = 0; k <= m; ++k) {
        Rat v = 1;
        for (int e = 0; e < m - k; ++e) v *= x;
        out.push_back(k % 2 == 0 ? v : Rat(-v));
    }
    return out;
}

}  // namespace oracle
