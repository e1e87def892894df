#include "fstruct/linalg.hpp"

#include <utility>

#include "fstruct/error.hpp"

namespace fstruct {

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "matrix row has wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Mat::row(std::size_t r) const {
    return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Vec> Mat::row_vectors() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vec Mat::apply(const Vec& v) const {
    require(v.size() == cols_, "matrix-vector size mismatch");
    Vec out(rows_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    require(a.cols() == b.rows(), "matrix product size mismatch");
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

RrefResult rref(Mat m) {
    RrefResult out;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row) {
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
        }
        const Rat inv = Rat(1) / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || sgn(m(r, c)) == 0) continue;
            const Rat factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) {
                if (sgn(m(lead_row, k)) != 0) m(r, k) -= factor * m(lead_row, k);
            }
        }
        out.pivots.push_back(c);
        ++lead_row;
    }
    out.rank = lead_row;
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Rat determinant(Mat m) {
    require(m.rows() == m.cols(), "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        const Rat inv = Rat(1) / m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(m(r, c)) == 0) continue;
            const Rat factor = m(r, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
        }
    }
    return det;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    require(b.size() == a.rows(), "solve: right-hand side size mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const RrefResult red = rref(std::move(aug));
    Vec x = zeros(a.cols());
    for (std::size_t i = 0; i < red.rank; ++i) {
        const std::size_t p = red.pivots[i];
        if (p == a.cols()) return std::nullopt;
        x[p] = red.reduced(i, a.cols());
    }
    return x;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    RrefResult red = rref(Mat::from_rows(vectors, ambient_dim));
    Mat basis(red.rank, ambient_dim);
    for (std::size_t r = 0; r < red.rank; ++r)
        for (std::size_t c = 0; c < ambient_dim; ++c) basis(r, c) = red.reduced(r, c);
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(red.pivots);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit(ambient_dim, i));
    return span(ambient_dim, rows);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    require(v.size() == ambient_, "subspace membership: ambient mismatch");
    Vec coords(dim());
    Vec residual = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        coords[i] = v[pivots_[i]];
        if (sgn(coords[i]) == 0) continue;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (sgn(basis_(i, c)) != 0) residual[c] -= coords[i] * basis_(i, c);
        }
    }
    if (!is_zero(residual)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    require(other.ambient_ == ambient_, "subspace containment: ambient mismatch");
    for (std::size_t r = 0; r < other.dim(); ++r) {
        if (!contains(other.basis_.row(r))) return false;
    }
    return true;
}

Subspace kernel(const Mat& m) {
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    std::vector<Vec> vectors;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zeros(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, free);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), vectors);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), "subspace sum: ambient mismatch");
    std::vector<Vec> vectors = a.basis_vectors();
    for (Vec& v : b.basis_vectors()) vectors.push_back(std::move(v));
    return Subspace::span(a.ambient_dim(), vectors);
}

Subspace annihilator(const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(s.ambient_dim());
    return kernel(s.basis());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), "subspace intersection: ambient mismatch");
    return annihilator(sum(annihilator(a), annihilator(b)));
}

std::vector<std::size_t> greedy_independent(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    std::vector<std::size_t> chosen;
    Subspace acc(ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (is_zero(vectors[i]) || acc.contains(vectors[i])) continue;
        std::vector<Vec> rows = acc.basis_vectors();
        rows.push_back(vectors[i]);
        acc = Subspace::span(ambient_dim, rows);
        chosen.push_back(i);
    }
    return chosen;
}

}  // namespace fstruct
