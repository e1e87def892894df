#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fstruct/rational.hpp"

namespace fstruct {

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

    // Every row must have length `cols`.
    [[nodiscard]] static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
    [[nodiscard]] static Mat identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    [[nodiscard]] const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] Vec row(std::size_t r) const;
    [[nodiscard]] Vec col(std::size_t c) const;
    [[nodiscard]] std::vector<Vec> row_vectors() const;
    [[nodiscard]] Mat transposed() const;
    [[nodiscard]] Vec apply(const Vec& v) const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

struct RrefResult {
    Mat reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form; pivots are 1, so the first nonzero entry of each row is positive.
[[nodiscard]] RrefResult rref(Mat m);
[[nodiscard]] std::size_t rank(const Mat& m);
[[nodiscard]] Rat determinant(Mat m);
// Some solution of a x = b (free variables set to 0), or nothing when inconsistent.
[[nodiscard]] std::optional<Vec> solve(const Mat& a, const Vec& b);

// Linear subspace of Q^n stored in canonical RREF; equality is structural.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);

    [[nodiscard]] static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    [[nodiscard]] static Subspace full(std::size_t ambient_dim);

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
    [[nodiscard]] const Mat& basis() const noexcept { return basis_; }
    [[nodiscard]] std::vector<Vec> basis_vectors() const { return basis_.row_vectors(); }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    [[nodiscard]] bool contains(const Vec& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;
    // Coordinates with respect to the RREF basis rows.
    [[nodiscard]] std::optional<Vec> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

[[nodiscard]] Subspace kernel(const Mat& m);
[[nodiscard]] Subspace sum(const Subspace& a, const Subspace& b);
[[nodiscard]] Subspace intersect(const Subspace& a, const Subspace& b);
// Annihilator under the coordinate pairing.
[[nodiscard]] Subspace annihilator(const Subspace& s);

// Indices of a maximal independent subset, scanning in order.
[[nodiscard]] std::vector<std::size_t> greedy_independent(const std::vector<Vec>& vectors, std::size_t ambient_dim);

}  // namespace fstruct
