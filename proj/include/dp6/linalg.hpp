#pragma once

// Dense exact-rational linear algebra: just enough for module categories over
// small algebras and for the family classifiers (rank, kernels, solving,
// inverses).  Plain Gaussian elimination; all sizes here are tiny.

#include <cstddef>
#include <optional>
#include <vector>

#include "dp6/rational.hpp"

namespace dp6::linalg {

class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static Mat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const = default;
    bool is_zero() const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Rat& c, const Mat& a);

    Mat transposed() const;

    // Columns of `b` appended to the right of *this.
    Mat augmented(const Mat& b) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

Mat from_rows(const std::vector<std::vector<Rat>>& rows);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(Mat& m);

size_t rank(const Mat& m);

// Basis of the right kernel {x : Ax = 0}, as columns of the returned matrix.
Mat nullspace(const Mat& a);

// One solution X of A X = B, if any.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Inverse of a square matrix, if invertible.
std::optional<Mat> inverse(const Mat& a);

Rat det(const Mat& a);

// Coordinates of the columns of `v` in the column basis `basis`
// (basis assumed full column rank; throws if v is outside the span).
Mat coordinates_in_basis(const Mat& basis, const Mat& v);

// Indices of columns of `m` forming a basis of the column space.
std::vector<size_t> column_basis(const Mat& m);

}  // namespace dp6::linalg
