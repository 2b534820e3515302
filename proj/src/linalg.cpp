#include "dp6/linalg.hpp"

#include <stdexcept>

namespace dp6::linalg {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat+: shape");
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat-: shape");
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat*: shape");
    Mat c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Mat operator*(const Rat& c, const Mat& a) {
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
    return r;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::augmented(const Mat& b) const {
    if (rows_ != b.rows_) throw std::invalid_argument("augmented: shape");
    Mat c(rows_, cols_ + b.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) c.at(i, j) = at(i, j);
        for (size_t j = 0; j < b.cols_; ++j) c.at(i, cols_ + j) = b.at(i, j);
    }
    return c;
}

Mat from_rows(const std::vector<std::vector<Rat>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    Mat m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(const Mat& m) {
    Mat c = m;
    return rref(c).size();
}

Mat nullspace(const Mat& a) {
    Mat r = a;
    std::vector<size_t> pivots = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<size_t> free_cols;
    for (size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Mat basis(a.cols(), free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) basis.at(pivots[i], k) = -r.at(i, fc);
    }
    return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape");
    Mat aug = a.augmented(b);
    std::vector<size_t> pivots = rref(aug);
    for (size_t p : pivots)
        if (p >= a.cols()) return std::nullopt;  // inconsistent system
    Mat x(a.cols(), b.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, a.cols() + j);
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    auto x = solve(a, Mat::identity(a.rows()));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return x;
}

Rat det(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
    Mat m = a;
    Rat d(1);
    size_t n = m.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m.at(sel, col) == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = Rat(1) / m.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) * inv;
            for (size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Mat coordinates_in_basis(const Mat& basis, const Mat& v) {
    auto x = solve(basis, v);
    if (!x) throw std::invalid_argument("coordinates_in_basis: vector outside span");
    return *x;
}

std::vector<size_t> column_basis(const Mat& m) {
    Mat c = m;
    return rref(c);
}

}  // namespace dp6::linalg
