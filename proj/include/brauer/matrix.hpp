#pragma once

#include <brauer/integers.hpp>

#include <cassert>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace brauer {

// Dense matrix over T (Int or Rat). Column-vector convention: an m x n
// matrix maps Z^n -> Z^m.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(size_t rows, size_t cols, std::initializer_list<T> vals)
        : rows_(rows), cols_(cols), data_(vals) {
        assert(data_.size() == rows * cols);
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        assert(v.size() == cols_);
        std::vector<T> r(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    Mat operator-() const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> row(size_t i) const {
        std::vector<T> r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    void set_row(size_t i, const std::vector<T>& v) {
        assert(v.size() == cols_);
        for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    void swap_rows(size_t i, size_t j) {
        for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(size_t i, size_t j) {
        for (size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }

    // Stack rows of two matrices with equal column count.
    static Mat vstack(const Mat& a, const Mat& b) {
        assert(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0);
        size_t cols = a.rows() ? a.cols() : b.cols();
        Mat r(a.rows() + b.rows(), cols);
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < cols; ++j) r(i, j) = a(i, j);
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < cols; ++j) r(a.rows() + i, j) = b(i, j);
        return r;
    }

    static Mat hstack(const Mat& a, const Mat& b) {
        assert(a.rows() == b.rows());
        Mat r(a.rows(), a.cols() + b.cols());
        for (size_t i = 0; i < a.rows(); ++i) {
            for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
            for (size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
        for (size_t i = 0; i < m.rows(); ++i) {
            os << (i ? "\n[" : "[");
            for (size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
            os << "]";
        }
        return os;
    }

private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline QMat to_rational(const IMat& a) {
    QMat r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

inline QVec to_rational(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// Rational matrix with integer entries back to IMat; throws if a
// denominator is non-trivial.
IMat to_integral(const QMat& a);
IVec to_integral(const QVec& v);
bool is_integral(const QMat& a);
bool is_integral(const QVec& v);

}  // namespace brauer
