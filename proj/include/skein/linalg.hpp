#pragma once

#include "skein/scalar.hpp"

#include <vector>

namespace skein {

// Dense exact matrix. Small-to-medium sizes only; everything is Gaussian
// elimination over the exact scalar field.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}
    static Mat identity(size_t n);
    static Mat zero(size_t rows, size_t cols) { return Mat(rows, cols); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Scalar& s) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat kron(const Mat& o) const;
    Scalar trace() const;
    bool is_zero() const;

    std::vector<Scalar>& data() { return a_; }
    const std::vector<Scalar>& data() const { return a_; }

private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// Row-reduce in place; returns pivot column indices.
std::vector<size_t> rref(Mat& m);
size_t rank(Mat m);
// Basis of the right kernel, one column vector per basis element.
std::vector<std::vector<Scalar>> nullspace(const Mat& m);
// Solve m x = b; returns false when inconsistent.
bool solve(const Mat& m, const std::vector<Scalar>& b, std::vector<Scalar>& x);
Mat inverse(const Mat& m); // throws on singular
Scalar det(Mat m);

// Signature of an exact symmetric matrix: positive minus negative eigenvalue
// count, computed by rational congruence (no floating point).
long signature_symmetric(Mat m);

} // namespace skein
