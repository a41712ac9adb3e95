#include "skein/linalg.hpp"

#include <stdexcept>

namespace skein {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& v = at(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& w = o.at(k, j);
                if (w.is_zero()) continue;
                r.at(i, j) += v * w;
            }
        }
    return r;
}

Mat Mat::operator*(const Scalar& s) const {
    Mat r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::kron(const Mat& o) const {
    Mat r(rows_ * o.rows_, cols_ * o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (size_t p = 0; p < o.rows_; ++p)
                for (size_t q = 0; q < o.cols_; ++q) {
                    if (o.at(p, q).is_zero()) continue;
                    r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
                }
        }
    return r;
}

Scalar Mat::trace() const {
    Scalar t(0);
    for (size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

std::vector<std::vector<Scalar>> nullspace(const Mat& m) {
    Mat r = m;
    std::vector<size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(0));
        v[free] = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const Mat& m, const std::vector<Scalar>& b, std::vector<Scalar>& x) {
    if (b.size() != m.rows()) throw std::logic_error("rhs size mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return false; // inconsistent
    x.assign(m.cols(), Scalar(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return true;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::logic_error("inverse of non-square matrix");
    size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("matrix is singular");
    Mat r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

Scalar det(Mat m) {
    if (m.rows() != m.cols()) throw std::logic_error("determinant of non-square matrix");
    size_t n = m.rows();
    Scalar d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && m.at(p, col).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

// Signature by symmetric congruence reduction over the rationals.
long signature_symmetric(Mat m) {
    if (m.rows() != m.cols()) throw std::logic_error("signature of non-square matrix");
    size_t n = m.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (m.at(i, j) != m.at(j, i)) throw std::logic_error("matrix not symmetric");
    long sig = 0;
    // work on a shrinking copy
    while (m.rows() > 0) {
        size_t k = m.rows();
        // find nonzero diagonal entry
        size_t d = k;
        for (size_t i = 0; i < k; ++i)
            if (!m.at(i, i).is_zero()) { d = i; break; }
        if (d == k) {
            // all diagonal zero: find off-diagonal nonzero pair
            size_t pi = k, pj = k;
            for (size_t i = 0; i < k && pi == k; ++i)
                for (size_t j = i + 1; j < k; ++j)
                    if (!m.at(i, j).is_zero()) { pi = i; pj = j; break; }
            if (pi == k) return sig; // zero matrix: done
            // rows/cols pi,pj carry a hyperbolic pair: contributes 0 to the
            // signature; make the diagonal nonzero by adding row/col pj to pi
            for (size_t j = 0; j < k; ++j) m.at(pi, j) += m.at(pj, j);
            for (size_t i = 0; i < k; ++i) m.at(i, pi) += m.at(i, pj);
            d = pi;
        }
        // move pivot to front
        if (d != 0) {
            for (size_t j = 0; j < k; ++j) std::swap(m.at(d, j), m.at(0, j));
            for (size_t i = 0; i < k; ++i) std::swap(m.at(i, d), m.at(i, 0));
        }
        Rat pivot = m.at(0, 0).as_rational();
        sig += sgn(pivot);
        // clear first row/column by congruence
        Scalar inv = m.at(0, 0).inverse();
        Mat next(k - 1, k - 1);
        for (size_t i = 1; i < k; ++i) {
            Scalar fi = m.at(i, 0) * inv;
            for (size_t j = 1; j < k; ++j)
                next.at(i - 1, j - 1) = m.at(i, j) - fi * m.at(0, j);
        }
        m = next;
    }
    return sig;
}

} // namespace skein
