#pragma once

#include "foldq/algnum.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace foldq {

/// Small dense matrix. All arithmetic is exact; nothing here is sized for
/// anything beyond the desk-scale matrices this project manipulates.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T fill) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, fill) {}

    static Matrix identity(int n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix r(rows_, o.cols_, zero_like());
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& v = (*this)(i, k);
                for (int j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + v * o(k, j);
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_like());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v;
        v.reserve(rows_);
        for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    std::vector<T> row(int i) const {
        std::vector<T> v(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_);
        return v;
    }

    template <class U, class F>
    Matrix<U> map(F f) const {
        Matrix<U> r(rows_, cols_, f(a_[0]));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: dimension mismatch");
    }
    T zero_like() const {
        if (a_.empty()) throw std::invalid_argument("Matrix: empty");
        return a_[0] - a_[0];
    }

    int rows_, cols_;
    std::vector<T> a_;
};

using IMatrix = Matrix<i64>;
using QMatrix = Matrix<Rational>;
using RMatrix = Matrix<RealCycNumber>;

inline IMatrix imat_identity(int n) { return IMatrix::identity(n, 1, 0); }

inline QMatrix to_rational(const IMatrix& m) {
    QMatrix r(m.rows(), m.cols(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

/// Determinant by fraction-free (Bareiss) elimination over an exact domain.
template <class T, class IsZero>
T det_bareiss(Matrix<T> m, const T& one, IsZero is_zero) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det: not square");
    if (n == 0) return one;
    T denom = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(m(k, k))) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(m(i, k))) {
                    p = i;
                    break;
                }
            if (p < 0) return m(k, k) - m(k, k);
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / denom;
        denom = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

inline Rational det(const QMatrix& m) {
    return det_bareiss(m, Rational(1), [](const Rational& x) { return x == 0; });
}

inline RealCycNumber det(const RMatrix& m) {
    if (m.rows() == 0) throw std::invalid_argument("det: empty");
    const CycContext& ctx = m(0, 0).ctx();
    return det_bareiss(m, RealCycNumber::one(ctx), [](const RealCycNumber& x) { return x.is_zero(); });
}

inline i64 det(const IMatrix& m) {
    Rational d = det(to_rational(m));
    return rat_num(d).convert_to<i64>();
}

/// Gauss-Jordan inverse over a field; throws std::domain_error if singular.
template <class T, class IsZero>
Matrix<T> invert_field(Matrix<T> m, const T& one, IsZero is_zero) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("invert: not square");
    Matrix<T> inv = Matrix<T>::identity(n, one, one - one);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!is_zero(m(i, k))) {
                p = i;
                break;
            }
        if (p < 0) throw std::domain_error("invert: singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(m(k, j), m(p, j));
            std::swap(inv(k, j), inv(p, j));
        }
        T piv = m(k, k);
        for (int j = 0; j < n; ++j) {
            m(k, j) = m(k, j) / piv;
            inv(k, j) = inv(k, j) / piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || is_zero(m(i, k))) continue;
            T f = m(i, k);
            for (int j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - f * m(k, j);
                inv(i, j) = inv(i, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

inline QMatrix invert(const QMatrix& m) {
    return invert_field(m, Rational(1), [](const Rational& x) { return x == 0; });
}

/// 2x2 inverse over Q(theta) by adjugate over determinant (fraction-free),
/// general sizes via exact Gauss-Jordan.
inline RMatrix invert(const RMatrix& m) {
    if (m.rows() == 0) throw std::invalid_argument("invert: empty");
    const CycContext& ctx = m(0, 0).ctx();
    if (m.rows() == 2 && m.cols() == 2) {
        RealCycNumber d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        if (d.is_zero()) throw std::domain_error("invert: singular matrix");
        RMatrix r(2, 2, RealCycNumber::zero(ctx));
        r(0, 0) = m(1, 1) / d;
        r(0, 1) = -m(0, 1) / d;
        r(1, 0) = -m(1, 0) / d;
        r(1, 1) = m(0, 0) / d;
        return r;
    }
    return invert_field(m, RealCycNumber::one(ctx), [](const RealCycNumber& x) { return x.is_zero(); });
}

/// Inverse of an integer matrix that must be unimodular (det = +-1).
inline IMatrix invert_unimodular(const IMatrix& m) {
    QMatrix inv = invert(to_rational(m));
    IMatrix r(m.rows(), m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (rat_den(inv(i, j)) != 1) throw std::domain_error("invert_unimodular: non-integer inverse");
            r(i, j) = rat_num(inv(i, j)).convert_to<i64>();
        }
    return r;
}

/// Solves A x = b exactly over Q; returns empty if inconsistent.
/// Appends one basis of the kernel through `kernel` when requested.
inline std::vector<Rational> solve_rational(QMatrix A, std::vector<Rational> b,
                                            std::vector<std::vector<Rational>>* kernel = nullptr) {
    int rows = A.rows(), cols = A.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (A(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(A(r, j), A(p, j));
        std::swap(b[r], b[p]);
        Rational piv = A(r, c);
        for (int j = 0; j < cols; ++j) A(r, j) /= piv;
        b[r] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A(i, c) == 0) continue;
            Rational f = A(i, c);
            for (int j = 0; j < cols; ++j) A(i, j) -= f * A(r, j);
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return {};
    std::vector<Rational> x(cols, Rational(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    if (kernel) {
        kernel->clear();
        std::vector<bool> is_pivot(cols, false);
        for (int c : pivot_col) is_pivot[c] = true;
        for (int free = 0; free < cols; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> v(cols, Rational(0));
            v[free] = 1;
            for (int i = 0; i < r; ++i) v[pivot_col[i]] = -A(i, free);
            kernel->push_back(std::move(v));
        }
    }
    return x;
}

} // namespace foldq
