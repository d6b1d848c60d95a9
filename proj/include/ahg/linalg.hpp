#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "ahg/errors.hpp"
#include "ahg/jet.hpp"

namespace ahg {

/// Dense row-major matrix over double, complex, or jet entries.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
    Mat(int r, int c, T fill) : rows(r), cols(c), a(std::size_t(r) * c, fill) {}

    T& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

using MatD = Mat<double>;
using MatC = Mat<std::complex<double>>;
using MatJ = Mat<Jet>;

inline double leading_mag(double x) { return std::abs(x); }
inline double leading_mag(const std::complex<double>& x) { return std::abs(x); }
template <class T>
double leading_mag(const JetT<T>& x) { return std::abs(x.value); }

template <class T>
Mat<T> mat_identity(int n, const T& one, const T& zero) {
    Mat<T> m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

template <class T>
Mat<T> matmul(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) throw DomainError("matmul shape mismatch");
    Mat<T> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            T s = x(i, 0) * y(0, j);
            for (int k = 1; k < x.cols; ++k) s = s + x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
    Mat<T> r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

/// Gauss-Jordan inverse with partial pivoting on leading values.
template <class T>
Mat<T> inverse(Mat<T> m) {
    if (m.rows != m.cols) throw DomainError("inverse of non-square matrix");
    const int n = m.rows;
    Mat<T> inv(n, n, m.a[0] * 0.0);
    for (int i = 0; i < n; ++i) inv(i, i) = inv(i, i) + 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (leading_mag(m(r, col)) > leading_mag(m(piv, col))) piv = r;
        if (leading_mag(m(piv, col)) == 0.0) throw StructureError("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        T d = m(col, col);
        for (int j = 0; j < n; ++j) {
            m(col, j) = m(col, j) / d;
            inv(col, j) = inv(col, j) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            T f = m(r, col);
            if (leading_mag(f) == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                m(r, j) = m(r, j) - f * m(col, j);
                inv(r, j) = inv(r, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Determinant by elimination (direct formulas up to 3x3).
template <class T>
T determinant(Mat<T> m) {
    if (m.rows != m.cols) throw DomainError("determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) throw DomainError("determinant of empty matrix");
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n == 3)
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    T det = m(0, 0) * 0.0 + 1.0;
    double sign = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (leading_mag(m(r, col)) > leading_mag(m(piv, col))) piv = r;
        if (leading_mag(m(piv, col)) == 0.0) return m(0, 0) * 0.0;
        if (piv != col) {
            sign = -sign;
            for (int j = col; j < n; ++j) std::swap(m(piv, j), m(col, j));
        }
        det = det * m(col, col);
        for (int r = col + 1; r < n; ++r) {
            T f = m(r, col) / m(col, col);
            for (int j = col; j < n; ++j) m(r, j) = m(r, j) - f * m(col, j);
        }
    }
    return det * sign;
}

template <class T>
std::vector<T> matvec(const Mat<T>& m, const std::vector<T>& v) {
    if (int(v.size()) != m.cols) throw DomainError("matvec shape mismatch");
    std::vector<T> r(m.rows, m.a[0] * 0.0);
    for (int i = 0; i < m.rows; ++i) {
        T s = m(i, 0) * v[0];
        for (int k = 1; k < m.cols; ++k) s = s + m(i, k) * v[k];
        r[i] = s;
    }
    return r;
}

/// Strip jets to their values.
inline MatD values_of(const MatJ& m) {
    MatD r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i].value;
    return r;
}

inline double max_abs(const MatD& m) {
    double r = 0;
    for (double x : m.a) r = std::max(r, std::abs(x));
    return r;
}

} // namespace ahg
