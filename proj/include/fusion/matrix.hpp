#pragma once
#include <vector>

#include "fusion/numbers.hpp"

namespace fusion {

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    bool operator==(const Mat&) const = default;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) throw structural_error("matrix product: dimension mismatch");
    Mat<T> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& v = x(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw structural_error("matrix sum: dimension mismatch");
    Mat<T> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw structural_error("matrix difference: dimension mismatch");
    Mat<T> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
    Mat<T> r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

template <class T>
bool is_zero(const Mat<T>& x) {
    for (const T& v : x.a)
        if (v != 0) return false;
    return true;
}

template <class T>
T trace(const Mat<T>& x) {
    T t = 0;
    for (int i = 0; i < x.rows && i < x.cols; ++i) t += x(i, i);
    return t;
}

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i];
    return r;
}

// Gauss-Jordan inverse over the rationals; returns false if singular.
inline bool rat_inverse(RatMat m, RatMat& out) {
    if (m.rows != m.cols) throw structural_error("inverse: matrix not square");
    const int n = m.rows;
    out = RatMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m(r, col) != 0) { piv = r; break; }
        if (piv < 0) return false;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(out(piv, j), out(col, j));
            }
        const Rat d = m(col, col);
        for (int j = 0; j < n; ++j) { m(col, j) /= d; out(col, j) /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0) continue;
            const Rat f = m(r, col);
            for (int j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                out(r, j) -= f * out(col, j);
            }
        }
    }
    return true;
}

} // namespace fusion
