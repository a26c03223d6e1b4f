// Fixed-size vectors and matrices for per-node/per-edge state algebra.
// Sizes are tiny (m <= 4), so everything is stack-allocated and inlined.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace fsr {

template <class R, int N>
struct Vec {
    std::array<R, N> a{};

    R& operator[](int i) { return a[i]; }
    const R& operator[](int i) const { return a[i]; }
    static constexpr int size() { return N; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < N; ++i) a[i] += o.a[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < N; ++i) a[i] -= o.a[i];
        return *this;
    }
    Vec& operator*=(R s) {
        for (int i = 0; i < N; ++i) a[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec x, const Vec& y) { return x += y; }
    friend Vec operator-(Vec x, const Vec& y) { return x -= y; }
    friend Vec operator*(R s, Vec x) { return x *= s; }
    friend Vec operator*(Vec x, R s) { return x *= s; }
    friend Vec operator-(const Vec& x) {
        Vec r;
        for (int i = 0; i < N; ++i) r.a[i] = -x.a[i];
        return r;
    }

    friend R dot(const Vec& x, const Vec& y) {
        R s{};
        for (int i = 0; i < N; ++i) s += x.a[i] * y.a[i];
        return s;
    }
};

/// Row-major N x N matrix.
template <class R, int N>
struct Mat {
    std::array<R, N * N> a{};

    R& operator()(int i, int j) { return a[i * N + j]; }
    const R& operator()(int i, int j) const { return a[i * N + j]; }

    Mat& operator+=(const Mat& o) {
        for (int i = 0; i < N * N; ++i) a[i] += o.a[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (int i = 0; i < N * N; ++i) a[i] -= o.a[i];
        return *this;
    }
    Mat& operator*=(R s) {
        for (int i = 0; i < N * N; ++i) a[i] *= s;
        return *this;
    }
    friend Mat operator+(Mat x, const Mat& y) { return x += y; }
    friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
    friend Mat operator*(R s, Mat x) { return x *= s; }

    friend Vec<R, N> operator*(const Mat& m, const Vec<R, N>& v) {
        Vec<R, N> r;
        for (int i = 0; i < N; ++i) {
            R s{};
            for (int j = 0; j < N; ++j) s += m(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                R s{};
                for (int k = 0; k < N; ++k) s += x(i, k) * y(k, j);
                r(i, j) = s;
            }
        return r;
    }
};

} // namespace fsr
