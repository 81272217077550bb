#pragma once

// Tiny fixed-capacity vectors and symmetric matrices for dimensions 1 and 2.
// Everything in this project lives in d <= 2, so closed forms beat a linear
// algebra dependency.

#include <array>
#include <cmath>
#include <cstdint>

#include "extlab/errors.hpp"

namespace extlab {

struct Vec {
    int d = 1;
    std::array<double, 2> v{0.0, 0.0};

    Vec() = default;
    explicit Vec(double x) : d(1), v{x, 0.0} {}
    Vec(double x, double y) : d(2), v{x, y} {}

    double& operator[](int i) { return v[static_cast<size_t>(i)]; }
    double operator[](int i) const { return v[static_cast<size_t>(i)]; }

    Vec operator+(const Vec& o) const {
        Vec r = *this;
        for (int i = 0; i < d; ++i) r[i] += o[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        Vec r = *this;
        for (int i = 0; i < d; ++i) r[i] -= o[i];
        return r;
    }
    Vec operator*(double s) const {
        Vec r = *this;
        for (int i = 0; i < d; ++i) r[i] *= s;
        return r;
    }
    Vec operator-() const { return *this * -1.0; }

    static Vec zero(int dim) {
        Vec r;
        r.d = dim;
        r.v = {0.0, 0.0};
        return r;
    }
};

inline Vec operator*(double s, const Vec& a) { return a * s; }

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (int i = 0; i < a.d; ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

// Symmetric d x d matrix, d in {1,2}; stored as (a11, a12, a22).
struct SymMat {
    int d = 1;
    double a11 = 0.0, a12 = 0.0, a22 = 0.0;

    static SymMat identity(int dim) {
        SymMat m;
        m.d = dim;
        m.a11 = 1.0;
        m.a22 = dim == 2 ? 1.0 : 0.0;
        return m;
    }
    static SymMat diag(int dim, double d1, double d2 = 0.0) {
        SymMat m;
        m.d = dim;
        m.a11 = d1;
        m.a22 = dim == 2 ? d2 : 0.0;
        return m;
    }

    double det() const { return d == 1 ? a11 : a11 * a22 - a12 * a12; }

    Vec mul(const Vec& x) const {
        if (d == 1) return Vec(a11 * x[0]);
        return Vec(a11 * x[0] + a12 * x[1], a12 * x[0] + a22 * x[1]);
    }

    SymMat scaled(double s) const {
        SymMat m = *this;
        m.a11 *= s;
        m.a12 *= s;
        m.a22 *= s;
        return m;
    }
};

inline Vec solve_sym(const SymMat& m, const Vec& b) {
    double det = m.det();
    if (std::abs(det) < 1e-300) throw NumericsError("singular symmetric solve");
    if (m.d == 1) return Vec(b[0] / det);
    return Vec((m.a22 * b[0] - m.a12 * b[1]) / det,
               (-m.a12 * b[0] + m.a11 * b[1]) / det);
}

// General d x d matrix (row-major), for the linear part of affine frequency
// maps where symmetry is not guaranteed.
struct Mat {
    int d = 1;
    std::array<double, 4> m{0.0, 0.0, 0.0, 0.0}; // m11 m12 m21 m22

    static Mat identity(int dim) {
        Mat r;
        r.d = dim;
        r.m = {1.0, 0.0, 0.0, dim == 2 ? 1.0 : 0.0};
        return r;
    }

    double& at(int i, int j) { return m[static_cast<size_t>(2 * i + j)]; }
    double at(int i, int j) const { return m[static_cast<size_t>(2 * i + j)]; }

    Vec mul(const Vec& x) const {
        if (d == 1) return Vec(m[0] * x[0]);
        return Vec(m[0] * x[0] + m[1] * x[1], m[2] * x[0] + m[3] * x[1]);
    }
    // transpose * x
    Vec tmul(const Vec& x) const {
        if (d == 1) return Vec(m[0] * x[0]);
        return Vec(m[0] * x[0] + m[2] * x[1], m[1] * x[0] + m[3] * x[1]);
    }
    double op_norm_bound() const {
        // Frobenius norm bounds the operator norm; enough for step-size caps.
        double s = 0.0;
        for (int i = 0; i < d * d; ++i) s += m[static_cast<size_t>(i)] * m[static_cast<size_t>(i)];
        return std::sqrt(s);
    }
};

// Eigenvalues (ascending) of a symmetric d x d matrix.
inline std::array<double, 2> sym_eigenvalues(const SymMat& m) {
    if (m.d == 1) return {m.a11, 0.0};
    double tr = m.a11 + m.a22;
    double disc = std::sqrt(std::max(0.0, 0.25 * (m.a11 - m.a22) * (m.a11 - m.a22) + m.a12 * m.a12));
    return {0.5 * tr - disc, 0.5 * tr + disc};
}

// Orthonormal eigenvectors as columns; eigvec(i) pairs with sym_eigenvalues()[i].
struct SymEig {
    std::array<double, 2> lambda{0.0, 0.0};
    // column-major 2x2; for d==1 only q11 is meaningful
    double q11 = 1.0, q21 = 0.0, q12 = 0.0, q22 = 1.0;
};

inline SymEig sym_eigendecompose(const SymMat& m) {
    SymEig e;
    auto lam = sym_eigenvalues(m);
    e.lambda = lam;
    if (m.d == 1) {
        e.q11 = 1.0;
        return e;
    }
    // eigenvector for lambda[0]
    double ax = m.a11 - lam[0], bx = m.a12;
    double vx, vy;
    if (std::abs(bx) > 1e-14 * (std::abs(ax) + 1.0)) {
        vx = -bx;
        vy = ax;
    } else if (std::abs(ax) > std::abs(m.a22 - lam[0])) {
        vx = 0.0;
        vy = 1.0;
    } else {
        vx = 1.0;
        vy = 0.0;
    }
    double n = std::hypot(vx, vy);
    e.q11 = vx / n;
    e.q21 = vy / n;
    // second eigenvector: rotate by 90 degrees
    e.q12 = -e.q21;
    e.q22 = e.q11;
    return e;
}

} // namespace extlab
