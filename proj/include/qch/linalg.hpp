#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qch {

using Vec = std::vector<double>;

/// Dense row-major matrix, sized for desk-scale problems (n <= 64).
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("Mat: negative dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec col(int j) const {
        Vec v(rows_);
        for (int i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> d_;
};

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec operator*(const Mat& m, const Vec& x) {
    if (m.cols() != static_cast<int>(x.size()))
        throw std::invalid_argument("matvec: size mismatch");
    Vec y(m.rows(), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j)
            s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: size mismatch");
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

inline Mat transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

/// x^T A x for square A.
inline double quad_form(const Mat& a, const Vec& x) { return dot(x, a * x); }

inline void add_scaled_identity(Mat& a, double s) {
    for (int i = 0; i < a.rows(); ++i)
        a(i, i) += s;
}

/// a += s * u v^T (+ s * v u^T when symmetrize).
inline void add_scaled_outer(Mat& a, double s, const Vec& u, const Vec& v, bool symmetrize = false) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            a(i, j) += s * u[i] * v[j];
            if (symmetrize)
                a(i, j) += s * v[i] * u[j];
        }
}

inline double frobenius_norm(const Mat& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

inline double max_abs(const Mat& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j)));
    return m;
}

inline double max_asymmetry(const Mat& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - a(j, i)));
    return m;
}

inline Vec normalized(Vec v) {
    double n = norm(v);
    if (n == 0.0)
        throw std::invalid_argument("normalized: zero vector");
    for (double& x : v)
        x /= n;
    return v;
}

inline Vec scaled(Vec v, double s) {
    for (double& x : v)
        x *= s;
    return v;
}

inline Vec axpy(double a, const Vec& x, const Vec& y) {
    Vec r(y);
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] += a * x[i];
    return r;
}

} // namespace qch
