#include "qch/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qch/rng.hpp"

namespace qch::numerics {

namespace {

double off_diagonal_norm(const Mat& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

void jacobi_rotate(Mat& a, Mat& v, int p, int q) {
    double apq = a(p, q);
    if (apq == 0.0)
        return;
    double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t = (theta >= 0.0) ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                              : -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;

    int n = a.rows();
    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == p || i == q)
            continue;
        double aip = a(i, p);
        double aiq = a(i, q);
        a(i, p) = c * aip - s * aiq;
        a(p, i) = a(i, p);
        a(i, q) = s * aip + c * aiq;
        a(q, i) = a(i, q);
    }
    for (int i = 0; i < n; ++i) {
        double vip = v(i, p);
        double viq = v(i, q);
        v(i, p) = c * vip - s * viq;
        v(i, q) = s * vip + c * viq;
    }
}

double cbrt_signed(double x) { return x >= 0.0 ? std::cbrt(x) : -std::cbrt(-x); }

// One polishing pass: Newton on the monic cubic, guarded against tiny slopes.
double polish_cubic_root(double r, double e1, double e2, double e3, double scale) {
    for (int it = 0; it < 2; ++it) {
        double f = ((r - e1) * r + e2) * r - e3;
        double df = (3.0 * r - 2.0 * e1) * r + e2;
        if (std::abs(df) < 1e-12 * scale)
            break;
        double step = f / df;
        if (!std::isfinite(step))
            break;
        r -= step;
    }
    return r;
}

} // namespace

EigenDecomposition symmetric_eigen(const Mat& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("symmetric_eigen: matrix not square");
    int n = a.rows();
    if (n > 64)
        throw std::invalid_argument("symmetric_eigen: n > 64 not supported");
    double anorm = frobenius_norm(a);
    if (max_asymmetry(a) > 1e-12 * std::max(1.0, anorm))
        throw std::invalid_argument("symmetric_eigen: matrix not symmetric");

    Mat w = a;
    Mat v = Mat::identity(n);
    constexpr int kMaxSweeps = 100;
    bool converged = (n < 2);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_norm(w) <= 1e-14 * std::max(anorm, 1e-300)) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                jacobi_rotate(w, v, p, q);
    }
    if (!converged && off_diagonal_norm(w) > 1e-14 * std::max(anorm, 1e-300))
        throw std::runtime_error("symmetric_eigen: Jacobi sweeps did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return w(i, i) < w(j, j); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Mat(n, n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = w(order[k], order[k]);
        for (int i = 0; i < n; ++i)
            out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

SphereMin min_on_sphere(const Mat& a, int restarts, std::uint64_t seed) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw std::invalid_argument("min_on_sphere: bad matrix");
    if (restarts < 1)
        throw std::invalid_argument("min_on_sphere: restarts must be >= 1");
    int n = a.rows();

    // Shift so that B = sigma I - A is PSD; its dominant eigenvector is the
    // minimizer of the Rayleigh quotient of A.
    double sigma = 1.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += std::abs(a(i, j));
        sigma = std::max(sigma, row + 1.0);
    }

    Rng rng(seed);
    SphereMin best{std::numeric_limits<double>::infinity(), Vec(n, 0.0)};
    for (int r = 0; r < restarts; ++r) {
        Vec x = rng.unit_vec(n);
        double value = quad_form(a, x);
        for (int it = 0; it < 500; ++it) {
            Vec y = a * x;
            for (int i = 0; i < n; ++i)
                y[i] = sigma * x[i] - y[i];
            double ny = norm(y);
            if (ny == 0.0)
                break; // x already dominant
            for (int i = 0; i < n; ++i)
                y[i] /= ny;
            double next = quad_form(a, y);
            x = std::move(y);
            if (std::abs(value - next) <= 1e-15 * (std::abs(value) + 1.0)) {
                value = next;
                break;
            }
            value = next;
        }
        if (value < best.value) {
            best.value = value;
            best.direction = x;
        }
    }
    return best;
}

bool spectra_match(Vec s1, Vec s2, double tol) {
    if (s1.size() != s2.size())
        throw std::invalid_argument("spectra_match: length mismatch");
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        double m = std::max(std::abs(s1[i]), std::abs(s2[i]));
        if (std::abs(s1[i] - s2[i]) > tol * (1.0 + m))
            return false;
    }
    return true;
}

std::array<double, 2> solve_monic_quadratic(double e1, double e2) {
    double disc = e1 * e1 - 4.0 * e2;
    if (disc < 0.0)
        disc = 0.0; // symmetric origin: negative only by rounding
    double sq = std::sqrt(disc);
    double r1 = (e1 >= 0.0) ? 0.5 * (e1 + sq) : 0.5 * (e1 - sq);
    double r2 = (r1 != 0.0) ? e2 / r1 : e1 - r1;
    if (r1 > r2)
        std::swap(r1, r2);
    return {r1, r2};
}

std::array<double, 3> solve_monic_cubic(double e1, double e2, double e3) {
    double m = e1 / 3.0;
    double p = e2 - e1 * e1 / 3.0;
    double q = -2.0 * e1 * e1 * e1 / 27.0 + e1 * e2 / 3.0 - e3;
    // x^3 - e1 x^2 + e2 x - e3 = y^3 + p y + q with x = y + m.
    // Three real roots force p <= 0; clip rounding overshoot.
    if (p > 0.0)
        p = 0.0;

    std::array<double, 3> roots{};
    double scale = std::max({std::abs(e1), std::sqrt(std::abs(e2)), cbrt_signed(std::abs(e3)), 1e-150});
    if (-p < 1e-30 * scale * scale) {
        double y = cbrt_signed(-q);
        roots = {y + m, y + m, y + m};
    } else {
        double r = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * r);
        arg = std::clamp(arg, -1.0, 1.0);
        double theta = std::acos(arg);
        for (int k = 0; k < 3; ++k)
            roots[k] = r * std::cos((theta - 2.0 * 3.14159265358979323846 * k) / 3.0) + m;
    }
    for (double& root : roots)
        root = polish_cubic_root(root, e1, e2, e3, scale * scale);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace qch::numerics
