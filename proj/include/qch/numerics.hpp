#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qch/linalg.hpp"

namespace qch::numerics {

struct EigenDecomposition {
    Vec eigenvalues;  // ascending
    Mat eigenvectors; // column i pairs with eigenvalues[i]
};

/// Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
///
/// Deliberately self-contained (no LAPACK): this is the independent oracle
/// the closed-form spectra are audited against. Throws on non-symmetric
/// input and on non-convergence within the sweep budget.
EigenDecomposition symmetric_eigen(const Mat& a);

struct SphereMin {
    double value;
    Vec direction; // unit
};

/// min_x |x|=1 of x^T A x by shifted power iteration from random restarts.
/// Independent of symmetric_eigen; accuracy ~1e-6 on separated spectra.
SphereMin min_on_sphere(const Mat& a, int restarts, std::uint64_t seed);

/// Sorted elementwise comparison with relative tolerance tol*(1+max|value|).
bool spectra_match(Vec s1, Vec s2, double tol);

/// Real roots of x^2 - e1 x + e2, ascending. Assumes the discriminant is
/// nonnegative up to rounding (quadratics arising from symmetric matrices).
std::array<double, 2> solve_monic_quadratic(double e1, double e2);

/// Real roots of x^3 - e1 x^2 + e2 x - e3, ascending, same assumption.
std::array<double, 3> solve_monic_cubic(double e1, double e2, double e3);

} // namespace qch::numerics
