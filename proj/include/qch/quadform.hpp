#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qch/linalg.hpp"
#include "qch/rational.hpp"

namespace qch::quadform {

// ---------------------------------------------------------------------------
// Parameter records
// ---------------------------------------------------------------------------

/// Single-block form: f = mu x1^2 + alpha sum_{i>=2} xi^2
///                      + 2a sum_{i>=2} x1 xi + 2beta sum_{2<=i<j} xi xj.
template <class T> struct SimpleFormParamsT {
    T mu{}, alpha{}, beta{}, a{};
    int n = 0;

    void validate() const {
        if (n < 2)
            throw std::invalid_argument("simple form requires n >= 2");
    }
};

/// Two-block form: the distinguished coordinate x1 carries mu and couples to
/// every other coordinate through a; indices 2..k1+1 carry alpha1, the rest
/// alpha2; every remaining off-diagonal pair couples through beta.
template <class T> struct StructuredFormParamsT {
    T mu{}, alpha1{}, alpha2{}, beta{}, a{};
    int k1 = 0, k2 = 0;

    int n() const { return k1 + k2 + 1; }

    void validate() const {
        if (k1 < 0 || k2 < 0)
            throw std::invalid_argument("structured form requires k1, k2 >= 0");
        if (n() < 3)
            throw std::invalid_argument("structured form requires k1 + k2 + 1 >= 3");
        if (alpha1 == alpha2)
            throw std::invalid_argument("structured form requires alpha1 != alpha2");
    }
};

using SimpleFormParams = SimpleFormParamsT<double>;
using StructuredFormParams = StructuredFormParamsT<double>;
using ExactSimpleFormParams = SimpleFormParamsT<Rational>;
using ExactStructuredFormParams = StructuredFormParamsT<Rational>;

template <class T>
using FormParamsT = std::variant<SimpleFormParamsT<T>, StructuredFormParamsT<T>>;
using FormParams = FormParamsT<double>;
using ExactFormParams = FormParamsT<Rational>;

inline SimpleFormParams to_float(const ExactSimpleFormParams& p) {
    return {p.mu.to_double(), p.alpha.to_double(), p.beta.to_double(), p.a.to_double(), p.n};
}
inline StructuredFormParams to_float(const ExactStructuredFormParams& p) {
    return {p.mu.to_double(), p.alpha1.to_double(), p.alpha2.to_double(), p.beta.to_double(),
            p.a.to_double(), p.k1, p.k2};
}

// ---------------------------------------------------------------------------
// Matrix and direct evaluation
// ---------------------------------------------------------------------------

template <class T> using DenseTable = std::vector<std::vector<T>>;

template <class T> DenseTable<T> build_table(const SimpleFormParamsT<T>& p) {
    p.validate();
    DenseTable<T> c(p.n, std::vector<T>(p.n, p.beta));
    c[0][0] = p.mu;
    for (int j = 1; j < p.n; ++j) {
        c[0][j] = p.a;
        c[j][0] = p.a;
        c[j][j] = p.alpha;
    }
    return c;
}

template <class T> DenseTable<T> build_table(const StructuredFormParamsT<T>& p) {
    p.validate();
    int n = p.n();
    DenseTable<T> c(n, std::vector<T>(n, p.beta));
    c[0][0] = p.mu;
    for (int j = 1; j < n; ++j) {
        c[0][j] = p.a;
        c[j][0] = p.a;
        c[j][j] = (j <= p.k1) ? p.alpha1 : p.alpha2;
    }
    return c;
}

Mat build_matrix(const SimpleFormParams& p);
Mat build_matrix(const StructuredFormParams& p);
Mat build_matrix(const FormParams& p);

/// Direct evaluation of the displayed polynomial (not via the matrix).
template <class T> T evaluate(const SimpleFormParamsT<T>& p, const std::vector<T>& x) {
    p.validate();
    if (static_cast<int>(x.size()) != p.n)
        throw std::invalid_argument("evaluate: x has wrong length");
    T sum_sq{}, sum_x1_xi{}, sum_pairs{}, tail_sum{};
    for (int i = 1; i < p.n; ++i) {
        sum_sq += x[i] * x[i];
        sum_x1_xi += x[0] * x[i];
        sum_pairs += tail_sum * x[i];
        tail_sum += x[i];
    }
    return p.mu * x[0] * x[0] + p.alpha * sum_sq + T(2) * p.a * sum_x1_xi +
           T(2) * p.beta * sum_pairs;
}

template <class T> T evaluate(const StructuredFormParamsT<T>& p, const std::vector<T>& x) {
    p.validate();
    int n = p.n();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("evaluate: x has wrong length");
    T block1{}, block2{}, sum_x1_xi{}, sum_pairs{}, tail_sum{};
    for (int i = 1; i < n; ++i) {
        if (i <= p.k1)
            block1 += x[i] * x[i];
        else
            block2 += x[i] * x[i];
        sum_x1_xi += x[0] * x[i];
        sum_pairs += tail_sum * x[i];
        tail_sum += x[i];
    }
    return p.mu * x[0] * x[0] + p.alpha1 * block1 + p.alpha2 * block2 +
           T(2) * p.a * sum_x1_xi + T(2) * p.beta * sum_pairs;
}

// ---------------------------------------------------------------------------
// Closed-form spectrum
// ---------------------------------------------------------------------------

/// Eigenvalues as linear factors plus the elementary-symmetric coefficients
/// of the cubic (two-block) or quadratic (single-block) residual factor.
struct SpectrumFactorization {
    struct LinearFactor {
        double value;
        int multiplicity;
    };
    std::vector<LinearFactor> linear_factors;
    std::vector<double> tail_coeffs; // {D1,D2,D3} or {E1,E2}

    /// Full eigenvalue multiset, ascending.
    Vec eigenvalues() const;

    /// Multiplicity of (near-)zero eigenvalues at absolute threshold ztol.
    int zero_multiplicity(double ztol) const;
};

SpectrumFactorization spectrum_factorization(const SimpleFormParams& p);
SpectrumFactorization spectrum_factorization(const StructuredFormParams& p);
SpectrumFactorization spectrum_factorization(const FormParams& p);

/// Elementary-symmetric test from the cubic-root lemma: a monic cubic with
/// all-real roots has only nonnegative roots iff e1, e2, e3 >= 0.
bool lemma31_nonneg(double e1, double e2, double e3);

// ---------------------------------------------------------------------------
// Condition certification
// ---------------------------------------------------------------------------

struct ConditionVerdict {
    std::map<std::string, bool> per_condition; // "A1".."A6" or "A1'".."A5'"
    bool certified = false;
    double tolerance = 0.0;
    bool exact = false;
};

ConditionVerdict check_conditions(const SimpleFormParams& p, double tol);
ConditionVerdict check_conditions(const StructuredFormParams& p, double tol);
ConditionVerdict check_conditions(const FormParams& p, double tol);
ConditionVerdict check_conditions(const ExactSimpleFormParams& p);
ConditionVerdict check_conditions(const ExactStructuredFormParams& p);
ConditionVerdict check_conditions(const ExactFormParams& p);

enum class CertifyStatus { CertifiedPsdWithKernel, Undetermined };

struct CertifyResult {
    CertifyStatus status;
    ConditionVerdict conditions;
    SpectrumFactorization spectrum;

    bool certified() const { return status == CertifyStatus::CertifiedPsdWithKernel; }
};

/// One-directional: a certificate proves PSD-with-kernel; failed conditions
/// prove nothing and the caller must fall back to the eigensolver oracle.
CertifyResult certify_psd(const SimpleFormParams& p, double tol);
CertifyResult certify_psd(const StructuredFormParams& p, double tol);
CertifyResult certify_psd(const FormParams& p, double tol);

// ---------------------------------------------------------------------------
// Equality kernel
// ---------------------------------------------------------------------------

enum class EqualityCase { B1, B2, B3, B4, B5, B1Simple, B2Simple, B3Simple };

const char* to_string(EqualityCase c);

template <class T> struct KernelDescriptionT {
    EqualityCase case_label{};
    std::vector<std::vector<T>> kernel_basis;
    int kernel_dim = 0;
};
using KernelDescription = KernelDescriptionT<double>;
using ExactKernelDescription = KernelDescriptionT<Rational>;

/// Explicit basis of {x : Cx = 0} for certified parameters, labeled by the
/// case split on (alpha1-beta, alpha2-beta, mu*beta-a^2), resp.
/// (alpha-beta, mu*alpha-a^2). Throws std::logic_error when uncertified.
KernelDescription equality_kernel(const SimpleFormParams& p, double tol);
KernelDescription equality_kernel(const StructuredFormParams& p, double tol);
KernelDescription equality_kernel(const FormParams& p, double tol);
ExactKernelDescription equality_kernel(const ExactSimpleFormParams& p);
ExactKernelDescription equality_kernel(const ExactStructuredFormParams& p);
ExactKernelDescription equality_kernel(const ExactFormParams& p);

// ---------------------------------------------------------------------------
// Named example families
// ---------------------------------------------------------------------------

enum class NamedExample { CauchySchwarz, Deng22, Deng33, Oprea414, Oprea427 };

const char* to_string(NamedExample e);
std::optional<NamedExample> named_example_from_string(const std::string& name);

/// Minimal admissible dimension of a family (2 or 3).
int min_dimension(NamedExample e);

struct NamedExampleInstance {
    ExactFormParams params;
    /// Position i of the inequality variables reads coordinate permutation[i]
    /// of the form (identity except for the index swap of the fifth family).
    std::vector<int> permutation;
    /// Representative vector of the stated equality locus.
    std::vector<Rational> equality_vector;
};

/// Exact parameter substitution of the named inequality family at dimension
/// n (r selects the distinguished index of the fifth family, 2 <= r <= n).
NamedExampleInstance named_example(NamedExample e, int n, int r = 2);

/// RHS - LHS of the classical displayed inequality, evaluated directly from
/// its sums (independent of the certified quadratic form).
double classical_slack(NamedExample e, const Vec& x, int r = 2);

} // namespace qch::quadform
