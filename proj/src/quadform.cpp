#include "qch/quadform.hpp"

#include <algorithm>
#include <cmath>

#include "qch/numerics.hpp"

namespace qch::quadform {

namespace {

double abs_of(double v) { return std::abs(v); }
Rational abs_of(const Rational& v) { return v.abs(); }

double to_dbl(double v) { return v; }
double to_dbl(const Rational& v) { return v.to_double(); }

/// Tolerance policy: relative slack in float mode, exact tests in rational
/// mode. Ties at exactly the tolerance resolve to the equality branch.
struct FloatPolicy {
    double tol;
    bool is_zero(double v, double mag) const { return std::abs(v) <= tol * (1.0 + mag); }
    bool nonneg(double v, double mag) const { return v >= -tol * (1.0 + mag); }
    bool strict_pos(double v, double mag) const { return v > tol * (1.0 + mag); }
};

struct ExactPolicy {
    bool is_zero(const Rational& v, const Rational&) const { return v.is_zero(); }
    bool nonneg(const Rational& v, const Rational&) const { return v.sign() >= 0; }
    bool strict_pos(const Rational& v, const Rational&) const { return v.sign() > 0; }
};

enum class CondKind { NonNeg, StrictPos, Zero };

template <class T> struct Cond {
    const char* label;
    T value;
    T magnitude; // sum of |summands|, the relative scale of the check
    CondKind kind;
};

template <class T> std::vector<Cond<T>> simple_conditions(const SimpleFormParamsT<T>& p) {
    const T &mu = p.mu, &al = p.alpha, &be = p.beta, &a = p.a;
    int n = p.n;
    std::vector<Cond<T>> conds;
    conds.push_back({"A1'", al - be, abs_of(al) + abs_of(be), CondKind::NonNeg});
    conds.push_back({"A2'", mu + al + T(n - 2) * be,
                     abs_of(mu) + abs_of(al) + T(n - 2) * abs_of(be), CondKind::NonNeg});
    T t1 = mu * al;
    T t2 = T(n - 2) * mu * be;
    T t3 = T(n - 1) * a * a;
    T disc = t1 + t2 - t3;
    T disc_mag = abs_of(t1) + abs_of(t2) + abs_of(t3);
    conds.push_back({"A3'", disc, disc_mag, CondKind::NonNeg});
    conds.push_back({"A4'", mu + T(n - 1) * al, abs_of(mu) + T(n - 1) * abs_of(al),
                     CondKind::StrictPos});
    conds.push_back({"A5'", (al - be) * disc, (abs_of(al) + abs_of(be)) * disc_mag,
                     CondKind::Zero});
    return conds;
}

template <class T> std::vector<Cond<T>> structured_conditions(const StructuredFormParamsT<T>& p) {
    const T &mu = p.mu, &a1 = p.alpha1, &a2 = p.alpha2, &be = p.beta, &a = p.a;
    int n = p.n();
    std::vector<Cond<T>> conds;
    conds.push_back({"A1", a1 - be, abs_of(a1) + abs_of(be), CondKind::NonNeg});
    conds.push_back({"A1", a2 - be, abs_of(a2) + abs_of(be), CondKind::NonNeg});
    conds.push_back({"A2", a1 + a2 + T(n - 3) * be + mu,
                     abs_of(a1) + abs_of(a2) + T(n - 3) * abs_of(be) + abs_of(mu),
                     CondKind::NonNeg});
    {
        T t1 = (mu + a1 - be) * (a2 + T(p.k2 - 1) * be);
        T t2 = (a1 - be) * mu;
        T t3 = T(p.k1) * be * (a2 - be + mu);
        T t4 = T(n - 1) * a * a;
        conds.push_back({"A3", t1 + t2 + t3 - t4,
                         abs_of(t1) + abs_of(t2) + abs_of(t3) + abs_of(t4), CondKind::NonNeg});
    }
    T d1 = (a1 - be) * (a2 + T(p.k2 - 1) * be) * mu;
    T d2 = T(p.k1) * (a2 - be) * be * mu;
    T d3 = a * a * (T(p.k1) * (a2 - be) + T(p.k2) * (a1 - be));
    T det3 = d1 + d2 - d3;
    T det3_mag = abs_of(d1) + abs_of(d2) + abs_of(d3);
    conds.push_back({"A4", det3, det3_mag, CondKind::NonNeg});
    conds.push_back({"A5", mu + T(p.k1) * a1 + T(p.k2) * a2,
                     abs_of(mu) + T(p.k1) * abs_of(a1) + T(p.k2) * abs_of(a2),
                     CondKind::StrictPos});
    conds.push_back({"A6", (a1 - be) * (a2 - be) * det3,
                     abs_of((a1 - be) * (a2 - be)) * det3_mag, CondKind::Zero});
    return conds;
}

template <class T, class Policy>
bool judge(const Cond<T>& c, const Policy& pol) {
    switch (c.kind) {
    case CondKind::NonNeg:
        return pol.nonneg(c.value, c.magnitude);
    case CondKind::StrictPos:
        return pol.strict_pos(c.value, c.magnitude);
    case CondKind::Zero:
        return pol.is_zero(c.value, c.magnitude);
    }
    return false;
}

template <class T, class Policy>
ConditionVerdict verdict_from(const std::vector<Cond<T>>& conds, const Policy& pol) {
    ConditionVerdict v;
    v.certified = true;
    for (const auto& c : conds) {
        bool ok = judge(c, pol);
        auto [it, inserted] = v.per_condition.try_emplace(c.label, ok);
        if (!inserted)
            it->second = it->second && ok;
        v.certified = v.certified && ok;
    }
    return v;
}

template <class T> SimpleFormParamsT<T> collapse(const StructuredFormParamsT<T>& p) {
    // One block empty: the matrix is literally the single-block layout.
    return {p.mu, p.k1 == 0 ? p.alpha2 : p.alpha1, p.beta, p.a, p.n()};
}

// Nullspace of a small dense matrix over a field, by row reduction. The
// is_zero predicate decides pivot viability (exact test in rational mode,
// relative threshold in float mode).
template <class T, class IsZero>
std::vector<std::vector<T>> nullspace(DenseTable<T> m, IsZero is_zero) {
    int rows = static_cast<int>(m.size());
    int cols = rows > 0 ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_row_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        double best = 0.0;
        for (int i = r; i < rows; ++i) {
            double w = std::abs(to_dbl(m[i][c]));
            if (!is_zero(m[i][c]) && w > best) {
                best = w;
                piv = i;
            }
        }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[r]);
        T inv = m[r][c];
        for (int j = 0; j < cols; ++j)
            m[r][j] = m[r][j] / inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            T f = m[i][c];
            for (int j = 0; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_row_of_col[c] = r;
        ++r;
    }
    std::vector<std::vector<T>> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_row_of_col[c] >= 0)
            continue;
        std::vector<T> v(cols, T(0));
        v[c] = T(1);
        for (int pc = 0; pc < cols; ++pc)
            if (pivot_row_of_col[pc] >= 0)
                v[pc] = T(0) - m[pivot_row_of_col[pc]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T> T table_mag(const DenseTable<T>& m) {
    T mx(0);
    for (const auto& row : m)
        for (const auto& v : row)
            if (abs_of(v) > mx)
                mx = abs_of(v);
    return mx;
}

// e_first - e_j for the remaining block positions; the alpha-block part of
// the kernel when that block's diagonal equals beta.
template <class T>
void append_difference_vectors(std::vector<std::vector<T>>& basis, int n, int first, int count) {
    for (int j = 1; j < count; ++j) {
        std::vector<T> v(n, T(0));
        v[first] = T(1);
        v[first + j] = T(-1);
        basis.push_back(std::move(v));
    }
}

template <class T, class Policy>
KernelDescriptionT<T> kernel_simple_impl(const SimpleFormParamsT<T>& p, const Policy& pol) {
    int n = p.n;
    bool alpha_eq_beta = pol.is_zero(p.alpha - p.beta, abs_of(p.alpha) + abs_of(p.beta));

    EqualityCase label;
    if (!alpha_eq_beta) {
        label = EqualityCase::B1Simple;
    } else {
        T v = p.mu * p.alpha - p.a * p.a;
        bool mual_eq_a2 = pol.is_zero(v, abs_of(p.mu * p.alpha) + abs_of(p.a * p.a));
        label = mual_eq_a2 ? EqualityCase::B3Simple : EqualityCase::B2Simple;
    }

    std::vector<std::vector<T>> basis;
    if (alpha_eq_beta)
        append_difference_vectors(basis, n, 1, n - 1);

    // C preserves span{e1, 1_B}; its restriction there decides the rest.
    DenseTable<T> m = {{p.mu, T(n - 1) * p.a}, {p.a, p.alpha + T(n - 2) * p.beta}};
    T mag = table_mag(m);
    auto reduced = nullspace(m, [&](const T& x) { return pol.is_zero(x, mag); });
    for (const auto& w : reduced) {
        std::vector<T> v(n, w[1]);
        v[0] = w[0];
        basis.push_back(std::move(v));
    }
    return {label, basis, static_cast<int>(basis.size())};
}

template <class T, class Policy>
KernelDescriptionT<T> kernel_structured_impl(const StructuredFormParamsT<T>& p, const Policy& pol) {
    int n = p.n();
    bool a1_eq = pol.is_zero(p.alpha1 - p.beta, abs_of(p.alpha1) + abs_of(p.beta));
    bool a2_eq = pol.is_zero(p.alpha2 - p.beta, abs_of(p.alpha2) + abs_of(p.beta));
    if (a1_eq && a2_eq)
        throw std::invalid_argument(
            "equality_kernel: alpha1 and alpha2 both coincide with beta; no case applies");

    EqualityCase label;
    if (!a1_eq && !a2_eq) {
        label = EqualityCase::B1;
    } else {
        T v = p.mu * p.beta - p.a * p.a;
        bool mube_eq_a2 = pol.is_zero(v, abs_of(p.mu * p.beta) + abs_of(p.a * p.a));
        if (!a1_eq)
            label = mube_eq_a2 ? EqualityCase::B2 : EqualityCase::B3;
        else
            label = mube_eq_a2 ? EqualityCase::B4 : EqualityCase::B5;
    }

    std::vector<std::vector<T>> basis;
    if (a1_eq)
        append_difference_vectors(basis, n, 1, p.k1);
    if (a2_eq)
        append_difference_vectors(basis, n, 1 + p.k1, p.k2);

    // Restriction to span{e1, 1_{block1}, 1_{block2}}.
    DenseTable<T> m = {{p.mu, T(p.k1) * p.a, T(p.k2) * p.a},
                       {p.a, p.alpha1 + T(p.k1 - 1) * p.beta, T(p.k2) * p.beta},
                       {p.a, T(p.k1) * p.beta, p.alpha2 + T(p.k2 - 1) * p.beta}};
    T mag = table_mag(m);
    auto reduced = nullspace(m, [&](const T& x) { return pol.is_zero(x, mag); });
    for (const auto& w : reduced) {
        std::vector<T> v(n, T(0));
        v[0] = w[0];
        for (int i = 1; i <= p.k1; ++i)
            v[i] = w[1];
        for (int i = p.k1 + 1; i < n; ++i)
            v[i] = w[2];
        basis.push_back(std::move(v));
    }
    return {label, basis, static_cast<int>(basis.size())};
}

void require_certified(const ConditionVerdict& v) {
    if (!v.certified)
        throw std::logic_error("equality_kernel: parameters are not certified");
}

Mat table_to_mat(const DenseTable<double>& t) {
    int n = static_cast<int>(t.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = t[i][j];
    return m;
}

std::vector<Rational> ones_vector(int n, long long first) {
    std::vector<Rational> v(n, Rational(1));
    v[0] = Rational(first);
    return v;
}

} // namespace

Mat build_matrix(const SimpleFormParams& p) { return table_to_mat(build_table(p)); }
Mat build_matrix(const StructuredFormParams& p) { return table_to_mat(build_table(p)); }
Mat build_matrix(const FormParams& p) {
    return std::visit([](const auto& q) { return build_matrix(q); }, p);
}

Vec SpectrumFactorization::eigenvalues() const {
    Vec ev;
    for (const auto& lf : linear_factors)
        ev.insert(ev.end(), lf.multiplicity, lf.value);
    if (tail_coeffs.size() == 2) {
        auto r = numerics::solve_monic_quadratic(tail_coeffs[0], tail_coeffs[1]);
        ev.insert(ev.end(), r.begin(), r.end());
    } else if (tail_coeffs.size() == 3) {
        auto r = numerics::solve_monic_cubic(tail_coeffs[0], tail_coeffs[1], tail_coeffs[2]);
        ev.insert(ev.end(), r.begin(), r.end());
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

int SpectrumFactorization::zero_multiplicity(double ztol) const {
    int count = 0;
    for (double v : eigenvalues())
        if (std::abs(v) <= ztol)
            ++count;
    return count;
}

SpectrumFactorization spectrum_factorization(const SimpleFormParams& p) {
    p.validate();
    SpectrumFactorization s;
    if (p.n >= 3)
        s.linear_factors.push_back({p.alpha - p.beta, p.n - 2});
    s.tail_coeffs = {p.mu + p.alpha + (p.n - 2) * p.beta,
                     p.mu * p.alpha + (p.n - 2) * p.mu * p.beta - (p.n - 1) * p.a * p.a};
    return s;
}

SpectrumFactorization spectrum_factorization(const StructuredFormParams& p) {
    p.validate();
    if (p.k1 == 0 || p.k2 == 0)
        return spectrum_factorization(collapse(p));
    SpectrumFactorization s;
    if (p.k1 >= 2)
        s.linear_factors.push_back({p.alpha1 - p.beta, p.k1 - 1});
    if (p.k2 >= 2)
        s.linear_factors.push_back({p.alpha2 - p.beta, p.k2 - 1});
    int n = p.n();
    double d1 = p.alpha1 + p.alpha2 + p.mu + (n - 3) * p.beta;
    double d2 = (p.mu + p.alpha1 - p.beta) * (p.alpha2 + (p.k2 - 1) * p.beta) +
                (p.alpha1 - p.beta) * p.mu + p.k1 * p.beta * (p.alpha2 - p.beta + p.mu) -
                (n - 1) * p.a * p.a;
    double d3 = (p.alpha1 - p.beta) * (p.alpha2 + (p.k2 - 1) * p.beta) * p.mu +
                p.k1 * (p.alpha2 - p.beta) * p.beta * p.mu -
                p.a * p.a * (p.k1 * (p.alpha2 - p.beta) + p.k2 * (p.alpha1 - p.beta));
    s.tail_coeffs = {d1, d2, d3};
    return s;
}

SpectrumFactorization spectrum_factorization(const FormParams& p) {
    return std::visit([](const auto& q) { return spectrum_factorization(q); }, p);
}

bool lemma31_nonneg(double e1, double e2, double e3) {
    return e1 >= 0.0 && e2 >= 0.0 && e3 >= 0.0;
}

ConditionVerdict check_conditions(const SimpleFormParams& p, double tol) {
    p.validate();
    if (tol < 0.0)
        throw std::invalid_argument("check_conditions: tol must be >= 0");
    auto v = verdict_from(simple_conditions(p), FloatPolicy{tol});
    v.tolerance = tol;
    return v;
}

ConditionVerdict check_conditions(const StructuredFormParams& p, double tol) {
    p.validate();
    if (tol < 0.0)
        throw std::invalid_argument("check_conditions: tol must be >= 0");
    if (p.k1 == 0 || p.k2 == 0)
        return check_conditions(collapse(p), tol);
    auto v = verdict_from(structured_conditions(p), FloatPolicy{tol});
    v.tolerance = tol;
    return v;
}

ConditionVerdict check_conditions(const FormParams& p, double tol) {
    return std::visit([&](const auto& q) { return check_conditions(q, tol); }, p);
}

ConditionVerdict check_conditions(const ExactSimpleFormParams& p) {
    p.validate();
    auto v = verdict_from(simple_conditions(p), ExactPolicy{});
    v.exact = true;
    return v;
}

ConditionVerdict check_conditions(const ExactStructuredFormParams& p) {
    p.validate();
    if (p.k1 == 0 || p.k2 == 0)
        return check_conditions(collapse(p));
    auto v = verdict_from(structured_conditions(p), ExactPolicy{});
    v.exact = true;
    return v;
}

ConditionVerdict check_conditions(const ExactFormParams& p) {
    return std::visit([](const auto& q) { return check_conditions(q); }, p);
}

CertifyResult certify_psd(const SimpleFormParams& p, double tol) {
    auto verdict = check_conditions(p, tol);
    return {verdict.certified ? CertifyStatus::CertifiedPsdWithKernel
                              : CertifyStatus::Undetermined,
            verdict, spectrum_factorization(p)};
}

CertifyResult certify_psd(const StructuredFormParams& p, double tol) {
    auto verdict = check_conditions(p, tol);
    return {verdict.certified ? CertifyStatus::CertifiedPsdWithKernel
                              : CertifyStatus::Undetermined,
            verdict, spectrum_factorization(p)};
}

CertifyResult certify_psd(const FormParams& p, double tol) {
    return std::visit([&](const auto& q) { return certify_psd(q, tol); }, p);
}

const char* to_string(EqualityCase c) {
    switch (c) {
    case EqualityCase::B1:
        return "B1";
    case EqualityCase::B2:
        return "B2";
    case EqualityCase::B3:
        return "B3";
    case EqualityCase::B4:
        return "B4";
    case EqualityCase::B5:
        return "B5";
    case EqualityCase::B1Simple:
        return "B1'";
    case EqualityCase::B2Simple:
        return "B2'";
    case EqualityCase::B3Simple:
        return "B3'";
    }
    return "?";
}

KernelDescription equality_kernel(const SimpleFormParams& p, double tol) {
    require_certified(check_conditions(p, tol));
    return kernel_simple_impl(p, FloatPolicy{tol});
}

KernelDescription equality_kernel(const StructuredFormParams& p, double tol) {
    require_certified(check_conditions(p, tol));
    if (p.k1 == 0 || p.k2 == 0)
        return kernel_simple_impl(collapse(p), FloatPolicy{tol});
    return kernel_structured_impl(p, FloatPolicy{tol});
}

KernelDescription equality_kernel(const FormParams& p, double tol) {
    return std::visit([&](const auto& q) { return equality_kernel(q, tol); }, p);
}

ExactKernelDescription equality_kernel(const ExactSimpleFormParams& p) {
    require_certified(check_conditions(p));
    return kernel_simple_impl(p, ExactPolicy{});
}

ExactKernelDescription equality_kernel(const ExactStructuredFormParams& p) {
    require_certified(check_conditions(p));
    if (p.k1 == 0 || p.k2 == 0)
        return kernel_simple_impl(collapse(p), ExactPolicy{});
    return kernel_structured_impl(p, ExactPolicy{});
}

ExactKernelDescription equality_kernel(const ExactFormParams& p) {
    return std::visit([](const auto& q) { return equality_kernel(q); }, p);
}

const char* to_string(NamedExample e) {
    switch (e) {
    case NamedExample::CauchySchwarz:
        return "cauchy_schwarz";
    case NamedExample::Deng22:
        return "deng_2_2";
    case NamedExample::Deng33:
        return "deng_3_3";
    case NamedExample::Oprea414:
        return "oprea_4_14";
    case NamedExample::Oprea427:
        return "oprea_4_27";
    }
    return "?";
}

std::optional<NamedExample> named_example_from_string(const std::string& name) {
    for (NamedExample e : {NamedExample::CauchySchwarz, NamedExample::Deng22,
                           NamedExample::Deng33, NamedExample::Oprea414,
                           NamedExample::Oprea427})
        if (name == to_string(e))
            return e;
    return std::nullopt;
}

int min_dimension(NamedExample e) {
    return (e == NamedExample::Oprea414 || e == NamedExample::Oprea427) ? 3 : 2;
}

NamedExampleInstance named_example(NamedExample e, int n, int r) {
    if (n < min_dimension(e))
        throw std::invalid_argument("named_example: dimension below the family minimum");
    long long m = n;

    NamedExampleInstance inst;
    inst.permutation.resize(n);
    for (int i = 0; i < n; ++i)
        inst.permutation[i] = i;

    switch (e) {
    case NamedExample::CauchySchwarz:
        inst.params = ExactSimpleFormParams{{m - 1, m}, {m - 1, m}, {-1, m}, {-1, m}, n};
        inst.equality_vector = ones_vector(n, 1);
        break;
    case NamedExample::Deng22:
        inst.params = ExactSimpleFormParams{
            {m - 1, 4 * m}, {5 * m - 1, 4 * m}, {m - 1, 4 * m}, {-(m + 1), 4 * m}, n};
        inst.equality_vector = ones_vector(n, m + 1);
        break;
    case NamedExample::Deng33:
        inst.params = ExactSimpleFormParams{{9, 8}, {1, 8}, {1, 8}, {-3, 8}, n};
        inst.equality_vector.assign(n, Rational(0));
        inst.equality_vector[0] = Rational(1);
        inst.equality_vector[1] = Rational(3);
        break;
    case NamedExample::Oprea414:
        inst.params = ExactSimpleFormParams{{(m - 2) * (m - 1), 2 * (m + 1)},
                                            {(3 * m + 1) * (m - 2), 2 * (m + 1)},
                                            {-3 * (m - 1), 2 * (m + 1)},
                                            {-(m - 2), m + 1},
                                            n};
        inst.equality_vector = ones_vector(n, 2);
        break;
    case NamedExample::Oprea427: {
        if (r < 2 || r > n)
            throw std::invalid_argument("named_example: r must satisfy 2 <= r <= n");
        inst.params = ExactStructuredFormParams{{9 * (m - 2) * (m + 1), 2 * (3 * m + 5)},
                                                {(3 * m - 1) * (m - 2), 2 * (3 * m + 5)},
                                                {9 * m * m - 3 * m - 8, 2 * (3 * m + 5)},
                                                {-(9 * m - 7), 2 * (3 * m + 5)},
                                                {-3 * (m - 2), 3 * m + 5},
                                                1,
                                                n - 2};
        std::swap(inst.permutation[1], inst.permutation[r - 1]);
        // Form coordinates: the alpha1 slot carries the 9/2 ratio.
        inst.equality_vector.assign(n, Rational(3));
        inst.equality_vector[0] = Rational(2);
        inst.equality_vector[1] = Rational(9);
        break;
    }
    }
    return inst;
}

double classical_slack(NamedExample e, const Vec& x, int r) {
    int n = static_cast<int>(x.size());
    if (n < min_dimension(e))
        throw std::invalid_argument("classical_slack: vector too short for the family");
    double total = 0.0;
    for (double v : x)
        total += v;

    switch (e) {
    case NamedExample::CauchySchwarz: {
        double sq = 0.0;
        for (double v : x)
            sq += v * v;
        return sq - total * total / n;
    }
    case NamedExample::Deng22: {
        double lhs = 0.0;
        for (int i = 1; i < n; ++i)
            lhs += x[0] * x[i] - x[i] * x[i];
        return (n - 1) / (4.0 * n) * total * total - lhs;
    }
    case NamedExample::Deng33: {
        double lhs = -x[0] * x[0];
        for (int i = 1; i < n; ++i)
            lhs += x[0] * x[i];
        return total * total / 8.0 - lhs;
    }
    case NamedExample::Oprea414: {
        double lhs = 0.0;
        for (int i = 1; i < n; ++i)
            lhs += (n - 2) * (x[0] * x[i] - x[i] * x[i]);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                lhs += (n - 1) * x[i] * x[j];
        return (n - 2) * (n - 1) / (2.0 * (n + 1)) * total * total - lhs;
    }
    case NamedExample::Oprea427: {
        if (r < 2 || r > n)
            throw std::invalid_argument("classical_slack: r must satisfy 2 <= r <= n");
        double lhs = -(n - 2) * x[0] * x[0];
        for (int i = 1; i < n; ++i)
            if (i != r - 1)
                lhs -= (n - 1) * x[i] * x[i];
        for (int i = 1; i < n; ++i)
            lhs += (n - 2) * x[0] * x[i];
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                lhs += (n - 1) * x[i] * x[j];
        return (3 * n - 1) * (n - 2) / (2.0 * (3 * n + 5)) * total * total - lhs;
    }
    }
    throw std::logic_error("classical_slack: unknown example");
}

} // namespace qch::quadform
