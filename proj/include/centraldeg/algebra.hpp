#pragma once

/**
 * Exact combinatorics, sparse multivariate polynomials, packed symmetric
 * matrices and determinant/adjugate evaluation.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace centraldeg {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Read-only view over the coefficients of a complex vector.
inline std::span<const std::complex<double>> as_span(const Eigen::VectorXcd& v)
{
    return {v.data(), static_cast<std::size_t>(v.size())};
}

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Combinatorics

/// Exact binomial coefficient; 0 when k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be nonnegative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after this line
    }
    return r;
}

/**
 * Binomial coefficient extended to negative upper index through the falling
 * factorial n(n-1)...(n-k+1)/k!, so that C(-1, 0) = 1. Used by the LP genus
 * sum whose first term has upper index m-d-2, which is -1 when d = m-1.
 */
inline BigInt binomial_falling(std::int64_t n, std::int64_t k)
{
    if (k < 0) {
        return 0;
    }
    if (n >= 0) {
        return binomial(n, k);
    }
    BigInt num = 1;
    BigInt den = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

inline BigInt factorial(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial of negative number");
    }
    BigInt r = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

/// Narrowing conversion with an overflow check.
inline std::int64_t to_int64(const BigInt& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("integer does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials

struct Monomial
{
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
    Monomial(std::initializer_list<int> e) : exponents(e) {}
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    std::size_t nvars() const { return exponents.size(); }
    int total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument("monomial variable count mismatch");
    }
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        r.exponents[i] = a.exponents[i] + b.exponents[i];
    }
    return r;
}

/// z^e, evaluated by repeated multiplication.
inline cplx monomial_value(const Monomial& mono, std::span<const cplx> point)
{
    cplx v = 1.0;
    for (std::size_t i = 0; i < mono.nvars(); ++i) {
        for (int k = 0; k < mono.exponents[i]; ++k) {
            v *= point[i];
        }
    }
    return v;
}

/**
 * Polynomial with complex coefficients stored as a map from exponent vector
 * to coefficient. Zero coefficients are never stored.
 */
class Poly
{
public:
    using Terms = std::map<Monomial, cplx>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, cplx c)
    {
        Poly p(nvars);
        p.add_term(Monomial(nvars), c);
        return p;
    }

    static Poly variable(std::size_t nvars, std::size_t index)
    {
        if (index >= nvars) {
            throw std::out_of_range("Poly::variable index out of range");
        }
        Monomial m(nvars);
        m.exponents[index] = 1;
        Poly p(nvars);
        p.add_term(m, 1.0);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Accumulates c into the coefficient of mono; drops the term if it cancels to zero.
    void add_term(const Monomial& mono, cplx c)
    {
        if (mono.nvars() != nvars_) {
            throw std::invalid_argument("Poly::add_term: monomial has " + std::to_string(mono.nvars()) +
                                        " variables, polynomial has " + std::to_string(nvars_));
        }
        if (c == cplx(0.0)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second == cplx(0.0)) {
                terms_.erase(it);
            }
        }
    }

    cplx coefficient(const Monomial& mono) const
    {
        auto it = terms_.find(mono);
        return it == terms_.end() ? cplx(0.0) : it->second;
    }

    int degree() const
    {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            d = std::max(d, m.total_degree());
        }
        return d;
    }

    std::vector<Monomial> support() const
    {
        std::vector<Monomial> s;
        s.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            s.push_back(m);
        }
        return s;
    }

    Poly& operator+=(const Poly& o)
    {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }

    Poly& operator*=(cplx s)
    {
        if (s == cplx(0.0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, cplx s) { return a *= s; }
    friend Poly operator*(cplx s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a) { return a *= -1.0; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check_compatible(b);
        Poly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }

    /// Monomial-sum evaluation; throws on dimension mismatch.
    cplx evaluate(std::span<const cplx> point) const
    {
        if (point.size() != nvars_) {
            throw std::invalid_argument("Poly::evaluate: point has " + std::to_string(point.size()) +
                                        " coordinates, expected " + std::to_string(nvars_));
        }
        cplx s = 0.0;
        for (const auto& [m, c] : terms_) {
            s += c * monomial_value(m, point);
        }
        return s;
    }

    /// Sum of |c|·|z^e|: the natural scale for a relative residual.
    double magnitude(std::span<const cplx> point) const
    {
        double s = 0.0;
        for (const auto& [m, c] : terms_) {
            s += std::abs(c) * std::abs(monomial_value(m, point));
        }
        return s;
    }

    Poly differentiate(std::size_t var) const
    {
        if (var >= nvars_) {
            throw std::out_of_range("Poly::differentiate variable out of range");
        }
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) {
            const int e = m.exponents[var];
            if (e == 0) {
                continue;
            }
            Monomial dm = m;
            dm.exponents[var] = e - 1;
            r.add_term(dm, c * static_cast<double>(e));
        }
        return r;
    }

private:
    void check_compatible(const Poly& o) const
    {
        if (o.nvars_ != nvars_) {
            throw std::invalid_argument("Poly arithmetic on different variable counts");
        }
    }

    std::size_t nvars_;
    Terms terms_;
};

inline cplx poly_eval(const Poly& p, std::span<const cplx> point) { return p.evaluate(point); }

/// Jacobian of a square polynomial system, one row per equation.
inline CMatrix system_jacobian(std::span<const Poly> sys, std::span<const cplx> point)
{
    const auto n = sys.size();
    if (point.size() != n) {
        throw std::invalid_argument("system_jacobian: point dimension does not match system size");
    }
    CMatrix J(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sys[i].nvars() != n) {
            throw std::invalid_argument("system_jacobian: system is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            J(i, j) = sys[i].differentiate(j).evaluate(point);
        }
    }
    return J;
}

// ---------------------------------------------------------------------------
// Packed symmetric matrices

/// Symmetric m×m matrix stored as its row-major upper triangle.
template <class T>
class SymMatrix
{
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t m) : m_(m), data_(m * (m + 1) / 2, T(0)) {}

    static SymMatrix identity(std::size_t m)
    {
        SymMatrix s(m);
        for (std::size_t i = 0; i < m; ++i) {
            s(i, i) = T(1);
        }
        return s;
    }

    template <class Derived>
    static SymMatrix from_dense(const Eigen::MatrixBase<Derived>& M)
    {
        if (M.rows() != M.cols()) {
            throw std::invalid_argument("SymMatrix::from_dense: matrix is not square");
        }
        SymMatrix s(static_cast<std::size_t>(M.rows()));
        for (std::size_t i = 0; i < s.m_; ++i) {
            for (std::size_t j = i; j < s.m_; ++j) {
                s(i, j) = (M(i, j) + M(j, i)) / T(2);
            }
        }
        return s;
    }

    std::size_t dim() const { return m_; }
    std::size_t packed_size() const { return data_.size(); }
    const std::vector<T>& packed() const { return data_; }
    std::vector<T>& packed() { return data_; }

    static std::size_t packed_index(std::size_t m, std::size_t i, std::size_t j)
    {
        if (i > j) {
            std::swap(i, j);
        }
        return i * m - i * (i - 1) / 2 + (j - i);
    }

    T& operator()(std::size_t i, std::size_t j) { return data_[packed_index(m_, i, j)]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[packed_index(m_, i, j)]; }

    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> dense() const
    {
        Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> M(m_, m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = i; j < m_; ++j) {
                M(i, j) = M(j, i) = (*this)(i, j);
            }
        }
        return M;
    }

    bool operator==(const SymMatrix&) const = default;

private:
    std::size_t m_ = 0;
    std::vector<T> data_;
};

/// ⟨A, B⟩ = tr(AB) for symmetric A, B.
template <class T>
T trace_inner(const SymMatrix<T>& a, const SymMatrix<T>& b)
{
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("trace_inner: dimension mismatch");
    }
    T s(0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += a(i, i) * b(i, i);
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            s += T(2) * a(i, j) * b(i, j);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Determinant and adjugate

struct DetAdj
{
    cplx det;
    CMatrix adj;
};

/// Largest entry modulus.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& M)
{
    return M.size() == 0 ? 0.0 : std::sqrt(M.cwiseAbs2().maxCoeff());
}

namespace detail {

inline CMatrix minor_without(const CMatrix& K, Eigen::Index row, Eigen::Index col)
{
    const Eigen::Index n = K.rows();
    CMatrix M(n - 1, n - 1);
    for (Eigen::Index i = 0, r = 0; i < n; ++i) {
        if (i == row) {
            continue;
        }
        for (Eigen::Index j = 0, c = 0; j < n; ++j) {
            if (j == col) {
                continue;
            }
            M(r, c++) = K(i, j);
        }
        ++r;
    }
    return M;
}

inline cplx lu_det(const CMatrix& K)
{
    if (K.rows() == 0) {
        return 1.0;
    }
    return Eigen::PartialPivLU<CMatrix>(K).determinant();
}

} // namespace detail

/// Adjugate through (m-1)-minors; exact up to rounding even for singular K.
inline CMatrix cofactor_adjugate(const CMatrix& K)
{
    const Eigen::Index n = K.rows();
    CMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1.0;
        return adj;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            adj(i, j) = sign * detail::lu_det(detail::minor_without(K, j, i));
        }
    }
    return adj;
}

/// Relative determinant size below which the adjugate switches to cofactors.
inline constexpr double kAdjugateSingularThreshold = 1e-12;

inline bool near_singular(cplx det, double scale, Eigen::Index m)
{
    const double bound = kAdjugateSingularThreshold * std::pow(scale, static_cast<double>(m));
    return std::norm(det) <= bound * bound;
}

/**
 * Returns (det K, adj K). LU gives det and det·K^{-1}; when |det| falls below
 * 1e-12·(max|K_ij|)^m the adjugate is rebuilt from (m-1)-minors instead.
 */
inline DetAdj det_adj(const CMatrix& K)
{
    if (K.rows() != K.cols()) {
        throw std::invalid_argument("det_adj: matrix is not square");
    }
    const Eigen::Index m = K.rows();
    if (m == 0) {
        return {1.0, CMatrix(0, 0)};
    }
    Eigen::PartialPivLU<CMatrix> lu(K);
    const cplx det = lu.determinant();
    if (near_singular(det, max_abs(K), m)) {
        return {det, cofactor_adjugate(K)};
    }
    CMatrix adj = det * lu.inverse();
    return {det, adj};
}

/// Complex product without the NaN/Inf recovery of the library operator.
inline cplx fast_mul(cplx a, cplx b)
{
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline cplx fast_inv(cplx a)
{
    const double s = 1.0 / (a.real() * a.real() + a.imag() * a.imag());
    return {a.real() * s, -a.imag() * s};
}

/**
 * Partial-pivot LU for the small dense systems of the path tracker. Works on
 * a private copy with plain loops, avoiding the per-call setup cost of the
 * blocked Eigen decomposition at sizes below ~20.
 */
class SmallLU
{
public:
    void compute(const CMatrix& A)
    {
        n_ = A.rows();
        lu_ = A;
        perm_.resize(static_cast<std::size_t>(n_));
        inv_diag_.resize(static_cast<std::size_t>(n_));
        sign_ = 1;
        singular_ = false;
        for (Eigen::Index k = 0; k < n_; ++k) {
            Eigen::Index p = k;
            double best = std::norm(lu_(k, k));
            for (Eigen::Index i = k + 1; i < n_; ++i) {
                const double v = std::norm(lu_(i, k));
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            perm_[static_cast<std::size_t>(k)] = p;
            if (p != k) {
                lu_.row(p).swap(lu_.row(k));
                sign_ = -sign_;
            }
            if (best == 0.0) {
                singular_ = true;
                inv_diag_[static_cast<std::size_t>(k)] = cplx(std::numeric_limits<double>::infinity());
                continue;
            }
            const cplx inv = fast_inv(lu_(k, k));
            inv_diag_[static_cast<std::size_t>(k)] = inv;
            for (Eigen::Index i = k + 1; i < n_; ++i) {
                lu_(i, k) = fast_mul(lu_(i, k), inv);
            }
            for (Eigen::Index j = k + 1; j < n_; ++j) {
                const cplx u = lu_(k, j);
                if (u == cplx(0.0)) {
                    continue;
                }
                cplx* col = &lu_(0, j);
                const cplx* lk = &lu_(0, k);
                for (Eigen::Index i = k + 1; i < n_; ++i) {
                    col[i] -= fast_mul(lk[i], u);
                }
            }
        }
    }

    cplx determinant() const
    {
        cplx d = static_cast<double>(sign_);
        for (Eigen::Index k = 0; k < n_; ++k) {
            d = fast_mul(d, lu_(k, k));
        }
        return d;
    }

    bool singular() const { return singular_; }

    /// x = A^{-1} b.
    void solve(const CVector& b, CVector& x) const
    {
        x = b;
        solve_in_place(x.data());
    }

    void inverse(CMatrix& out) const
    {
        out.setIdentity(n_, n_);
        for (Eigen::Index j = 0; j < n_; ++j) {
            solve_in_place(&out(0, j));
        }
    }

private:
    void solve_in_place(cplx* x) const
    {
        for (Eigen::Index k = 0; k < n_; ++k) {
            const auto p = perm_[static_cast<std::size_t>(k)];
            if (p != k) {
                std::swap(x[k], x[p]);
            }
        }
        for (Eigen::Index k = 0; k < n_; ++k) {
            const cplx xk = x[k];
            const cplx* lk = &lu_(0, k);
            for (Eigen::Index i = k + 1; i < n_; ++i) {
                x[i] -= fast_mul(lk[i], xk);
            }
        }
        for (Eigen::Index k = n_ - 1; k >= 0; --k) {
            x[k] = fast_mul(x[k], inv_diag_[static_cast<std::size_t>(k)]);
            const cplx xk = x[k];
            const cplx* uk = &lu_(0, k);
            for (Eigen::Index i = 0; i < k; ++i) {
                x[i] -= fast_mul(uk[i], xk);
            }
        }
    }

    CMatrix lu_;
    std::vector<Eigen::Index> perm_;
    std::vector<cplx> inv_diag_;
    Eigen::Index n_ = 0;
    int sign_ = 1;
    bool singular_ = false;
};

} // namespace centraldeg
