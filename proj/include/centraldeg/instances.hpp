#pragma once

/**
 * Random generic LP/QP/SDP instances with strict-feasibility certificates,
 * the cleared KKT system restricted to a generic hyperplane slice, and the
 * likelihood system of the linear concentration model spanned by C, A_1..A_d.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "algebra.hpp"
#include "rng.hpp"

namespace centraldeg {

enum class Family { lp, qp, sdp, sos };

inline std::string to_string(Family f)
{
    switch (f) {
    case Family::lp: return "lp";
    case Family::qp: return "qp";
    case Family::sdp: return "sdp";
    case Family::sos: return "sos";
    }
    return "?";
}

inline Family family_from_string(const std::string& s)
{
    if (s == "lp" || s == "LP") return Family::lp;
    if (s == "qp" || s == "QP") return Family::qp;
    if (s == "sdp" || s == "SDP") return Family::sdp;
    if (s == "sos" || s == "SOS") return Family::sos;
    throw std::invalid_argument("unknown family '" + s + "'");
}

struct LPInstance
{
    int m = 0;
    int d = 0;
    std::uint64_t seed = 0;
    RMatrix A; ///< d×m
    RVector b;
    RVector c;
    RVector x0; ///< strictly positive, A·x0 = b
};

/// LP data plus the diagonal of Q.
struct QPInstance : LPInstance
{
    RVector q;
};

struct SDPInstance
{
    int m = 0;
    int d = 0;
    std::uint64_t seed = 0;
    std::vector<SymMatrix<double>> A;
    RVector b;
    SymMatrix<double> C;
    SymMatrix<double> X0; ///< positive definite, ⟨A_i, X0⟩ = b_i
};

/// Generic hyperplane e·x = f.
struct SliceSpec
{
    RVector e;
    double f = 0.0;
};

inline int sym_dim(int m) { return m * (m + 1) / 2; }

namespace detail {

inline void check_lp_dims(int m, int d)
{
    if (d < 1 || d >= m) {
        throw std::invalid_argument("LP/QP dimensions require 1 <= d < m, got m=" + std::to_string(m) +
                                    ", d=" + std::to_string(d));
    }
}

inline RMatrix uniform_matrix(const CounterRng& rng, std::uint64_t offset, Eigen::Index rows, Eigen::Index cols,
                              double lo, double hi)
{
    RMatrix M(rows, cols);
    std::uint64_t k = offset;
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            M(i, j) = rng.uniform(k++, lo, hi);
        }
    }
    return M;
}

inline RVector uniform_vector(const CounterRng& rng, std::uint64_t offset, Eigen::Index n, double lo, double hi)
{
    RVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = rng.uniform(offset + static_cast<std::uint64_t>(i), lo, hi);
    }
    return v;
}

inline SymMatrix<double> uniform_sym(const CounterRng& rng, std::uint64_t offset, std::size_t m)
{
    SymMatrix<double> S(m);
    std::uint64_t k = offset;
    for (auto& v : S.packed()) {
        v = rng.uniform(k++, -1.0, 1.0);
    }
    return S;
}

/// G·Gᵀ + Id for uniform G.
inline SymMatrix<double> random_pd(const CounterRng& rng, std::uint64_t offset, std::size_t m)
{
    const auto n = static_cast<Eigen::Index>(m);
    RMatrix G = uniform_matrix(rng, offset, n, n, -1.0, 1.0);
    RMatrix P = G * G.transpose() + RMatrix::Identity(n, n);
    return SymMatrix<double>::from_dense(P);
}

inline int numerical_rank(const RMatrix& M, double rel_tol = 1e-10)
{
    if (M.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<RMatrix> svd(M);
    const auto& s = svd.singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > rel_tol * s(0)) {
            ++r;
        }
    }
    return r;
}

/// Gram matrix of a family of symmetric matrices under the trace inner product.
inline RMatrix trace_gram(std::span<const SymMatrix<double>> mats)
{
    const auto n = static_cast<Eigen::Index>(mats.size());
    RMatrix G(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            G(i, j) = G(j, i) = trace_inner(mats[i], mats[j]);
        }
    }
    return G;
}

inline bool linearly_independent(std::span<const SymMatrix<double>> mats)
{
    if (mats.empty()) {
        return true;
    }
    return numerical_rank(trace_gram(mats), 1e-12) == static_cast<int>(mats.size());
}

} // namespace detail

// ---------------------------------------------------------------------------
// Generators

/**
 * A uniform on [-1,1]; b = A·x0 for x0 uniform on [0.5,1.5]; c = Aᵀy0 + s0
 * with y0 uniform on [-1,1] and s0 uniform on [0.5,1.5], so the dual is
 * strictly feasible and the barrier problem has a minimizer for every λ > 0.
 */
inline LPInstance random_lp(int m, int d, std::uint64_t seed)
{
    detail::check_lp_dims(m, d);
    LPInstance lp;
    lp.m = m;
    lp.d = d;
    lp.seed = seed;
    lp.A = detail::uniform_matrix(CounterRng(seed, streams::constraint_matrix), 0, d, m, -1.0, 1.0);
    lp.x0 = detail::uniform_vector(CounterRng(seed, streams::certificate), 0, m, 0.5, 1.5);
    lp.b = lp.A * lp.x0;
    const RVector y0 = detail::uniform_vector(CounterRng(seed, streams::dual_certificate), 0, d, -1.0, 1.0);
    const RVector s0 = detail::uniform_vector(CounterRng(seed, streams::slack), 0, m, 0.5, 1.5);
    lp.c = lp.A.transpose() * y0 + s0;
    if (detail::numerical_rank(lp.A) != d) {
        throw std::runtime_error("random_lp: constraint matrix is rank deficient for seed " + std::to_string(seed));
    }
    return lp;
}

/// random_lp plus q uniform on [0.5, 1.5].
inline QPInstance random_qp(int m, int d, std::uint64_t seed)
{
    QPInstance qp;
    static_cast<LPInstance&>(qp) = random_lp(m, d, seed);
    qp.q = detail::uniform_vector(CounterRng(seed, streams::quadratic), 0, m, 0.5, 1.5);
    return qp;
}

/**
 * A_i uniform symmetric; X0 = G·Gᵀ + Id; b_i = ⟨A_i, X0⟩; C = Σ y0_i A_i + S0
 * with S0 = H·Hᵀ + Id, making both primal and dual strictly feasible.
 */
inline SDPInstance random_sdp(int m, int d, std::uint64_t seed)
{
    if (m < 1 || d < 1 || d >= sym_dim(m)) {
        throw std::invalid_argument("SDP dimensions require 1 <= d < m(m+1)/2, got m=" + std::to_string(m) +
                                    ", d=" + std::to_string(d));
    }
    SDPInstance sdp;
    sdp.m = m;
    sdp.d = d;
    sdp.seed = seed;
    const auto mm = static_cast<std::size_t>(m);
    const auto packed = static_cast<std::uint64_t>(sym_dim(m));
    const CounterRng arng(seed, streams::constraint_matrix);
    for (int i = 0; i < d; ++i) {
        sdp.A.push_back(detail::uniform_sym(arng, static_cast<std::uint64_t>(i) * packed, mm));
    }
    sdp.X0 = detail::random_pd(CounterRng(seed, streams::certificate), 0, mm);
    sdp.b.resize(d);
    for (int i = 0; i < d; ++i) {
        sdp.b(i) = trace_inner(sdp.A[i], sdp.X0);
    }
    const RVector y0 = detail::uniform_vector(CounterRng(seed, streams::dual_certificate), 0, d, -1.0, 1.0);
    sdp.C = detail::random_pd(CounterRng(seed, streams::slack), 0, mm);
    for (int i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < sdp.C.packed_size(); ++k) {
            sdp.C.packed()[k] += y0(i) * sdp.A[i].packed()[k];
        }
    }
    std::vector<SymMatrix<double>> all = sdp.A;
    all.push_back(sdp.C);
    if (!detail::linearly_independent(all)) {
        throw std::runtime_error("random_sdp: C, A_1..A_d are linearly dependent for seed " + std::to_string(seed));
    }
    return sdp;
}

inline SliceSpec random_slice(int m, std::uint64_t seed)
{
    const CounterRng rng(seed, streams::slice);
    SliceSpec s;
    s.e = detail::uniform_vector(rng, 0, m, -1.0, 1.0);
    s.f = rng.uniform(static_cast<std::uint64_t>(m), -1.0, 1.0);
    return s;
}

// ---------------------------------------------------------------------------
// Reduced KKT system on the slice

/**
 * The m cleared KKT equations after substituting x = v0 + Σ t_j v_j, in
 * variables ordered (λ, y_1..y_d, t_1..t_{m-d-1}).
 */
struct ReducedSystem
{
    int m = 0;
    int d = 0;
    std::vector<Poly> polys;
    RVector v0;
    std::vector<RVector> basis; ///< v_1..v_{m-d-1}, orthonormal
    std::vector<int> degrees;

    std::size_t size() const { return polys.size(); }
    int lambda_index() const { return 0; }
    int y_index(int k) const { return 1 + k; }
    int t_index(int j) const { return 1 + d + j; }

    /// Primal point x = v0 + Σ t_j v_j for a reduced-system point z.
    CVector primal(std::span<const cplx> z) const
    {
        CVector x = v0.cast<cplx>();
        for (std::size_t j = 0; j < basis.size(); ++j) {
            x += z[t_index(static_cast<int>(j))] * basis[j].cast<cplx>();
        }
        return x;
    }

    CVector duals(std::span<const cplx> z) const
    {
        CVector y(d);
        for (int k = 0; k < d; ++k) {
            y(k) = z[y_index(k)];
        }
        return y;
    }

    /// Coordinates that must be nonzero for a torus solution: λ, y, x.
    std::vector<cplx> torus_coordinates(std::span<const cplx> z) const
    {
        std::vector<cplx> out;
        out.reserve(static_cast<std::size_t>(1 + d + m));
        out.push_back(z[lambda_index()]);
        for (int k = 0; k < d; ++k) {
            out.push_back(z[y_index(k)]);
        }
        const CVector x = primal(z);
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            out.push_back(x(i));
        }
        return out;
    }

    /// Union of the equations' exponent vectors.
    std::vector<Monomial> support() const
    {
        std::vector<Monomial> s;
        for (const auto& p : polys) {
            for (const auto& [mono, c] : p.terms()) {
                s.push_back(mono);
            }
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }
};

namespace detail {

inline ReducedSystem reduce_impl(const LPInstance& lp, const RVector* q, const SliceSpec& slice)
{
    const int m = lp.m;
    const int d = lp.d;
    if (lp.A.rows() != d || lp.A.cols() != m || slice.e.size() != m) {
        throw std::invalid_argument("reduce: inconsistent instance or slice dimensions");
    }
    RMatrix M(d + 1, m);
    M.topRows(d) = lp.A;
    M.row(d) = slice.e.transpose();
    if (numerical_rank(M) != d + 1) {
        throw std::invalid_argument("reduce: [A; e] is rank deficient");
    }
    RVector rhs(d + 1);
    rhs.head(d) = lp.b;
    rhs(d) = slice.f;

    ReducedSystem rs;
    rs.m = m;
    rs.d = d;
    // Minimum-norm particular solution.
    rs.v0 = M.transpose() * (M * M.transpose()).ldlt().solve(rhs);
    // Null space from an unpivoted Householder QR of Mᵀ: deterministic column order.
    Eigen::HouseholderQR<RMatrix> qr(M.transpose());
    const RMatrix Q = qr.householderQ() * RMatrix::Identity(m, m);
    for (int j = d + 1; j < m; ++j) {
        rs.basis.push_back(Q.col(j));
    }

    const auto n = static_cast<std::size_t>(m);
    const Poly lambda = Poly::variable(n, 0);
    for (int i = 0; i < m; ++i) {
        Poly xi = Poly::constant(n, rs.v0(i));
        for (int j = 0; j < m - d - 1; ++j) {
            xi += Poly::variable(n, static_cast<std::size_t>(rs.t_index(j))) * cplx(rs.basis[j](i));
        }
        Poly ya(n); // y·a_i
        for (int k = 0; k < d; ++k) {
            ya += Poly::variable(n, static_cast<std::size_t>(rs.y_index(k))) * cplx(lp.A(k, i));
        }
        Poly eq = xi * cplx(lp.c(i)) - lambda - ya * xi;
        if (q != nullptr) {
            eq += (xi * xi) * cplx((*q)(i));
        }
        rs.degrees.push_back(eq.degree());
        rs.polys.push_back(std::move(eq));
    }
    return rs;
}

} // namespace detail

inline ReducedSystem reduce_lp(const LPInstance& lp, const SliceSpec& slice)
{
    return detail::reduce_impl(lp, nullptr, slice);
}

inline ReducedSystem reduce_qp(const QPInstance& qp, const SliceSpec& slice)
{
    return detail::reduce_impl(qp, &qp.q, slice);
}

// ---------------------------------------------------------------------------
// Dual lifting

struct DualLift
{
    CVector y;
    cplx lambda;
    double residual = 0.0; ///< relative least-squares residual
};

namespace detail {

inline DualLift lift_impl(std::span<const cplx> xstar, const LPInstance& lp, const RVector* q)
{
    const int m = lp.m;
    const int d = lp.d;
    if (static_cast<int>(xstar.size()) != m) {
        throw std::invalid_argument("lift_duals: x* has wrong dimension");
    }
    CMatrix M(m, d + 1);
    CVector rhs(m);
    for (int i = 0; i < m; ++i) {
        if (xstar[i] == cplx(0.0)) {
            throw std::domain_error("lift_duals: x* has a zero coordinate");
        }
        M(i, 0) = 1.0;
        for (int k = 0; k < d; ++k) {
            M(i, 1 + k) = xstar[i] * lp.A(k, i);
        }
        rhs(i) = lp.c(i) * xstar[i];
        if (q != nullptr) {
            rhs(i) += (*q)(i) * xstar[i] * xstar[i];
        }
    }
    const CVector w = M.colPivHouseholderQr().solve(rhs);
    DualLift out;
    out.lambda = w(0);
    out.y = w.tail(d);
    out.residual = (M * w - rhs).norm() / (1.0 + rhs.norm());
    return out;
}

} // namespace detail

/// Residual threshold above which a point is declared off the central curve.
inline constexpr double kLiftResidualTol = 1e-6;

/**
 * Unique (y, λ) with c_i x_i − λ − (y·a_i) x_i = 0 for all i (plus q_i x_i²
 * for QP), solved in the least-squares sense. The unchecked variant always
 * returns; the checked one throws std::domain_error when the residual shows
 * x* is not on the curve.
 */
inline DualLift lift_duals_unchecked(std::span<const cplx> xstar, const LPInstance& lp)
{
    return detail::lift_impl(xstar, lp, nullptr);
}

inline DualLift lift_duals_unchecked(std::span<const cplx> xstar, const QPInstance& qp)
{
    return detail::lift_impl(xstar, qp, &qp.q);
}

template <class Instance>
DualLift lift_duals(std::span<const cplx> xstar, const Instance& inst)
{
    DualLift r = lift_duals_unchecked(xstar, inst);
    if (r.residual > kLiftResidualTol) {
        throw std::domain_error("lift_duals: residual " + std::to_string(r.residual) +
                                " exceeds tolerance; point is not on the central curve");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Likelihood system

/**
 * F_i(z) = tr(K_i·adj K(z)) − det K(z)·⟨K_i, S⟩ for K(z) = Σ z_i K_i,
 * i = 0..d, with K_0 = C and K_i = A_i. Solutions with det K(z) ≠ 0 are
 * exactly the solutions Σ = K(z)^{-1} of ΣK = Id, Σ − S ∈ L^⊥.
 */
class MLSystem
{
public:
    MLSystem(std::vector<SymMatrix<double>> kbasis, SymMatrix<double> S)
        : kbasis_(std::move(kbasis)), S_(std::move(S))
    {
        if (kbasis_.empty()) {
            throw std::invalid_argument("MLSystem: empty basis");
        }
        m_ = static_cast<int>(kbasis_.front().dim());
        for (const auto& K : kbasis_) {
            if (static_cast<int>(K.dim()) != m_) {
                throw std::invalid_argument("MLSystem: basis matrices have different sizes");
            }
            dense_.push_back(K.dense().cast<cplx>());
            std::vector<Entry> nz;
            for (Eigen::Index c = 0; c < m_; ++c) {
                for (Eigen::Index r = 0; r < m_; ++r) {
                    const double v = K(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
                    if (v != 0.0) {
                        nz.push_back({r, c, v});
                    }
                }
            }
            sparse_.push_back(std::move(nz));
            s_.push_back(trace_inner(K, S_));
        }
    }

    int m() const { return m_; }
    std::size_t size() const { return kbasis_.size(); }
    std::vector<int> degrees() const { return std::vector<int>(size(), m_); }
    const std::vector<SymMatrix<double>>& kbasis() const { return kbasis_; }
    const SymMatrix<double>& sample_covariance() const { return S_; }

    CMatrix matrix_at(std::span<const cplx> z) const
    {
        check_point(z.size());
        CMatrix K = CMatrix::Zero(m_, m_);
        for (std::size_t i = 0; i < dense_.size(); ++i) {
            K += z[i] * dense_[i];
        }
        return K;
    }

    cplx determinant(std::span<const cplx> z) const { return detail::lu_det(matrix_at(z)); }

    CVector evaluate(std::span<const cplx> z) const
    {
        const DetAdj da = det_adj(matrix_at(z));
        CVector F(size());
        for (std::size_t i = 0; i < size(); ++i) {
            F(i) = trace_product(dense_[i], da.adj) - da.det * s_[i];
        }
        return F;
    }

    /// F and its Jacobian at z.
    void evaluate(const CVector& z, CVector& F, CMatrix& J) const
    {
        const auto n = static_cast<Eigen::Index>(size());
        check_point(static_cast<std::size_t>(z.size()));
        thread_local Workspace ws;
        ws.resize(m_, n);
        ws.K.setZero();
        for (Eigen::Index i = 0; i < n; ++i) {
            const cplx zi = z(i);
            for (const auto& e : sparse_[static_cast<std::size_t>(i)]) {
                ws.K(e.row, e.col) += zi * e.value;
            }
        }
        F.resize(n);
        J.resize(n, n);
        ws.lu.compute(ws.K);
        const cplx det = ws.lu.determinant();
        if (ws.lu.singular() || near_singular(det, max_abs(ws.K), m_)) {
            evaluate_singular(ws.K, det, F, J);
            return;
        }
        // With Σ = K^{-1} and P_j = Σ K_j: adj = det·Σ, d det[K_j] = det·tr(P_j),
        // d adj[K_j] = det·(tr(P_j) Σ − P_j Σ), so tr(K_i d adj[K_j]) = det·(g_i g_j − tr(P_i P_j)).
        ws.lu.inverse(ws.sigma);
        const Eigen::Index m = m_;
        for (Eigen::Index j = 0; j < n; ++j) {
            CMatrix& P = ws.P[static_cast<std::size_t>(j)];
            P.setZero();
            for (const auto& e : sparse_[static_cast<std::size_t>(j)]) {
                cplx* dst = &P(0, e.col);
                const cplx* src = &ws.sigma(0, e.row);
                for (Eigen::Index r = 0; r < m; ++r) {
                    dst[r] += src[r] * e.value;
                }
            }
            ws.g(j) = P.trace();
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            const cplx ri = ws.g(i) - s_[static_cast<std::size_t>(i)];
            F(i) = fast_mul(det, ri);
            const CMatrix& Pi = ws.P[static_cast<std::size_t>(i)];
            for (Eigen::Index j = i; j < n; ++j) {
                const CMatrix& Pj = ws.P[static_cast<std::size_t>(j)];
                double re = 0.0;
                double im = 0.0;
                for (Eigen::Index c = 0; c < m; ++c) {
                    const cplx* pic = &Pi(0, c);
                    for (Eigen::Index r = 0; r < m; ++r) {
                        const cplx b = Pj(c, r);
                        re += pic[r].real() * b.real() - pic[r].imag() * b.imag();
                        im += pic[r].real() * b.imag() + pic[r].imag() * b.real();
                    }
                }
                const cplx tij(re, im);
                J(i, j) = fast_mul(det, fast_mul(ws.g(j), ri) - tij);
                if (j != i) {
                    J(j, i) = fast_mul(det, fast_mul(ws.g(i), ws.g(j) - s_[static_cast<std::size_t>(j)]) - tij);
                }
            }
        }
    }

    /// Per-equation magnitude Σ|K_i||adj| + |det||s_i| used to scale residuals.
    void residual_scale(const CVector& z, RVector& scale) const
    {
        const DetAdj da = det_adj(matrix_at(as_span(z)));
        scale.resize(static_cast<Eigen::Index>(size()));
        const RMatrix adj_abs = da.adj.cwiseAbs();
        for (std::size_t i = 0; i < size(); ++i) {
            scale(i) = (dense_[i].cwiseAbs().cwiseProduct(adj_abs)).sum() + std::abs(da.det) * std::abs(s_[i]);
        }
    }

    /// Σ = K(z)^{-1}, the covariance estimate a solution z encodes.
    CMatrix covariance(std::span<const cplx> z) const { return matrix_at(z).inverse(); }

private:
    struct Workspace
    {
        CMatrix K, sigma;
        SmallLU lu;
        std::vector<CMatrix> P;
        CVector g;

        void resize(Eigen::Index m, Eigen::Index n)
        {
            if (K.rows() != m || static_cast<Eigen::Index>(P.size()) != n) {
                K.resize(m, m);
                sigma.resize(m, m);
                P.assign(static_cast<std::size_t>(n), CMatrix(m, m));
                g.resize(n);
            }
        }
    };

    static cplx trace_product(const CMatrix& A, const CMatrix& B)
    {
        // tr(AB) for symmetric A.
        return A.cwiseProduct(B).sum();
    }

    void check_point(std::size_t n) const
    {
        if (n != size()) {
            throw std::invalid_argument("MLSystem: point has wrong dimension");
        }
    }

    /// Jacobian from derivatives of the (m-1)-minors; no division by det.
    void evaluate_singular(const CMatrix& K, cplx det, CVector& F, CMatrix& J) const
    {
        const auto n = static_cast<Eigen::Index>(size());
        const CMatrix adj = cofactor_adjugate(K);
        for (Eigen::Index i = 0; i < n; ++i) {
            F(i) = trace_product(dense_[i], adj) - det * s_[i];
        }
        std::vector<CMatrix> dadj(size(), CMatrix::Zero(m_, m_));
        if (m_ > 1) {
            for (Eigen::Index a = 0; a < m_; ++a) {
                for (Eigen::Index b = 0; b < m_; ++b) {
                    const double sign = ((a + b) % 2 == 0) ? 1.0 : -1.0;
                    const CMatrix minor_adj = det_adj(detail::minor_without(K, b, a)).adj;
                    for (Eigen::Index j = 0; j < n; ++j) {
                        const CMatrix E = detail::minor_without(dense_[j], b, a);
                        dadj[j](a, b) = sign * minor_adj.cwiseProduct(E.transpose()).sum();
                    }
                }
            }
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const cplx ddet = adj.cwiseProduct(dense_[j].transpose()).sum();
            for (Eigen::Index i = 0; i < n; ++i) {
                J(i, j) = trace_product(dense_[i], dadj[j]) - ddet * s_[i];
            }
        }
    }

    std::vector<SymMatrix<double>> kbasis_;
    SymMatrix<double> S_;
    int m_ = 0;
    struct Entry
    {
        Eigen::Index row;
        Eigen::Index col;
        double value;
    };

    std::vector<CMatrix> dense_;
    std::vector<std::vector<Entry>> sparse_;
    std::vector<cplx> s_;
};

/**
 * Likelihood system for L = span{C, A_1..A_d}. S is the minimum-norm
 * symmetric matrix with ⟨C,S⟩ = b_{d+1} and ⟨A_i,S⟩ = b_i, where b_{d+1} is
 * drawn from the seed (the slice ⟨C, X⟩ = b_{d+1}).
 */
inline MLSystem build_ml_system(const SymMatrix<double>& C, std::span<const SymMatrix<double>> A,
                                const RVector& b, std::uint64_t seed)
{
    const auto d = static_cast<Eigen::Index>(A.size());
    if (d < 1) {
        throw std::invalid_argument("build_ml_system: need at least one constraint matrix");
    }
    if (b.size() != d) {
        throw std::invalid_argument("build_ml_system: b has wrong length");
    }
    if (C.dim() < 2) {
        throw std::invalid_argument("build_ml_system: matrix size must be at least 2");
    }
    std::vector<SymMatrix<double>> kbasis;
    kbasis.push_back(C);
    kbasis.insert(kbasis.end(), A.begin(), A.end());
    if (!detail::linearly_independent(kbasis)) {
        throw std::invalid_argument("build_ml_system: C, A_1..A_d are linearly dependent");
    }
    RVector beta(d + 1);
    beta(0) = CounterRng(seed, streams::sample_covariance).uniform(0, -1.0, 1.0);
    beta.tail(d) = b;
    const RMatrix G = detail::trace_gram(kbasis);
    const RVector mu = G.ldlt().solve(beta);
    SymMatrix<double> S(C.dim());
    for (std::size_t k = 0; k < kbasis.size(); ++k) {
        for (std::size_t p = 0; p < S.packed_size(); ++p) {
            S.packed()[p] += mu(static_cast<Eigen::Index>(k)) * kbasis[k].packed()[p];
        }
    }
    return MLSystem(std::move(kbasis), std::move(S));
}

inline MLSystem build_ml_system(const SDPInstance& sdp, std::uint64_t seed)
{
    return build_ml_system(sdp.C, sdp.A, sdp.b, seed);
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline nlohmann::json matrix_json(const RMatrix& M)
{
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            row.push_back(M(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RMatrix matrix_from_json(const nlohmann::json& j)
{
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
    RMatrix M(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(j.at(i).size()) != cols) {
            throw std::invalid_argument("ragged matrix in JSON");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            M(i, k) = j.at(i).at(k).get<double>();
        }
    }
    return M;
}

inline nlohmann::json vector_json(const RVector& v)
{
    return nlohmann::json(std::vector<double>(v.data(), v.data() + v.size()));
}

inline RVector vector_from_json(const nlohmann::json& j)
{
    const auto v = j.get<std::vector<double>>();
    return Eigen::Map<const RVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline nlohmann::json sym_json(const SymMatrix<double>& S) { return matrix_json(S.dense()); }

inline SymMatrix<double> sym_from_json(const nlohmann::json& j)
{
    const RMatrix M = matrix_from_json(j);
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("symmetric matrix in JSON is not square");
    }
    SymMatrix<double> S(static_cast<std::size_t>(M.rows()));
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index k = i; k < M.cols(); ++k) {
            if (M(i, k) != M(k, i)) {
                throw std::invalid_argument("matrix in JSON is not symmetric");
            }
            S(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = M(i, k);
        }
    }
    return S;
}

inline void lp_fields_from_json(const nlohmann::json& j, LPInstance& lp)
{
    lp.m = j.at("m").get<int>();
    lp.d = j.at("d").get<int>();
    lp.seed = j.at("seed").get<std::uint64_t>();
    lp.A = matrix_from_json(j.at("A"));
    lp.b = vector_from_json(j.at("b"));
    lp.c = vector_from_json(j.at("c"));
    lp.x0 = vector_from_json(j.at("certificate"));
    if (lp.A.rows() != lp.d || lp.A.cols() != lp.m || lp.b.size() != lp.d || lp.c.size() != lp.m ||
        lp.x0.size() != lp.m) {
        throw std::invalid_argument("instance JSON has inconsistent dimensions");
    }
}

} // namespace detail

inline nlohmann::json to_json(const LPInstance& lp)
{
    return {{"family", "lp"},
            {"m", lp.m},
            {"d", lp.d},
            {"seed", lp.seed},
            {"A", detail::matrix_json(lp.A)},
            {"b", detail::vector_json(lp.b)},
            {"c", detail::vector_json(lp.c)},
            {"certificate", detail::vector_json(lp.x0)}};
}

inline nlohmann::json to_json(const QPInstance& qp)
{
    nlohmann::json j = to_json(static_cast<const LPInstance&>(qp));
    j["family"] = "qp";
    j["q"] = detail::vector_json(qp.q);
    return j;
}

inline nlohmann::json to_json(const SDPInstance& sdp)
{
    nlohmann::json A = nlohmann::json::array();
    for (const auto& Ai : sdp.A) {
        A.push_back(detail::sym_json(Ai));
    }
    return {{"family", "sdp"},
            {"m", sdp.m},
            {"d", sdp.d},
            {"seed", sdp.seed},
            {"A", std::move(A)},
            {"b", detail::vector_json(sdp.b)},
            {"C", detail::sym_json(sdp.C)},
            {"certificate", detail::sym_json(sdp.X0)}};
}

inline LPInstance lp_from_json(const nlohmann::json& j)
{
    if (j.at("family") != "lp") {
        throw std::invalid_argument("expected an lp instance");
    }
    LPInstance lp;
    detail::lp_fields_from_json(j, lp);
    return lp;
}

inline QPInstance qp_from_json(const nlohmann::json& j)
{
    if (j.at("family") != "qp") {
        throw std::invalid_argument("expected a qp instance");
    }
    QPInstance qp;
    detail::lp_fields_from_json(j, qp);
    qp.q = detail::vector_from_json(j.at("q"));
    if (qp.q.size() != qp.m) {
        throw std::invalid_argument("instance JSON has inconsistent dimensions");
    }
    return qp;
}

inline SDPInstance sdp_from_json(const nlohmann::json& j)
{
    if (j.at("family") != "sdp") {
        throw std::invalid_argument("expected an sdp instance");
    }
    SDPInstance sdp;
    sdp.m = j.at("m").get<int>();
    sdp.d = j.at("d").get<int>();
    sdp.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& Ai : j.at("A")) {
        sdp.A.push_back(detail::sym_from_json(Ai));
    }
    sdp.b = detail::vector_from_json(j.at("b"));
    sdp.C = detail::sym_from_json(j.at("C"));
    sdp.X0 = detail::sym_from_json(j.at("certificate"));
    if (static_cast<int>(sdp.A.size()) != sdp.d || sdp.b.size() != sdp.d ||
        static_cast<int>(sdp.C.dim()) != sdp.m) {
        throw std::invalid_argument("instance JSON has inconsistent dimensions");
    }
    return sdp;
}

} // namespace centraldeg
