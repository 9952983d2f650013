#pragma once

/**
 * Follows the central path of LP, QP and SDP instances: for a geometric
 * schedule of barrier weights λ, solves the barrier KKT system by damped
 * Newton, warm-started from the previous sample.
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "instances.hpp"

namespace centraldeg {

struct ScheduleConfig
{
    double lambda_start = 1.0;
    double sigma = 0.5;
    int n_steps = 30;
    double newton_tol = 1e-10;
    int newton_max_iters = 50;
    int max_halvings = 30;

    void validate() const
    {
        if (!(lambda_start > 0.0) || !std::isfinite(lambda_start)) {
            throw std::invalid_argument("ScheduleConfig: lambda_start must be positive");
        }
        if (!(sigma > 0.0 && sigma < 1.0)) {
            throw std::invalid_argument("ScheduleConfig: sigma must lie in (0,1)");
        }
        if (n_steps < 1) {
            throw std::invalid_argument("ScheduleConfig: need at least one step");
        }
        if (!(newton_tol > 0.0) || newton_max_iters < 1 || max_halvings < 0) {
            throw std::invalid_argument("ScheduleConfig: invalid Newton settings");
        }
    }
};

struct PathSample
{
    double lambda = 0.0;
    std::variant<RVector, SymMatrix<double>> primal;
    RVector y;
    double kkt_residual = 0.0;

    /// Primal coordinates in CSV order: x_1..x_m, or the packed upper triangle of X.
    std::vector<double> primal_coordinates() const
    {
        if (const auto* x = std::get_if<RVector>(&primal)) {
            return {x->data(), x->data() + x->size()};
        }
        const auto& X = std::get<SymMatrix<double>>(primal);
        return X.packed();
    }
};

/// 17 significant digits: enough for a bit-exact round trip through strtod.
inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_lambda(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Trace
{
    std::vector<PathSample> samples;
    bool ok = true;
    std::string error;
};

namespace detail {

/// Largest merit accepted when the tolerance is below what double precision can resolve.
inline double attainable(double scale, double lambda)
{
    return 1e3 * std::numeric_limits<double>::epsilon() * scale / lambda;
}

struct LPState
{
    RVector x;
    RVector y;
};

/**
 * Scaled KKT residual of the barrier problem: max_i |x_i s_i/λ − 1| with
 * s = c + Qx − Aᵀy, together with ‖Ax − b‖∞/(1 + ‖b‖∞).
 */
inline double lp_merit(const LPInstance& lp, const RVector* q, const RVector& x, const RVector& y, double lambda)
{
    RVector s = lp.c - lp.A.transpose() * y;
    if (q) {
        s += q->cwiseProduct(x);
    }
    const double comp = (x.cwiseProduct(s).array() / lambda - 1.0).abs().maxCoeff();
    const double pr = (lp.A * x - lp.b).lpNorm<Eigen::Infinity>() / (1.0 + lp.b.lpNorm<Eigen::Infinity>());
    return std::max(comp, pr);
}

/// Size of the terms whose cancellation limits the accuracy of lp_merit.
inline double lp_scale(const LPInstance& lp, const RVector* q, const RVector& x, const RVector& y)
{
    double s = lp.c.lpNorm<Eigen::Infinity>() + (lp.A.transpose() * y).lpNorm<Eigen::Infinity>();
    if (q) {
        s += q->cwiseProduct(x).lpNorm<Eigen::Infinity>();
    }
    return s * x.lpNorm<Eigen::Infinity>();
}

/// Newton on x∘(c + Qx − Aᵀy) = λ, Ax = b in the unknowns (x, y).
inline Trace trace_lp_impl(const LPInstance& lp, const RVector* q, const ScheduleConfig& sched)
{
    sched.validate();
    const Eigen::Index m = lp.m;
    const Eigen::Index d = lp.d;
    if (lp.x0.size() != m || (lp.x0.array() <= 0.0).any()) {
        throw std::invalid_argument("trace: instance lacks a strictly positive certificate");
    }
    RVector x = lp.x0;
    RVector grad = lp.c - (sched.lambda_start * x.cwiseInverse());
    if (q) {
        grad += q->cwiseProduct(x);
    }
    RVector y = (lp.A * lp.A.transpose()).ldlt().solve(lp.A * grad);

    Trace out;
    double lambda = sched.lambda_start;
    RMatrix J(m + d, m + d);
    RVector rhs(m + d);
    for (int k = 0; k < sched.n_steps; ++k, lambda *= sched.sigma) {
        double merit = lp_merit(lp, q, x, y, lambda);
        for (int it = 0; it < sched.newton_max_iters && merit >= sched.newton_tol; ++it) {
            RVector s = lp.c - lp.A.transpose() * y;
            if (q) {
                s += q->cwiseProduct(x);
            }
            J.setZero();
            for (Eigen::Index i = 0; i < m; ++i) {
                J(i, i) = s(i) + (q ? x(i) * (*q)(i) : 0.0);
                for (Eigen::Index j = 0; j < d; ++j) {
                    J(i, m + j) = -x(i) * lp.A(j, i);
                }
            }
            J.bottomLeftCorner(d, m) = lp.A;
            rhs.head(m) = (lambda - x.cwiseProduct(s).array()).matrix();
            rhs.tail(d) = lp.b - lp.A * x;
            const RVector step = J.partialPivLu().solve(rhs);

            double alpha = 1.0;
            bool accepted = false;
            for (int h = 0; h <= sched.max_halvings; ++h, alpha *= 0.5) {
                const RVector xt = x + alpha * step.head(m);
                if ((xt.array() <= 0.0).any()) {
                    continue;
                }
                const RVector yt = y + alpha * step.tail(d);
                const double mt = lp_merit(lp, q, xt, yt, lambda);
                if (mt < merit) {
                    x = xt;
                    y = yt;
                    merit = mt;
                    accepted = true;
                    break;
                }
            }
            if (!accepted) {
                break;
            }
        }
        if (!(merit < std::max(sched.newton_tol, attainable(lp_scale(lp, q, x, y), lambda)))) {
            out.ok = false;
            out.error = "Newton did not converge at lambda=" + format_lambda(lambda);
            return out;
        }
        out.samples.push_back({lambda, x, y, merit});
    }
    return out;
}

/// Multipliers minimizing ‖X^{1/2}(C − λX^{-1} − Σ y_i A_i)X^{1/2}‖_F.
inline RVector sdp_multipliers(const RMatrix& C, const std::vector<RMatrix>& A, const RMatrix& X, double lambda)
{
    const auto d = static_cast<Eigen::Index>(A.size());
    RMatrix M(d, d);
    RVector rhs(d);
    const RMatrix XCX = X * C * X;
    std::vector<RMatrix> XAX;
    for (const auto& Ai : A) {
        XAX.push_back(X * Ai * X);
    }
    for (Eigen::Index j = 0; j < d; ++j) {
        const auto& Aj = A[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < d; ++i) {
            M(j, i) = Aj.cwiseProduct(XAX[static_cast<std::size_t>(i)]).sum();
        }
        rhs(j) = Aj.cwiseProduct(XCX).sum() - lambda * Aj.cwiseProduct(X).sum();
    }
    return M.ldlt().solve(rhs);
}

inline RMatrix dual_slack(const RMatrix& C, const std::vector<RMatrix>& A, const RVector& y)
{
    RMatrix S = C;
    for (std::size_t i = 0; i < A.size(); ++i) {
        S -= y(static_cast<Eigen::Index>(i)) * A[i];
    }
    return S;
}

/// ‖C − λX^{-1} − Σ y_i A_i‖_F together with max_i |⟨A_i,X⟩ − b_i|/(1 + ‖b‖∞).
inline double sdp_merit(const RMatrix& C, const std::vector<RMatrix>& A, const RVector& b, const RMatrix& X,
                        const RVector& y, double lambda)
{
    const RMatrix Xinv = X.llt().solve(RMatrix::Identity(X.rows(), X.cols()));
    const double stationarity = (dual_slack(C, A, y) - lambda * Xinv).norm();
    double pr = 0.0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        pr = std::max(pr, std::abs(A[i].cwiseProduct(X).sum() - b(static_cast<Eigen::Index>(i))));
    }
    return std::max(stationarity, pr / (1.0 + b.lpNorm<Eigen::Infinity>()));
}

/// Rounding floor of sdp_merit: forming λX^{-1} loses a factor cond(X).
inline double sdp_floor(const RMatrix& C, const RMatrix& X)
{
    Eigen::SelfAdjointEigenSolver<RMatrix> es(X, Eigen::EigenvaluesOnly);
    const double cond = es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();
    return 1e3 * std::numeric_limits<double>::epsilon() * cond * (1.0 + C.norm());
}

/**
 * Restores ⟨A_i,X⟩ = b_i after a Newton step by X ← X + X(Σ u_i A_i)X. The
 * correction is scaled by X so it barely moves λX^{-1}, unlike a Euclidean
 * projection.
 */
inline RMatrix restore_feasibility(const std::vector<RMatrix>& A, const RVector& b, RMatrix X)
{
    const auto d = static_cast<Eigen::Index>(A.size());
    RVector r(d);
    std::vector<RMatrix> XAX;
    for (Eigen::Index i = 0; i < d; ++i) {
        const auto& Ai = A[static_cast<std::size_t>(i)];
        r(i) = b(i) - Ai.cwiseProduct(X).sum();
        XAX.push_back(X * Ai * X);
    }
    RMatrix M(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            M(j, i) = A[static_cast<std::size_t>(j)].cwiseProduct(XAX[static_cast<std::size_t>(i)]).sum();
        }
    }
    const RVector u = M.ldlt().solve(r);
    for (Eigen::Index i = 0; i < d; ++i) {
        X += u(i) * XAX[static_cast<std::size_t>(i)];
    }
    return X;
}

inline bool positive_definite(const RMatrix& X)
{
    Eigen::LLT<RMatrix> llt(X);
    return llt.info() == Eigen::Success;
}

} // namespace detail

/// Central path of an LP: samples at λ_k = λ_start·σ^k, k = 0..n_steps−1.
inline Trace trace_lp(const LPInstance& lp, const ScheduleConfig& sched = {})
{
    return detail::trace_lp_impl(lp, nullptr, sched);
}

/// Central path of a QP with objective ½xᵀQx + cᵀx.
inline Trace trace_qp(const QPInstance& qp, const ScheduleConfig& sched = {})
{
    return detail::trace_lp_impl(qp, &qp.q, sched);
}

/**
 * Central path of an SDP: Newton on ⟨C,X⟩ − λ log det X over the affine
 * slice ⟨A_i,X⟩ = b_i, backtracking until X stays positive definite and the
 * KKT residual drops.
 */
inline Trace trace_sdp(const SDPInstance& sdp, const ScheduleConfig& sched = {})
{
    sched.validate();
    const RMatrix C = sdp.C.dense();
    std::vector<RMatrix> A;
    for (const auto& Ai : sdp.A) {
        A.push_back(Ai.dense());
    }
    RMatrix X = sdp.X0.dense();
    if (!detail::positive_definite(X)) {
        throw std::invalid_argument("trace_sdp: instance lacks a positive definite certificate");
    }
    const auto d = static_cast<Eigen::Index>(A.size());

    Trace out;
    double lambda = sched.lambda_start;
    for (int k = 0; k < sched.n_steps; ++k, lambda *= sched.sigma) {
        RVector y = detail::sdp_multipliers(C, A, X, lambda);
        double merit = detail::sdp_merit(C, A, sdp.b, X, y, lambda);
        for (int it = 0; it < sched.newton_max_iters && merit >= sched.newton_tol; ++it) {
            // Newton step of the barrier problem on the slice: ΔX = X − X S(w) X / λ with
            // multipliers w from M w = λ(b − 2⟨A_j,X⟩) + ⟨A_j, XCX⟩, M_ji = ⟨A_j, X A_i X⟩.
            const RMatrix XCX = X * C * X;
            RMatrix M(d, d);
            RVector rhs(d);
            std::vector<RMatrix> XAX;
            for (const auto& Ai : A) {
                XAX.push_back(X * Ai * X);
            }
            for (Eigen::Index j = 0; j < d; ++j) {
                const auto& Aj = A[static_cast<std::size_t>(j)];
                for (Eigen::Index i = 0; i < d; ++i) {
                    M(j, i) = Aj.cwiseProduct(XAX[static_cast<std::size_t>(i)]).sum();
                }
                rhs(j) = lambda * (sdp.b(j) - 2.0 * Aj.cwiseProduct(X).sum()) + Aj.cwiseProduct(XCX).sum();
            }
            const RVector w = M.ldlt().solve(rhs);
            const RMatrix S = detail::dual_slack(C, A, w);
            RMatrix dX = X - X * S * X / lambda;
            dX = 0.5 * (dX + dX.transpose()).eval();

            double alpha = 1.0;
            bool accepted = false;
            for (int h = 0; h <= sched.max_halvings; ++h, alpha *= 0.5) {
                const RMatrix Xt = detail::restore_feasibility(A, sdp.b, X + alpha * dX);
                if (!detail::positive_definite(Xt)) {
                    continue;
                }
                const RVector yt = detail::sdp_multipliers(C, A, Xt, lambda);
                const double mt = detail::sdp_merit(C, A, sdp.b, Xt, yt, lambda);
                if (mt < merit) {
                    X = Xt;
                    y = yt;
                    merit = mt;
                    accepted = true;
                    break;
                }
            }
            if (!accepted) {
                break;
            }
        }
        if (!(merit < std::max(sched.newton_tol, detail::sdp_floor(C, X)))) {
            out.ok = false;
            out.error = "Newton did not converge at lambda=" + format_lambda(lambda);
            return out;
        }
        out.samples.push_back({lambda, SymMatrix<double>::from_dense(X), y, merit});
    }
    return out;
}

/// Measured invariants of a trace.
struct PathCheck
{
    double max_complementarity = 0.0; ///< max over samples of ‖x∘s − λ‖∞/λ, or ‖C − λX^{-1} − Σ y_i A_i‖_F
    double max_gap_error = 0.0;       ///< max |gap/(mλ) − 1|
    double max_primal_residual = 0.0;
    double max_kkt_residual = 0.0;
    bool strictly_feasible = true;
    bool lambda_decreasing = true;
    bool objective_monotone = true;

    nlohmann::ordered_json to_json() const
    {
        return {{"max_complementarity", max_complementarity},
                {"max_gap_error", max_gap_error},
                {"max_primal_residual", max_primal_residual},
                {"max_kkt_residual", max_kkt_residual},
                {"strictly_feasible", strictly_feasible},
                {"lambda_decreasing", lambda_decreasing},
                {"objective_monotone", objective_monotone}};
    }
};

namespace detail {

inline void check_order(const std::vector<PathSample>& samples, const std::vector<double>& objective,
                        PathCheck& pc)
{
    for (std::size_t k = 1; k < samples.size(); ++k) {
        if (!(samples[k].lambda < samples[k - 1].lambda)) {
            pc.lambda_decreasing = false;
        }
        const double scale = 1.0 + std::abs(objective[k - 1]);
        if (objective[k] > objective[k - 1] + 1e-8 * scale) {
            pc.objective_monotone = false;
        }
    }
}

inline PathCheck check_lp_like(const LPInstance& lp, const RVector* q, const std::vector<PathSample>& samples)
{
    PathCheck pc;
    std::vector<double> objective;
    for (const auto& s : samples) {
        const auto& x = std::get<RVector>(s.primal);
        RVector slack = lp.c - lp.A.transpose() * s.y;
        double obj = lp.c.dot(x);
        if (q) {
            slack += q->cwiseProduct(x);
            obj += 0.5 * x.dot(q->cwiseProduct(x));
        }
        objective.push_back(obj);
        const RVector comp = x.cwiseProduct(slack);
        pc.max_complementarity = std::max(pc.max_complementarity, (comp.array() - s.lambda).abs().maxCoeff() / s.lambda);
        pc.max_gap_error = std::max(pc.max_gap_error, std::abs(comp.sum() / (lp.m * s.lambda) - 1.0));
        pc.max_primal_residual = std::max(pc.max_primal_residual, (lp.A * x - lp.b).lpNorm<Eigen::Infinity>());
        pc.max_kkt_residual = std::max(pc.max_kkt_residual, s.kkt_residual);
        if ((x.array() <= 0.0).any()) {
            pc.strictly_feasible = false;
        }
    }
    check_order(samples, objective, pc);
    return pc;
}

} // namespace detail

inline PathCheck check_path(const LPInstance& lp, const std::vector<PathSample>& samples)
{
    return detail::check_lp_like(lp, nullptr, samples);
}

inline PathCheck check_path(const QPInstance& qp, const std::vector<PathSample>& samples)
{
    return detail::check_lp_like(qp, &qp.q, samples);
}

inline PathCheck check_path(const SDPInstance& sdp, const std::vector<PathSample>& samples)
{
    PathCheck pc;
    const RMatrix C = sdp.C.dense();
    std::vector<double> objective;
    for (const auto& s : samples) {
        const RMatrix X = std::get<SymMatrix<double>>(s.primal).dense();
        RMatrix S = C;
        for (std::size_t i = 0; i < sdp.A.size(); ++i) {
            S -= s.y(static_cast<Eigen::Index>(i)) * sdp.A[i].dense();
        }
        objective.push_back(C.cwiseProduct(X).sum());
        const RMatrix XS = X * S;
        const RMatrix Xinv = X.llt().solve(RMatrix::Identity(X.rows(), X.cols()));
        pc.max_complementarity = std::max(pc.max_complementarity, (S - s.lambda * Xinv).norm());
        pc.max_gap_error = std::max(pc.max_gap_error, std::abs(XS.trace() / (sdp.m * s.lambda) - 1.0));
        for (std::size_t i = 0; i < sdp.A.size(); ++i) {
            const double r = std::abs(trace_inner(sdp.A[i], std::get<SymMatrix<double>>(s.primal)) -
                                      sdp.b(static_cast<Eigen::Index>(i)));
            pc.max_primal_residual = std::max(pc.max_primal_residual, r);
        }
        pc.max_kkt_residual = std::max(pc.max_kkt_residual, s.kkt_residual);
        if (!detail::positive_definite(X)) {
            pc.strictly_feasible = false;
        }
    }
    detail::check_order(samples, objective, pc);
    return pc;
}

/// CSV text with header lambda,<primal>,<dual>,residual.
inline std::string samples_csv(const std::vector<PathSample>& samples)
{
    if (samples.empty()) {
        throw std::invalid_argument("emit_csv: no samples");
    }
    std::string out = "lambda";
    const auto& first = samples.front();
    if (const auto* x = std::get_if<RVector>(&first.primal)) {
        for (Eigen::Index i = 0; i < x->size(); ++i) {
            out += ",x" + std::to_string(i + 1);
        }
    } else {
        const auto m = std::get<SymMatrix<double>>(first.primal).dim();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                out += ",x" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            }
        }
    }
    for (Eigen::Index i = 0; i < first.y.size(); ++i) {
        out += ",y" + std::to_string(i + 1);
    }
    out += ",residual\n";
    for (const auto& s : samples) {
        out += format_double(s.lambda);
        for (double v : s.primal_coordinates()) {
            out += "," + format_double(v);
        }
        for (Eigen::Index i = 0; i < s.y.size(); ++i) {
            out += "," + format_double(s.y(i));
        }
        out += "," + format_double(s.kkt_residual) + "\n";
    }
    return out;
}

inline void emit_csv(const std::vector<PathSample>& samples, const std::string& path)
{
    const std::string text = samples_csv(samples);
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("emit_csv: cannot open " + path);
    }
    f << text;
    if (!f) {
        throw std::runtime_error("emit_csv: write failed for " + path);
    }
}

} // namespace centraldeg
