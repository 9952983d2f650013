#pragma once

/**
 * Total-degree homotopy continuation with the gamma trick. Counts the
 * isolated solutions of a square system that survive a torus/nondegeneracy
 * filter and requires every tracker seed to agree on the count.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "algebra.hpp"
#include "instances.hpp"
#include "rng.hpp"

namespace centraldeg {

/// Anything the tracker can follow: F and its Jacobian at a point, plus per-equation residual scales.
template <class S>
concept EvaluableSystem = requires(const S& s, const CVector& z, CVector& F, CMatrix& J, RVector& scale) {
    { s.size() } -> std::convertible_to<std::size_t>;
    { s.degrees() } -> std::convertible_to<std::vector<int>>;
    s.evaluate(z, F, J);
    s.residual_scale(z, scale);
};

struct TrackerConfig
{
    double step_init = 0.1;
    double step_min = 1e-7;
    double corrector_tol = 1e-10;
    int corrector_max_iters = 3;
    double divergence_radius = 1e10;
    int endpoint_newton_iters = 20;
    double dedup_tol = 1e-6;
    double torus_tol = 1e-8;
    double det_tol = 1e-8;
    std::vector<std::uint64_t> seeds{1, 2, 3};
    /// A path that stalls with |z| above this is reported as diverging rather than failed.
    double stall_infinity_norm = 1e4;
    /// Refuse systems whose Bezout number exceeds this many paths per seed.
    std::uint64_t max_paths = std::uint64_t{1} << 17;
    /// Worker threads; 0 uses the hardware concurrency.
    unsigned threads = 0;

    void validate() const
    {
        if (!(step_init > 0 && step_min > 0 && corrector_tol > 0 && divergence_radius > 0 && dedup_tol >= 0 &&
              torus_tol > 0 && det_tol > 0 && stall_infinity_norm > 0)) {
            throw std::invalid_argument("TrackerConfig: tolerances must be positive");
        }
        if (corrector_max_iters < 1 || endpoint_newton_iters < 0) {
            throw std::invalid_argument("TrackerConfig: iteration counts out of range");
        }
        if (seeds.empty()) {
            throw std::invalid_argument("TrackerConfig: at least one seed is required");
        }
    }

    nlohmann::json to_json() const
    {
        return {{"step_init", step_init},
                {"step_min", step_min},
                {"corrector_tol", corrector_tol},
                {"corrector_max_iters", corrector_max_iters},
                {"divergence_radius", divergence_radius},
                {"endpoint_newton_iters", endpoint_newton_iters},
                {"dedup_tol", dedup_tol},
                {"torus_tol", torus_tol},
                {"det_tol", det_tol},
                {"seeds", seeds}};
    }
};

class BudgetExceeded : public std::runtime_error
{
public:
    BudgetExceeded(std::uint64_t paths, std::uint64_t budget)
        : std::runtime_error("total-degree homotopy needs " + std::to_string(paths) + " paths per seed, budget is " +
                             std::to_string(budget)),
          paths_(paths)
    {}
    std::uint64_t paths() const { return paths_; }

private:
    std::uint64_t paths_;
};

// ---------------------------------------------------------------------------
// Polynomial systems

/// Square system of Poly equations compiled into flat term lists.
class PolySystem
{
public:
    explicit PolySystem(std::vector<Poly> polys, std::vector<int> degrees = {})
        : polys_(std::move(polys)), degrees_(std::move(degrees))
    {
        n_ = polys_.size();
        for (const auto& p : polys_) {
            if (p.nvars() != n_) {
                throw std::invalid_argument("PolySystem: system is not square");
            }
        }
        if (degrees_.empty()) {
            for (const auto& p : polys_) {
                degrees_.push_back(std::max(1, p.degree()));
            }
        }
        if (degrees_.size() != n_) {
            throw std::invalid_argument("PolySystem: wrong number of degrees");
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (polys_[i].degree() > degrees_[i]) {
                throw std::invalid_argument("PolySystem: declared degree below actual degree");
            }
            max_degree_ = std::max(max_degree_, degrees_[i]);
        }
        for (const auto& p : polys_) {
            eqs_.push_back(compile(p));
            std::vector<std::vector<Term>> row;
            for (std::size_t j = 0; j < n_; ++j) {
                row.push_back(compile(p.differentiate(j)));
            }
            jac_.push_back(std::move(row));
        }
    }

    std::size_t size() const { return n_; }
    std::vector<int> degrees() const { return degrees_; }
    const std::vector<Poly>& polys() const { return polys_; }

    void evaluate(const CVector& z, CVector& F, CMatrix& J) const
    {
        check(z);
        const auto pw = powers(z);
        const auto n = static_cast<Eigen::Index>(n_);
        F.resize(n);
        J.resize(n, n);
        for (std::size_t i = 0; i < n_; ++i) {
            F(static_cast<Eigen::Index>(i)) = sum(eqs_[i], pw);
            for (std::size_t j = 0; j < n_; ++j) {
                J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum(jac_[i][j], pw);
            }
        }
    }

    CVector evaluate(const CVector& z) const
    {
        check(z);
        const auto pw = powers(z);
        CVector F(static_cast<Eigen::Index>(n_));
        for (std::size_t i = 0; i < n_; ++i) {
            F(static_cast<Eigen::Index>(i)) = sum(eqs_[i], pw);
        }
        return F;
    }

    void residual_scale(const CVector& z, RVector& scale) const
    {
        check(z);
        scale.resize(static_cast<Eigen::Index>(n_));
        for (std::size_t i = 0; i < n_; ++i) {
            scale(static_cast<Eigen::Index>(i)) = polys_[i].magnitude(as_span(z));
        }
    }

private:
    struct Term
    {
        cplx coef;
        std::vector<int> exps;
    };

    static std::vector<Term> compile(const Poly& p)
    {
        std::vector<Term> out;
        for (const auto& [mono, c] : p.terms()) {
            out.push_back({c, mono.exponents});
        }
        return out;
    }

    void check(const CVector& z) const
    {
        if (static_cast<std::size_t>(z.size()) != n_) {
            throw std::invalid_argument("PolySystem: point has wrong dimension");
        }
    }

    /// pw[j*(D+1) + k] = z_j^k.
    std::vector<cplx> powers(const CVector& z) const
    {
        const auto stride = static_cast<std::size_t>(max_degree_ + 1);
        std::vector<cplx> pw(n_ * stride);
        for (std::size_t j = 0; j < n_; ++j) {
            pw[j * stride] = 1.0;
            for (std::size_t k = 1; k < stride; ++k) {
                pw[j * stride + k] = pw[j * stride + k - 1] * z(static_cast<Eigen::Index>(j));
            }
        }
        return pw;
    }

    cplx sum(const std::vector<Term>& terms, const std::vector<cplx>& pw) const
    {
        const auto stride = static_cast<std::size_t>(max_degree_ + 1);
        cplx s = 0.0;
        for (const auto& t : terms) {
            cplx v = t.coef;
            for (std::size_t j = 0; j < n_; ++j) {
                if (t.exps[j] != 0) {
                    v *= pw[j * stride + static_cast<std::size_t>(t.exps[j])];
                }
            }
            s += v;
        }
        return s;
    }

    std::vector<Poly> polys_;
    std::vector<int> degrees_;
    std::size_t n_ = 0;
    int max_degree_ = 1;
    std::vector<std::vector<Term>> eqs_;
    std::vector<std::vector<std::vector<Term>>> jac_;
};

inline PolySystem as_square_system(const ReducedSystem& rs) { return PolySystem(rs.polys, rs.degrees); }

// ---------------------------------------------------------------------------
// Start system

/// G_i(z) = z_i^{d_i} − r_i with |r_i| = 1; its solutions are products of roots of unity.
class StartSystem
{
public:
    StartSystem(std::vector<int> degrees, std::uint64_t seed) : degrees_(std::move(degrees))
    {
        const CounterRng rng(seed, streams::start_system);
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            if (degrees_[i] < 1) {
                throw std::invalid_argument("StartSystem: degrees must be positive");
            }
            const double theta = 2.0 * std::numbers::pi * rng.unit(i);
            angles_.push_back(theta);
            r_.push_back(std::polar(1.0, theta));
        }
    }

    std::size_t size() const { return degrees_.size(); }
    std::vector<int> degrees() const { return degrees_; }
    const std::vector<cplx>& constants() const { return r_; }

    /// Bezout number Π d_i, saturating at UINT64_MAX.
    std::uint64_t path_count() const
    {
        std::uint64_t n = 1;
        for (int d : degrees_) {
            if (n > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d)) {
                return std::numeric_limits<std::uint64_t>::max();
            }
            n *= static_cast<std::uint64_t>(d);
        }
        return n;
    }

    /// Start point number `index`, digits of index in the mixed radix (d_0, d_1, ...).
    CVector point(std::uint64_t index) const
    {
        CVector z(static_cast<Eigen::Index>(size()));
        for (std::size_t i = 0; i < size(); ++i) {
            const auto di = static_cast<std::uint64_t>(degrees_[i]);
            const auto k = static_cast<double>(index % di);
            index /= di;
            z(static_cast<Eigen::Index>(i)) = std::polar(1.0, (angles_[i] + 2.0 * std::numbers::pi * k) / degrees_[i]);
        }
        return z;
    }

    std::vector<CVector> points() const
    {
        std::vector<CVector> out;
        const auto n = path_count();
        out.reserve(static_cast<std::size_t>(n));
        for (std::uint64_t k = 0; k < n; ++k) {
            out.push_back(point(k));
        }
        return out;
    }

    void evaluate(const CVector& z, CVector& G, CMatrix& J) const
    {
        const auto n = static_cast<Eigen::Index>(size());
        G.resize(n);
        J.setZero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const int d = degrees_[static_cast<std::size_t>(i)];
            cplx p = 1.0;
            for (int k = 0; k < d - 1; ++k) {
                p *= z(i);
            }
            J(i, i) = static_cast<double>(d) * p;
            G(i) = p * z(i) - r_[static_cast<std::size_t>(i)];
        }
    }

    void residual_scale(const CVector& z, RVector& scale) const
    {
        scale.resize(static_cast<Eigen::Index>(size()));
        for (std::size_t i = 0; i < size(); ++i) {
            scale(static_cast<Eigen::Index>(i)) = std::pow(std::abs(z(static_cast<Eigen::Index>(i))), degrees_[i]) + 1.0;
        }
    }

private:
    std::vector<int> degrees_;
    std::vector<double> angles_;
    std::vector<cplx> r_;
};

inline StartSystem total_degree_start(std::vector<int> degrees, std::uint64_t seed)
{
    return StartSystem(std::move(degrees), seed);
}

/// The random unit complex number multiplying the start system for a seed.
inline cplx gamma_for_seed(std::uint64_t seed)
{
    return std::polar(1.0, 2.0 * std::numbers::pi * CounterRng(seed, streams::gamma).unit(0));
}

// ---------------------------------------------------------------------------
// Path tracking

enum class PathStatus { converged, infinity, failed };

inline std::string to_string(PathStatus s)
{
    switch (s) {
    case PathStatus::converged: return "converged";
    case PathStatus::infinity: return "infinity";
    case PathStatus::failed: return "failed";
    }
    return "?";
}

struct PathOutcome
{
    std::uint64_t start_index = 0;
    PathStatus status = PathStatus::failed;
    CVector endpoint;
    double residual = 0.0; ///< max_i |F_i| / scale_i at the endpoint
    double t_end = 0.0;
    int steps = 0;
};

/// max_i |F_i(z)| / scale_i(z); a zero equation with zero scale counts as exact.
template <EvaluableSystem S>
double relative_residual(const S& sys, const CVector& z, const CVector& F)
{
    RVector scale;
    sys.residual_scale(z, scale);
    double r = 0.0;
    for (Eigen::Index i = 0; i < F.size(); ++i) {
        const double a = std::abs(F(i));
        if (a == 0.0) {
            continue;
        }
        r = std::max(r, scale(i) > 0.0 ? a / scale(i) : std::numeric_limits<double>::infinity());
    }
    return r;
}

/**
 * Follows H(z,t) = γ(1−t)G(z) + tF(z) from t = 0 to t = 1 with an Euler
 * predictor and a Newton corrector. The step halves when the corrector
 * misses corrector_tol within corrector_max_iters and doubles (up to
 * step_init) after five consecutive successes. Endpoints reaching t = 1, or
 * stalling within 1e-3 of it, are sharpened by Newton's method on F. With
 * `careful` set the step is capped at step_init/10 and the corrector must
 * make its last update itself smaller than corrector_tol.
 */
template <EvaluableSystem Target>
PathOutcome track_path(const Target& target, const StartSystem& start, cplx gamma, const CVector& z0,
                       const TrackerConfig& cfg, std::uint64_t index = 0, bool careful = false)
{
    constexpr int kMaxSteps = 200000;
    constexpr double kEndgameWindow = 1e-3;
    const auto n = static_cast<Eigen::Index>(target.size());
    if (z0.size() != n || start.size() != target.size()) {
        throw std::invalid_argument("track_path: start and target dimensions differ");
    }

    CVector F(n), G(n), H(n), Ht(n), Ht_here(n), dz(n), delta(n), z1(n);
    CMatrix JF(n, n), JG(n, n), HJ(n, n), HJ_here(n, n);
    auto eval_h = [&](const CVector& x, double t) {
        target.evaluate(x, F, JF);
        start.evaluate(x, G, JG);
        const cplx a = gamma * (1.0 - t);
        H = a * G + t * F;
        HJ = a * JG + t * JF;
        Ht = F - gamma * G;
    };

    PathOutcome out;
    out.start_index = index;
    CVector z = z0;
    double t = 0.0;
    const double h_max = careful ? 0.1 * cfg.step_init : cfg.step_init;
    const int corrector_iters = careful ? cfg.corrector_max_iters + 2 : cfg.corrector_max_iters;
    double h = h_max;
    int successes = 0;

    eval_h(z, t);
    HJ_here = HJ;
    Ht_here = Ht;
    SmallLU lu;

    while (t < 1.0) {
        if (++out.steps > kMaxSteps) {
            break;
        }
        const bool last = h >= 1.0 - t;
        const double step = last ? 1.0 - t : h;
        const double t1 = last ? 1.0 : t + step;

        lu.compute(HJ_here);
        lu.solve(Ht_here, dz);
        bool ok = false;
        z1 = z - step * dz;
        if (dz.allFinite()) {
            double prev = 0.0;
            for (int it = 0; it < corrector_iters; ++it) {
                eval_h(z1, t1);
                lu.compute(HJ);
                lu.solve(H, delta);
                if (!delta.allFinite()) {
                    break;
                }
                z1 -= delta;
                const double size = delta.norm();
                if (it > 0 && size > 0.5 * prev) {
                    break;
                }
                // Under quadratic convergence the error left after this update is about size³/prev².
                const double left = careful || it == 0 ? size : size * (size / prev) * (size / prev);
                if (left <= cfg.corrector_tol * (1.0 + z1.norm())) {
                    ok = true;
                    break;
                }
                prev = size;
            }
        }

        if (ok) {
            z.swap(z1);
            t = t1;
            HJ_here = HJ;
            Ht_here = Ht;
            if (++successes >= 5) {
                h = std::min(2.0 * h, h_max);
                successes = 0;
            }
            if (z.norm() > cfg.divergence_radius) {
                out.status = PathStatus::infinity;
                out.endpoint = z;
                out.t_end = t;
                out.residual = std::numeric_limits<double>::infinity();
                return out;
            }
        } else {
            h *= 0.5;
            successes = 0;
            if (h < cfg.step_min) {
                break;
            }
        }
    }

    out.t_end = t;
    if (t < 1.0 - kEndgameWindow || !z.allFinite()) {
        out.endpoint = z;
        out.residual = std::numeric_limits<double>::infinity();
        out.status = z.norm() > cfg.stall_infinity_norm ? PathStatus::infinity : PathStatus::failed;
        return out;
    }

    for (int it = 0; it < cfg.endpoint_newton_iters; ++it) {
        target.evaluate(z, F, JF);
        lu.compute(JF);
        lu.solve(F, delta);
        if (!delta.allFinite()) {
            break;
        }
        z -= delta;
        if (delta.norm() <= 1e-15 * (1.0 + z.norm())) {
            break;
        }
    }
    CMatrix Jdummy;
    target.evaluate(z, F, Jdummy);
    out.endpoint = z;
    out.residual = relative_residual(target, z, F);
    if (z.allFinite() && out.residual < cfg.corrector_tol) {
        out.status = PathStatus::converged;
    } else if (!z.allFinite() || z.norm() > cfg.stall_infinity_norm) {
        out.status = PathStatus::infinity;
    } else {
        out.status = PathStatus::failed;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Deduplication

/// Lexicographic order on (Re z_0, Im z_0, Re z_1, ...).
inline bool lex_less(const CVector& a, const CVector& b)
{
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
        if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
    }
    return a.size() < b.size();
}

/**
 * Representatives of the points under ‖a − b‖ < tol·(1 + ‖a‖), where a is
 * an already-chosen representative. Points are visited in lexicographic
 * order, so each cluster is represented by its lexicographically first
 * member and the result is sorted.
 */
inline std::vector<CVector> dedup(std::vector<CVector> points, double tol)
{
    std::sort(points.begin(), points.end(), lex_less);
    std::vector<CVector> reps;
    for (auto& p : points) {
        const bool dup = std::any_of(reps.begin(), reps.end(), [&](const CVector& r) {
            return (p - r).norm() < tol * (1.0 + r.norm());
        });
        if (!dup) {
            reps.push_back(std::move(p));
        }
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Counting

/**
 * Endpoint filter. A converged endpoint is spurious when any listed torus
 * coordinate has modulus ≤ torus_tol·(1 + ‖z‖∞) or when `degenerate` says so.
 */
struct SolutionFilter
{
    std::function<std::vector<cplx>(std::span<const cplx>)> torus_coordinates;
    std::function<bool(std::span<const cplx>, const TrackerConfig&)> degenerate;

    bool spurious(const CVector& z, const TrackerConfig& cfg) const
    {
        const auto zs = as_span(z);
        if (torus_coordinates) {
            const double bound = cfg.torus_tol * (1.0 + z.cwiseAbs().maxCoeff());
            for (const cplx& c : torus_coordinates(zs)) {
                if (std::abs(c) <= bound) {
                    return true;
                }
            }
        }
        return degenerate && degenerate(zs, cfg);
    }
};

/// λ, y and x = v0 + Σ t_j v_j must all be nonzero.
inline SolutionFilter torus_filter(const ReducedSystem& rs)
{
    SolutionFilter f;
    f.torus_coordinates = [rs](std::span<const cplx> z) { return rs.torus_coordinates(z); };
    return f;
}

/// Rejects z ≈ 0 and points where K(z) is singular: |det K| ≤ det_tol·‖K‖_F^m.
inline SolutionFilter ml_filter(const MLSystem& ml)
{
    SolutionFilter f;
    f.degenerate = [&ml](std::span<const cplx> z, const TrackerConfig& cfg) {
        double zn = 0.0;
        for (const cplx& c : z) {
            zn = std::max(zn, std::abs(c));
        }
        if (zn <= cfg.torus_tol) {
            return true;
        }
        const CMatrix K = ml.matrix_at(z);
        const double scale = std::pow(K.norm(), ml.m());
        return std::abs(detail::lu_det(K)) <= cfg.det_tol * scale;
    };
    return f;
}

struct CountReport
{
    std::string family;
    int m = 0;
    int d = 0;
    int count = -1; ///< consensus count, -1 when seeds disagree
    bool consensus = false;
    std::string error;
    std::vector<int> per_seed_counts;
    std::uint64_t paths_tracked = 0;
    std::uint64_t failures = 0;
    std::uint64_t filtered_spurious = 0;
    std::uint64_t diverged = 0;
    std::uint64_t retracked = 0; ///< failed paths tracked again in careful mode
    double runtime_ms = 0.0;
    std::vector<std::uint64_t> seeds;
    TrackerConfig config;
    std::vector<CVector> solutions; ///< deduplicated solutions found with the first seed

    nlohmann::json to_json(bool include_runtime = true) const
    {
        nlohmann::json j = {{"family", family},
                            {"m", m},
                            {"d", d},
                            {"method", "homotopy"},
                            {"count", consensus ? nlohmann::json(count) : nlohmann::json(nullptr)},
                            {"per_seed_counts", per_seed_counts},
                            {"paths_tracked", paths_tracked},
                            {"failures", failures},
                            {"filtered_spurious", filtered_spurious},
                            {"seeds", seeds},
                            {"config", config.to_json()}};
        if (include_runtime) {
            j["runtime_ms"] = runtime_ms;
        }
        if (!consensus) {
            j["error"] = error;
        }
        return j;
    }
};

/// Runs fn(i) for i in [0, n) on `threads` workers; results must be written by index.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn)
{
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < n; i = next++) {
                    fn(i);
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                error = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

/// Tracks every Bezout path for every seed and returns the consensus count of filtered solutions.
template <EvaluableSystem System>
CountReport count_torus_solutions(const System& sys, const SolutionFilter& filter, const TrackerConfig& cfg)
{
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    CountReport rep;
    rep.seeds = cfg.seeds;
    rep.config = cfg;

    for (std::size_t s = 0; s < cfg.seeds.size(); ++s) {
        const std::uint64_t seed = cfg.seeds[s];
        const StartSystem start = total_degree_start(sys.degrees(), seed);
        const std::uint64_t npaths = start.path_count();
        if (npaths > cfg.max_paths) {
            throw BudgetExceeded(npaths, cfg.max_paths);
        }
        const cplx gamma = gamma_for_seed(seed);
        std::vector<PathOutcome> outcomes(static_cast<std::size_t>(npaths));
        parallel_for(outcomes.size(), cfg.threads, [&](std::size_t k) {
            outcomes[k] = track_path(sys, start, gamma, start.point(k), cfg, k);
        });
        std::vector<std::size_t> retry;
        for (std::size_t k = 0; k < outcomes.size(); ++k) {
            if (outcomes[k].status == PathStatus::failed) {
                retry.push_back(k);
            }
        }
        parallel_for(retry.size(), cfg.threads, [&](std::size_t r) {
            const std::size_t k = retry[r];
            outcomes[k] = track_path(sys, start, gamma, start.point(k), cfg, k, true);
        });
        rep.retracked += retry.size();

        std::vector<CVector> kept;
        for (const auto& o : outcomes) {
            ++rep.paths_tracked;
            if (o.status == PathStatus::infinity) {
                ++rep.diverged;
                continue;
            }
            const bool near_end = o.t_end >= 1.0 - 1e-3;
            if (near_end && o.endpoint.allFinite() && filter.spurious(o.endpoint, cfg)) {
                ++rep.filtered_spurious;
                continue;
            }
            if (o.status == PathStatus::converged) {
                kept.push_back(o.endpoint);
            } else {
                ++rep.failures;
            }
        }
        kept = dedup(std::move(kept), cfg.dedup_tol);
        rep.per_seed_counts.push_back(static_cast<int>(kept.size()));
        if (s == 0) {
            rep.solutions = std::move(kept);
        }
    }

    rep.consensus = std::all_of(rep.per_seed_counts.begin(), rep.per_seed_counts.end(),
                                [&](int c) { return c == rep.per_seed_counts.front(); });
    if (rep.consensus) {
        rep.count = rep.per_seed_counts.front();
    } else {
        std::string msg = "genericity failure: tracker seeds disagree on the solution count (";
        for (std::size_t s = 0; s < rep.per_seed_counts.size(); ++s) {
            msg += (s ? ", " : "") + std::string("seed ") + std::to_string(cfg.seeds[s]) + ": " +
                   std::to_string(rep.per_seed_counts[s]);
        }
        rep.error = msg + ")";
    }
    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace centraldeg
