#pragma once

/**
 * Gram-matrix SDPs of forms: p = [x]ᵀ Q [x] with [x] the degree-D monomials
 * in n variables, and the central-curve degree of such an SDP with a generic
 * form p and generic cost matrix C.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "homotopy.hpp"
#include "instances.hpp"
#include "rng.hpp"

namespace centraldeg {

/// Degree-D exponent vectors in n variables, lexicographically decreasing (x² before xy before y²).
struct MonomialBasis
{
    int n = 0;
    int D = 0;
    std::vector<Monomial> monos;

    std::size_t size() const { return monos.size(); }
};

namespace detail {

inline void fill_exponents(int n, int remaining, std::vector<int>& cur, std::vector<Monomial>& out)
{
    const auto pos = cur.size();
    if (static_cast<int>(pos) == n - 1) {
        cur.push_back(remaining);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.push_back(e);
        fill_exponents(n, remaining - e, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

inline MonomialBasis monomials(int n, int D)
{
    if (n < 1 || D < 1) {
        throw std::invalid_argument("monomials: need n >= 1 and D >= 1");
    }
    MonomialBasis b{n, D, {}};
    std::vector<int> cur;
    detail::fill_exponents(n, D, cur, b.monos);
    return b;
}

/// One 0/1 matrix per degree-2D exponent α, with a 1 at every (β, γ) where β + γ = α.
struct GramConstraint
{
    Monomial alpha;
    SymMatrix<double> A;
};

inline std::vector<GramConstraint> gram_constraints(int n, int D)
{
    const MonomialBasis basis = monomials(n, D);
    const MonomialBasis targets = monomials(n, 2 * D);
    std::vector<GramConstraint> out;
    out.reserve(targets.size());
    for (const auto& alpha : targets.monos) {
        SymMatrix<double> A(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i; j < basis.size(); ++j) {
                if (basis.monos[i] * basis.monos[j] == alpha) {
                    A(i, j) = 1.0;
                }
            }
        }
        out.push_back({alpha, std::move(A)});
    }
    return out;
}

struct SOSInstance
{
    int n = 0;
    int D = 0;
    std::uint64_t seed = 0;
    std::vector<GramConstraint> constraints;
    RVector p; ///< coefficient of x^α for each constraint α
    SymMatrix<double> C;

    int m() const { return C.dim() == 0 ? 0 : static_cast<int>(C.dim()); }
    int d() const { return static_cast<int>(constraints.size()); }

    std::vector<SymMatrix<double>> matrices() const
    {
        std::vector<SymMatrix<double>> out;
        for (const auto& g : constraints) {
            out.push_back(g.A);
        }
        return out;
    }
};

/// Random form p (coefficients uniform on [-1,1]) and random symmetric cost C.
inline SOSInstance random_sos(int n, int D, std::uint64_t seed)
{
    SOSInstance inst;
    inst.n = n;
    inst.D = D;
    inst.seed = seed;
    inst.constraints = gram_constraints(n, D);
    inst.p = detail::uniform_vector(CounterRng(seed, streams::form), 0, inst.d(), -1.0, 1.0);
    inst.C = detail::uniform_sym(CounterRng(seed, streams::cost), 0, monomials(n, D).size());
    return inst;
}

/// Sizes (m, d) of the Gram SDP for forms of degree 2D in n variables.
inline std::pair<int, int> sos_dimensions(int n, int D)
{
    return {static_cast<int>(to_int64(binomial(n + D - 1, D))),
            static_cast<int>(to_int64(binomial(n + 2 * D - 1, 2 * D)))};
}

/// Degrees reported for Gram SDPs the total-degree tracker cannot reach.
inline std::optional<int> sos_reference_degree(int n, int two_D)
{
    if (n == 2 && two_D == 6) return 7;
    if (n == 2 && two_D == 8) return 45;
    if (n == 3 && two_D == 4) return 66;
    return std::nullopt;
}

class SOSBudgetRefusal : public std::runtime_error
{
public:
    SOSBudgetRefusal(int n, int two_D, std::uint64_t paths, std::optional<int> reference)
        : std::runtime_error(message(n, two_D, paths, reference)), reference_(reference)
    {}
    std::optional<int> reference() const { return reference_; }

private:
    static std::string message(int n, int two_D, std::uint64_t paths, std::optional<int> reference)
    {
        std::string s = "sos n=" + std::to_string(n) + " 2D=" + std::to_string(two_D) + " needs " +
                        std::to_string(paths) + " paths per seed, beyond the homotopy budget; reference-only";
        if (reference) {
            s += ": the reported degree is " + std::to_string(*reference);
        }
        return s;
    }
    std::optional<int> reference_;
};

inline std::uint64_t bezout_paths(int m, int unknowns)
{
    std::uint64_t p = 1;
    for (int i = 0; i < unknowns; ++i) {
        if (p > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m)) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        p *= static_cast<std::uint64_t>(m);
    }
    return p;
}

/**
 * Central-curve degree of the Gram SDP of a random form of degree two_D in n
 * variables: likelihood system of span{C, A_α} counted by homotopy. Throws
 * SOSBudgetRefusal (carrying the reference value when known) if the m^{d+1}
 * Bezout paths exceed cfg.max_paths.
 */
inline CountReport sos_degree(int n, int two_D, const TrackerConfig& cfg, std::uint64_t seed = 1)
{
    if (n < 1 || two_D < 2 || two_D % 2 != 0) {
        throw std::invalid_argument("sos_degree: need n >= 1 and an even degree 2D >= 2");
    }
    const int D = two_D / 2;
    const auto [m, d] = sos_dimensions(n, D);
    if (m < 2) {
        throw std::invalid_argument("sos_degree: Gram matrix must be at least 2x2");
    }
    const std::uint64_t paths = bezout_paths(m, d + 1);
    if (paths > cfg.max_paths) {
        throw SOSBudgetRefusal(n, two_D, paths, sos_reference_degree(n, two_D));
    }
    const SOSInstance inst = random_sos(n, D, seed);
    const auto mats = inst.matrices();
    const MLSystem ml = build_ml_system(inst.C, mats, inst.p, seed);
    CountReport rep = count_torus_solutions(ml, ml_filter(ml), cfg);
    rep.family = "sos";
    rep.m = m;
    rep.d = d;
    return rep;
}

} // namespace centraldeg
