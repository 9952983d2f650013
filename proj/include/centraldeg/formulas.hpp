#pragma once

/**
 * Closed-form degrees and arithmetic genera of central curves, the shipped
 * reference values, and an exact polynomial-fit check.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "instances.hpp"

namespace centraldeg {

namespace detail {

inline void check_lp_range(int m, int d, const char* who)
{
    if (d < 1 || d >= m) {
        throw std::invalid_argument(std::string(who) + ": need 1 <= d < m, got m=" + std::to_string(m) +
                                    " d=" + std::to_string(d));
    }
}

inline std::int64_t sym_size(int m) { return static_cast<std::int64_t>(m) * (m + 1) / 2; }

} // namespace detail

/// Degree of the central curve of a generic LP: C(m−1, d).
inline BigInt psi_lp(int m, int d)
{
    detail::check_lp_range(m, d, "psi_lp");
    return binomial(m - 1, d);
}

/// ML degree of a generic diagonal linear concentration model: C(m−1, d−1).
inline BigInt phi_diag(int m, int d)
{
    if (d < 1 || d > m) {
        throw std::invalid_argument("phi_diag: need 1 <= d <= m");
    }
    return binomial(m - 1, d - 1);
}

/// Degree of the central curve of a generic QP: Σ_{k=0}^{m−d−1} C(m−k−2, d−1)·2^k.
inline BigInt psi_qp(int m, int d)
{
    detail::check_lp_range(m, d, "psi_qp");
    BigInt s = 0;
    BigInt pow2 = 1;
    for (int k = 0; k <= m - d - 1; ++k) {
        s += binomial(m - k - 2, d - 1) * pow2;
        pow2 *= 2;
    }
    return s;
}

/// The d' with ψ_SDP(m, d) = ψ_SDP(m, d'): m(m+1)/2 − d − 1.
inline std::int64_t sdp_symmetry_partner(int m, std::int64_t d)
{
    const auto N = detail::sym_size(m);
    if (m < 1 || d < 1 || d >= N) {
        throw std::invalid_argument("sdp_symmetry_partner: need 1 <= d < m(m+1)/2");
    }
    return N - d - 1;
}

/**
 * Known SDP central-curve degrees: (4,7) → 9, (5,9) → 137, (6,15) → 528,
 * (m,1) → m−1, (m, m(m+1)/2 − 1) → 1, and the mirror of each under
 * sdp_symmetry_partner. Empty for anything else.
 */
inline std::optional<std::int64_t> psi_sdp_reference(int m, std::int64_t d)
{
    if (m < 1) {
        return std::nullopt;
    }
    const auto N = detail::sym_size(m);
    if (d < 1 || d >= N) {
        return std::nullopt;
    }
    auto direct = [&](std::int64_t dd) -> std::optional<std::int64_t> {
        if (m == 4 && dd == 7) return 9;
        if (m == 5 && dd == 9) return 137;
        if (m == 6 && dd == 15) return 528;
        if (dd == 1) return m - 1;
        if (dd == N - 1) return 1;
        return std::nullopt;
    };
    if (auto v = direct(d)) {
        return v;
    }
    return direct(N - d - 1);
}

/// Numerator coefficients h_0 + h_1 t + ... of a Hilbert series (1 − t)^{-2}(...).
struct HVector
{
    std::vector<std::int64_t> h;

    void validate() const
    {
        if (h.empty() || h.front() != 1) {
            throw std::invalid_argument("HVector: h_0 must be 1");
        }
        if (h.back() == 0) {
            throw std::invalid_argument("HVector: last entry must be nonzero");
        }
        for (auto x : h) {
            if (x < 0) {
                throw std::invalid_argument("HVector: entries must be nonnegative");
            }
        }
    }
};

/// Arithmetic genus 1 − Σ_j (1 − j) h_j of a curve with the given h-vector.
inline std::int64_t genus_from_hvector(const HVector& hv)
{
    hv.validate();
    std::int64_t s = 1;
    for (std::size_t j = 0; j < hv.h.size(); ++j) {
        s -= (1 - static_cast<std::int64_t>(j)) * hv.h[j];
    }
    return s;
}

/**
 * Genus of the SDP central curve where it is known in closed form, with
 * N = m(m+1)/2: 0 at d = 1 and d = N−1, C(m−2, 2) at d = N−2, and
 * 1 + (m−1)²(m−3) at d = N−3. Empty elsewhere.
 */
inline std::optional<std::int64_t> genus_sdp_special(int m, std::int64_t d)
{
    if (m < 1) {
        return std::nullopt;
    }
    const auto N = detail::sym_size(m);
    if (d < 1 || d >= N) {
        return std::nullopt;
    }
    if (d == 1 || d == N - 1) {
        return 0;
    }
    if (d == N - 2) {
        return to_int64(binomial(m - 2, 2));
    }
    if (d == N - 3) {
        const std::int64_t a = m - 1;
        return 1 + a * a * (m - 3);
    }
    return std::nullopt;
}

enum class GenusSource { closed_form, tabulated, conjectural };

inline std::string to_string(GenusSource s)
{
    switch (s) {
    case GenusSource::closed_form: return "closed_form";
    case GenusSource::tabulated: return "tabulated";
    case GenusSource::conjectural: return "conjectural";
    }
    return "?";
}

struct GenusTableEntry
{
    int m;
    int d;
    std::int64_t value;
    GenusSource source;
};

/**
 * Genus values for small m. Entries marked tabulated came from Hilbert-series
 * computations this library cannot redo; the conjectural one is the value the
 * mirror d ↔ N − d would predict.
 */
inline const std::vector<GenusTableEntry>& genus_sdp_table()
{
    using S = GenusSource;
    static const std::vector<GenusTableEntry> table = {
        {2, 1, 0, S::closed_form},  {2, 2, 0, S::closed_form},  {3, 1, 0, S::closed_form},
        {3, 2, 0, S::tabulated},    {3, 3, 1, S::closed_form},  {3, 4, 0, S::closed_form},
        {3, 5, 0, S::closed_form},  {4, 1, 0, S::closed_form},  {4, 2, 1, S::tabulated},
        {4, 3, 10, S::tabulated},   {4, 4, 20, S::tabulated},   {4, 5, 22, S::tabulated},
        {4, 6, 20, S::tabulated},   {4, 7, 10, S::closed_form}, {4, 8, 1, S::closed_form},
        {4, 9, 0, S::closed_form},  {5, 1, 0, S::closed_form},  {5, 2, 3, S::tabulated},
        {5, 3, 33, S::conjectural}, {5, 12, 33, S::closed_form}, {5, 13, 3, S::closed_form},
        {5, 14, 0, S::closed_form},
    };
    return table;
}

/**
 * Genus of the central curve of a generic LP, evaluated both as the binomial
 * sum 1 − Σ_{j=0}^{d} (1−j)·C(m−d+j−2, j) and as the closed form
 * 1 − (m−1)!(m − md + d²)/((m−d)! d!). Throws std::logic_error if they differ.
 */
inline BigInt genus_lp(int m, int d)
{
    detail::check_lp_range(m, d, "genus_lp");
    BigInt sum = 1;
    for (int j = 0; j <= d; ++j) {
        sum -= (1 - j) * binomial_falling(m - d + j - 2, j);
    }
    const BigInt md = m;
    const BigInt dd = d;
    const BigRat closed = BigRat(1) - BigRat(factorial(m - 1) * (md - md * dd + dd * dd),
                                             factorial(m - d) * factorial(d));
    if (closed != BigRat(sum)) {
        throw std::logic_error("genus_lp: sum and closed form disagree at m=" + std::to_string(m) +
                               " d=" + std::to_string(d));
    }
    return sum;
}

struct PolynomialFit
{
    std::vector<BigRat> coefficients; ///< ascending powers of m
    int degree = -1;                  ///< degree of the fitted polynomial, -1 for zero
    bool fits = false;                ///< every point lies on the fit
    bool integer_valued = false;      ///< fits and takes integer values at all integers

    std::string describe() const
    {
        std::string s;
        for (std::size_t k = coefficients.size(); k-- > 0;) {
            if (coefficients[k] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += coefficients[k] > 0 ? " + " : " - ";
            } else if (coefficients[k] < 0) {
                s += "-";
            }
            const BigRat a = coefficients[k] < 0 ? BigRat(-coefficients[k]) : coefficients[k];
            if (a != 1 || k == 0) {
                s += a.str();
                if (k > 0) {
                    s += "*";
                }
            }
            if (k >= 1) {
                s += "m";
            }
            if (k >= 2) {
                s += "^" + std::to_string(k);
            }
        }
        return s.empty() ? "0" : s;
    }
};

inline BigRat eval_ascending(const std::vector<BigRat>& c, const BigRat& x)
{
    BigRat v = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        v = v * x + c[k];
    }
    return v;
}

/**
 * Interpolates the first d+1 points (m_i, value_i) exactly and checks the
 * remaining points against that polynomial.
 */
inline PolynomialFit polynomiality_check(int d, const std::vector<std::pair<std::int64_t, std::int64_t>>& points)
{
    if (d < 0) {
        throw std::invalid_argument("polynomiality_check: degree must be nonnegative");
    }
    if (points.size() < static_cast<std::size_t>(d) + 1) {
        throw std::invalid_argument("polynomiality_check: need at least d+1 points");
    }
    const auto k = static_cast<std::size_t>(d) + 1;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("polynomiality_check: repeated abscissa");
            }
        }
    }
    PolynomialFit fit;
    fit.coefficients.assign(k, BigRat(0));
    for (std::size_t i = 0; i < k; ++i) {
        // Lagrange basis polynomial for node i, built in ascending coefficients.
        std::vector<BigRat> basis{BigRat(1)};
        BigRat denom = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) {
                continue;
            }
            std::vector<BigRat> next(basis.size() + 1, BigRat(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= basis[t] * points[j].first;
            }
            basis = std::move(next);
            denom *= BigRat(points[i].first - points[j].first);
        }
        const BigRat scale = BigRat(points[i].second) / denom;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            fit.coefficients[t] += basis[t] * scale;
        }
    }
    for (std::size_t t = fit.coefficients.size(); t-- > 0;) {
        if (fit.coefficients[t] != 0) {
            fit.degree = static_cast<int>(t);
            break;
        }
    }
    fit.fits = true;
    for (const auto& [x, y] : points) {
        if (eval_ascending(fit.coefficients, BigRat(x)) != BigRat(y)) {
            fit.fits = false;
        }
    }
    // A degree-≤d polynomial is integer valued iff it is at d+1 consecutive integers.
    fit.integer_valued = fit.fits;
    for (int x = 0; x <= d && fit.integer_valued; ++x) {
        const BigRat v = eval_ascending(fit.coefficients, BigRat(x));
        fit.integer_valued = boost::multiprecision::denominator(v) == 1;
    }
    return fit;
}

enum class DegreeMethod { formula, polytope, homotopy, reference };

inline std::string to_string(DegreeMethod m)
{
    switch (m) {
    case DegreeMethod::formula: return "formula";
    case DegreeMethod::polytope: return "polytope";
    case DegreeMethod::homotopy: return "homotopy";
    case DegreeMethod::reference: return "reference";
    }
    return "?";
}

inline DegreeMethod degree_method_from_string(const std::string& s)
{
    if (s == "formula") return DegreeMethod::formula;
    if (s == "polytope") return DegreeMethod::polytope;
    if (s == "homotopy") return DegreeMethod::homotopy;
    if (s == "reference") return DegreeMethod::reference;
    throw std::invalid_argument("unknown method '" + s + "'");
}

struct DegreeReport
{
    Family family = Family::lp;
    int m = 0;
    int d = 0;
    std::int64_t value = 0;
    DegreeMethod method = DegreeMethod::formula;

    nlohmann::ordered_json to_json() const
    {
        return {{"family", to_string(family)},
                {"m", m},
                {"d", d},
                {"value", value},
                {"method", to_string(method)}};
    }
};

} // namespace centraldeg
