#pragma once

/**
 * Lattice-polytope combinatorics for the Newton polytopes of the reduced KKT
 * systems: staircase triangulations of a product of two simplices and an
 * exact normalized-volume routine for small full-dimensional polytopes.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace centraldeg {

struct LatticePolytope
{
    std::vector<std::vector<std::int64_t>> points;
    int dim = 0;

    static LatticePolytope from_monomials(const std::vector<Monomial>& monos)
    {
        LatticePolytope p;
        if (monos.empty()) {
            return p;
        }
        p.dim = static_cast<int>(monos.front().exponents.size());
        for (const auto& mono : monos) {
            p.points.emplace_back(mono.exponents.begin(), mono.exponents.end());
        }
        return p;
    }
};

/// counts_by_k[k]: monotone paths whose last south step is followed by exactly k east steps.
struct StaircaseDecomposition
{
    int m = 0;
    int d = 0;
    std::vector<std::int64_t> counts_by_k;

    std::int64_t total() const
    {
        std::int64_t s = 0;
        for (auto c : counts_by_k) {
            s += c;
        }
        return s;
    }
};

namespace detail {

/// Walks every east/south lattice path from the north-west to the south-east
/// corner of a grid with `cols` columns and `rows` rows of points, tallying
/// the number of trailing east steps.
class StaircaseWalker
{
public:
    StaircaseWalker(int cols, int rows) : east_total_(cols - 1), south_total_(rows - 1)
    {
        counts_.assign(static_cast<std::size_t>(east_total_ + 1), 0);
    }

    std::vector<std::int64_t> run()
    {
        walk(0, 0, 0);
        return counts_;
    }

private:
    void walk(int east, int south, int trailing)
    {
        if (east == east_total_ && south == south_total_) {
            ++counts_[static_cast<std::size_t>(trailing)];
            return;
        }
        if (east < east_total_) {
            walk(east + 1, south, trailing + 1);
        }
        if (south < south_total_) {
            walk(east, south + 1, 0);
        }
    }

    int east_total_;
    int south_total_;
    std::vector<std::int64_t> counts_;
};

inline void check_lp_dims(int m, int d, const char* who)
{
    if (d < 1 || d >= m) {
        throw std::invalid_argument(std::string(who) + ": need 1 <= d < m");
    }
}

} // namespace detail

/**
 * Staircase triangulation of Δ_{m−d−1} × Δ_d as paths on the (m−d)×(d+1)
 * grid, grouped by how many east steps follow the path's arrival on the
 * south edge.
 */
inline StaircaseDecomposition staircase_counts(int m, int d)
{
    detail::check_lp_dims(m, d, "staircase_counts");
    return {m, d, detail::StaircaseWalker(m - d, d + 1).run()};
}

/// Normalized volume of Δ_a × Δ_b, one unimodular simplex per staircase path.
inline std::int64_t product_simplex_volume(int a, int b)
{
    if (a < 0 || b < 0) {
        throw std::invalid_argument("product_simplex_volume: negative dimension");
    }
    std::int64_t s = 0;
    for (auto c : detail::StaircaseWalker(a + 1, b + 1).run()) {
        s += c;
    }
    return s;
}

/// Σ_k counts_by_k[k]·2^k: the simplex of a path with k trailing east steps has volume 2^k.
inline std::int64_t qp_weighted_volume(int m, int d)
{
    detail::check_lp_dims(m, d, "qp_weighted_volume");
    const auto sc = staircase_counts(m, d);
    std::int64_t s = 0;
    for (std::size_t k = 0; k < sc.counts_by_k.size(); ++k) {
        s += sc.counts_by_k[k] << k;
    }
    return s;
}

namespace detail {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Fraction-free Gaussian elimination; returns the determinant exactly.
inline BigInt bareiss_det(IntMatrix a)
{
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Rank of the integer vectors `rows` via exact elimination over the rationals.
inline std::size_t exact_rank(std::vector<std::vector<BigRat>> rows)
{
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) {
                continue;
            }
            const BigRat f = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) {
                rows[i][j] -= f * rows[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

/// Placing triangulation over a fixed point list with exact orientation tests.
class PlacingTriangulation
{
public:
    using Point = std::vector<std::int64_t>;
    using Facet = std::vector<std::size_t>; // sorted point indices

    explicit PlacingTriangulation(std::vector<Point> pts) : pts_(std::move(pts))
    {
        n_ = pts_.front().size();
    }

    BigInt volume()
    {
        const auto seed = initial_simplex();
        add_simplex(seed);
        for (std::size_t i = 0; i < seed.size(); ++i) {
            Facet f = seed;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            boundary_[f] = seed[i];
        }
        std::vector<bool> used(pts_.size(), false);
        for (auto i : seed) {
            used[i] = true;
        }
        for (std::size_t p = 0; p < pts_.size(); ++p) {
            if (!used[p]) {
                place(p);
            }
        }
        return volume_;
    }

    std::size_t simplex_count() const { return simplices_; }

private:
    BigInt orientation(const Facet& f, std::size_t apex) const
    {
        IntMatrix rows;
        rows.reserve(n_);
        const Point& base = pts_[apex];
        for (auto v : f) {
            std::vector<BigInt> r(n_);
            for (std::size_t c = 0; c < n_; ++c) {
                r[c] = BigInt(pts_[v][c] - base[c]);
            }
            rows.push_back(std::move(r));
        }
        return bareiss_det(std::move(rows));
    }

    /// First n+1 affinely independent points in list order.
    Facet initial_simplex() const
    {
        Facet chosen{0};
        std::vector<std::vector<BigRat>> dirs;
        for (std::size_t p = 1; p < pts_.size() && chosen.size() < n_ + 1; ++p) {
            std::vector<BigRat> r(n_);
            for (std::size_t c = 0; c < n_; ++c) {
                r[c] = BigRat(pts_[p][c] - pts_[0][c]);
            }
            dirs.push_back(r);
            if (exact_rank(dirs) == dirs.size()) {
                chosen.push_back(p);
            } else {
                dirs.pop_back();
            }
        }
        if (chosen.size() != n_ + 1) {
            throw std::invalid_argument("normalized_volume: points do not span a full-dimensional polytope");
        }
        return chosen;
    }

    void add_simplex(const Facet& simplex)
    {
        Facet f(simplex.begin() + 1, simplex.end());
        const BigInt det = orientation(f, simplex.front());
        volume_ += det < 0 ? BigInt(-det) : det;
        ++simplices_;
    }

    void place(std::size_t p)
    {
        std::vector<Facet> visible;
        for (const auto& [facet, opposite] : boundary_) {
            const BigInt sp = orientation(facet, p);
            if (sp == 0) {
                continue;
            }
            const BigInt so = orientation(facet, opposite);
            if ((sp > 0) != (so > 0)) {
                visible.push_back(facet);
            }
        }
        for (const auto& facet : visible) {
            boundary_.erase(facet);
            Facet simplex = facet;
            simplex.insert(simplex.begin(), p);
            add_simplex(simplex);
            for (std::size_t i = 0; i < facet.size(); ++i) {
                Facet ridge = facet;
                const std::size_t dropped = ridge[i];
                ridge[i] = p;
                std::sort(ridge.begin(), ridge.end());
                auto it = boundary_.find(ridge);
                if (it != boundary_.end()) {
                    boundary_.erase(it);
                } else {
                    boundary_.emplace(std::move(ridge), dropped);
                }
            }
        }
    }

    std::vector<Point> pts_;
    std::size_t n_ = 0;
    std::map<Facet, std::size_t> boundary_;
    BigInt volume_ = 0;
    std::size_t simplices_ = 0;
};

} // namespace detail

/**
 * Normalized lattice volume (Euclidean volume × dim!) of conv(P). Points are
 * deduplicated and placed in lexicographic order; every orientation test is an
 * exact integer determinant.
 */
inline std::int64_t normalized_volume(const LatticePolytope& P)
{
    if (P.dim < 1 || P.dim > 7) {
        throw std::invalid_argument("normalized_volume: dimension must be in 1..7");
    }
    std::vector<std::vector<std::int64_t>> pts = P.points;
    for (const auto& p : pts) {
        if (static_cast<int>(p.size()) != P.dim) {
            throw std::invalid_argument("normalized_volume: point has wrong length");
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (static_cast<int>(pts.size()) < P.dim + 1) {
        throw std::invalid_argument("normalized_volume: points do not span a full-dimensional polytope");
    }
    return to_int64(detail::PlacingTriangulation(std::move(pts)).volume());
}

} // namespace centraldeg
