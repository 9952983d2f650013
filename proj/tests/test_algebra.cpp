#include <random>

#include <gtest/gtest.h>

#include <centraldeg/algebra.hpp>

using namespace centraldeg;

namespace {

Poly random_poly(std::mt19937_64& gen, std::size_t nvars, int max_degree, int terms)
{
    std::uniform_int_distribution<int> expo(0, max_degree);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Poly p(nvars);
    for (int k = 0; k < terms; ++k) {
        Monomial mono(nvars);
        int budget = max_degree;
        for (auto& e : mono.exponents) {
            e = std::min(budget, expo(gen));
            budget -= e;
        }
        p.add_term(mono, {coef(gen), coef(gen)});
    }
    return p;
}

std::vector<cplx> random_point(std::mt19937_64& gen, std::size_t n)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> z(n);
    for (auto& c : z) {
        c = {u(gen), u(gen)};
    }
    return z;
}

// Naive evaluation with std::pow, independent of monomial_value.
cplx naive_eval(const Poly& p, const std::vector<cplx>& z)
{
    cplx s = 0.0;
    for (const auto& [mono, c] : p.terms()) {
        cplx t = c;
        for (std::size_t i = 0; i < z.size(); ++i) {
            t *= std::pow(z[i], mono.exponents[i]);
        }
        s += t;
    }
    return s;
}

CMatrix random_symmetric(std::mt19937_64& gen, Eigen::Index m)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix K(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i; j < m; ++j) {
            K(i, j) = K(j, i) = cplx(u(gen), u(gen));
        }
    }
    return K;
}

} // namespace

TEST(Binomial, SmallValues)
{
    EXPECT_EQ(binomial(5, 2), 10);
    for (int n = 0; n < 10; ++n) {
        EXPECT_EQ(binomial(n, 0), 1);
    }
    EXPECT_EQ(binomial(30, 15), 155117520);
}

TEST(Binomial, MatchesPascalTriangle)
{
    std::vector<std::vector<BigInt>> rows{{1}};
    for (int n = 1; n <= 64; ++n) {
        std::vector<BigInt> row(n + 1, 1);
        for (int k = 1; k < n; ++k) {
            row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
        rows.push_back(row);
    }
    for (int n = 0; n <= 64; ++n) {
        for (int k = 0; k <= n; ++k) {
            ASSERT_EQ(binomial(n, k), rows[n][k]) << n << " " << k;
        }
        EXPECT_EQ(binomial(n, n + 1), 0);
    }
}

TEST(Binomial, FactorialAndFalling)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(binomial_falling(-1, 0), 1);
    EXPECT_EQ(binomial_falling(7, 3), 35);
    EXPECT_THROW(to_int64(factorial(30)), std::overflow_error);
}

TEST(Poly, EvaluatesSimpleProduct)
{
    Poly p = Poly::variable(2, 0) * Poly::variable(2, 1);
    p -= Poly::constant(2, 1.0);
    const std::vector<cplx> z{2.0, 3.0};
    EXPECT_EQ(p.evaluate(z), cplx(5.0));
}

TEST(Poly, ZeroPointGivesConstantTerm)
{
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(gen, 3, 3, 6);
        const std::vector<cplx> zero(3, 0.0);
        EXPECT_EQ(p.evaluate(zero), p.coefficient(Monomial(3)));
    }
}

TEST(Poly, MatchesNaiveEvaluator)
{
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_poly(gen, 3, 2, 8);
        const auto z = random_point(gen, 3);
        EXPECT_LT(std::abs(p.evaluate(z) - naive_eval(p, z)), 1e-12);
    }
}

TEST(Poly, EvaluationIsLinearInScalar)
{
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = random_poly(gen, 4, 4, 10);
        const cplx c(0.3, -1.7);
        const Poly q = c * p;
        const auto z = random_point(gen, 4);
        EXPECT_LT(std::abs(q.evaluate(z) - c * p.evaluate(z)), 1e-12 * (1.0 + std::abs(q.evaluate(z))));
    }
}

TEST(Poly, AddTermDropsCancellation)
{
    Poly p(2);
    p.add_term({1, 0}, 2.0);
    p.add_term({1, 0}, -2.0);
    EXPECT_TRUE(p.is_zero());
    EXPECT_THROW(p.add_term({1, 0, 0}, 1.0), std::invalid_argument);
}

TEST(Jacobian, SquareAndLinear)
{
    const Poly sq = Poly::variable(2, 0) * Poly::variable(2, 0);
    const std::vector<Poly> sys{sq, Poly::variable(2, 1)};
    const std::vector<cplx> z{3.0, 5.0};
    const CMatrix J = system_jacobian(sys, z);
    EXPECT_EQ(J(0, 0), cplx(6.0));
    EXPECT_EQ(J(0, 1), cplx(0.0));
    EXPECT_EQ(J(1, 0), cplx(0.0));
    EXPECT_EQ(J(1, 1), cplx(1.0));

    std::mt19937_64 gen(14);
    std::vector<Poly> linear;
    for (int i = 0; i < 3; ++i) {
        linear.push_back(random_poly(gen, 3, 1, 4));
    }
    const CMatrix J1 = system_jacobian(linear, random_point(gen, 3));
    const CMatrix J2 = system_jacobian(linear, random_point(gen, 3));
    EXPECT_LT((J1 - J2).norm(), 1e-15);
}

TEST(Jacobian, MatchesCentralDifferences)
{
    std::mt19937_64 gen(15);
    const double h = 1e-7;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Poly> sys;
        for (int i = 0; i < 3; ++i) {
            sys.push_back(random_poly(gen, 3, trial % 2 == 0 ? 3 : 4, 8));
        }
        const auto z = random_point(gen, 3);
        const CMatrix J = system_jacobian(sys, z);
        for (std::size_t j = 0; j < 3; ++j) {
            auto zp = z;
            auto zm = z;
            zp[j] += h;
            zm[j] -= h;
            for (std::size_t i = 0; i < 3; ++i) {
                const cplx fd = (sys[i].evaluate(zp) - sys[i].evaluate(zm)) / (2.0 * h);
                const cplx an = J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                EXPECT_LT(std::abs(fd - an), 1e-6 * std::max(1.0, std::abs(an)));
            }
        }
    }
}

TEST(SymMatrix, PackedRoundTrip)
{
    RMatrix M(3, 3);
    M << 1, 2, 3, 2, 4, 5, 3, 5, 6;
    const auto S = SymMatrix<double>::from_dense(M);
    EXPECT_EQ(S.packed(), (std::vector<double>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(S.dense(), M);
    EXPECT_DOUBLE_EQ(trace_inner(S, SymMatrix<double>::identity(3)), 11.0);
    EXPECT_DOUBLE_EQ(trace_inner(S, S), (M * M).trace());
}

TEST(DetAdj, IdentityAndDiagonal)
{
    const DetAdj id = det_adj(CMatrix::Identity(3, 3));
    EXPECT_LT(std::abs(id.det - 1.0), 1e-15);
    EXPECT_LT((id.adj - CMatrix::Identity(3, 3)).norm(), 1e-15);

    CMatrix D = CMatrix::Zero(2, 2);
    D(0, 0) = 2.0;
    D(1, 1) = 3.0;
    const DetAdj da = det_adj(D);
    EXPECT_LT(std::abs(da.det - 6.0), 1e-14);
    EXPECT_LT(std::abs(da.adj(0, 0) - 3.0), 1e-14);
    EXPECT_LT(std::abs(da.adj(1, 1) - 2.0), 1e-14);
}

TEST(DetAdj, AdjugateIdentityOnRandomSymmetric)
{
    std::mt19937_64 gen(16);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index m = 2 + trial % 4;
        const CMatrix K = random_symmetric(gen, m);
        const DetAdj da = det_adj(K);
        const double scale = std::max(1.0, std::abs(da.det));
        EXPECT_LT((K * da.adj - da.det * CMatrix::Identity(m, m)).norm(), 1e-10 * scale);
        EXPECT_LT((da.adj - da.adj.transpose()).norm(), 1e-10 * std::max(1.0, da.adj.norm()));
        EXPECT_LT((da.adj - cofactor_adjugate(K)).norm(), 1e-10 * std::max(1.0, da.adj.norm()));
    }
}

TEST(DetAdj, SingularFallsBackToCofactors)
{
    CMatrix K(3, 3);
    K << 1, 2, 3, 2, 4, 6, 3, 6, 10;
    const DetAdj da = det_adj(K);
    EXPECT_LT(std::abs(da.det), 1e-12);
    EXPECT_LT((K * da.adj).norm(), 1e-10);
    EXPECT_GT(da.adj.norm(), 0.1);
}

TEST(SmallLU, AgreesWithEigen)
{
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 1 + trial % 7;
        const CMatrix A = CMatrix::Random(n, n);
        const CVector b = CVector::Random(n);
        SmallLU lu;
        lu.compute(A);
        CVector x;
        lu.solve(b, x);
        Eigen::PartialPivLU<CMatrix> ref(A);
        EXPECT_LT((x - ref.solve(b)).norm(), 1e-9 * (1.0 + x.norm()));
        EXPECT_LT(std::abs(lu.determinant() - ref.determinant()), 1e-9 * (1.0 + std::abs(ref.determinant())));
        CMatrix inv;
        lu.inverse(inv);
        EXPECT_LT((A * inv - CMatrix::Identity(n, n)).norm(), 1e-8);
    }
}
