#include <gtest/gtest.h>

#include "g2kit/matrix.hpp"
#include "g2kit/random.hpp"

using namespace g2kit;

namespace {

template <class F>
Matrix<F> random_matrix(const F& K, std::size_t r, std::size_t c, Rng& rng) {
    Matrix<F> m(K, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_element(K, rng);
    return m;
}

template <class F>
Matrix<F> random_skew(const F& K, std::size_t n, Rng& rng) {
    Matrix<F> m(K, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_element(K, rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

// Leibniz expansion, the slow independent route
template <class F>
typename F::Element leibniz_det(const Matrix<F>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    auto total = m.field().zero();
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        auto t = m.field().one();
        for (std::size_t i = 0; i < n; ++i) t *= m(i, perm[i]);
        total += inv % 2 ? -t : t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST(Linalg, DeterminantRoutesAgree) {
    Rationals Q;
    PrimeField F(101);
    Rng rng(1);
    for (int t = 0; t < 10; ++t) {
        auto m = random_matrix(Q, 6, 6, rng);
        EXPECT_EQ(determinant(m), leibniz_det(m));
        auto mp = random_matrix(F, 6, 6, rng);
        EXPECT_EQ(determinant(mp), leibniz_det(mp));
    }
    auto sing = Matrix<Rationals>::from_ints(Q, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    EXPECT_TRUE(determinant(sing).is_zero());
}

TEST(Linalg, RankKernelConsistency) {
    PrimeField F(7);
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        auto a = random_matrix(F, 5, 3, rng), b = random_matrix(F, 3, 8, rng);
        auto m = a * b;  // rank <= 3
        auto k = kernel(m);
        EXPECT_EQ(rank(m) + k.rows(), 8u);
        EXPECT_LE(rank(m), 3u);
        EXPECT_TRUE((m * k.transpose()).is_zero());
        EXPECT_EQ(rref(m).rank(), rank(m));
    }
}

TEST(Linalg, IntersectRowSpaces) {
    Rationals Q;
    auto a = Matrix<Rationals>::from_ints(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    auto b = Matrix<Rationals>::from_ints(Q, {{0, 1, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}});
    auto c = intersect_row_spaces(a, b);
    EXPECT_EQ(c.rows(), 2u);  // e2+e3 and e1
    EXPECT_TRUE(row_space_contains(a, c));
    EXPECT_TRUE(row_space_contains(b, c));
}

TEST(Linalg, PfaffianSquaresToDeterminant) {
    Rationals Q;
    PrimeField F(101);
    Rng rng(3);
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        for (int t = 0; t < 5; ++t) {
            auto m = random_skew(Q, n, rng);
            auto pf = pfaffian(m);
            EXPECT_EQ(pf * pf, determinant(m));
            auto mp = random_skew(F, n, rng);
            auto pfp = pfaffian(mp);
            EXPECT_EQ(pfp * pfp, determinant(mp));
        }
    }
    // Pf(B A B^T) = det(B) Pf(A)
    auto a = random_skew(Q, 6, rng);
    auto b = random_matrix(Q, 6, 6, rng);
    EXPECT_EQ(pfaffian(b * a * b.transpose()), determinant(b) * pfaffian(a));
    EXPECT_THROW(pfaffian(Matrix<Rationals>(Q, 3, 3)), OddSize);
    EXPECT_THROW(pfaffian(Matrix<Rationals>::from_ints(Q, {{0, 1}, {1, 0}})), NotSkewSymmetric);
}

TEST(Linalg, PfaffianIdealOfGenericFour) {
    // the single 4x4 Pfaffian of a generic skew matrix
    Rationals Q;
    VarSet v({"a", "b", "c", "d", "e", "f"});
    auto x = [&](int i) { return MPoly<Rationals>::var(Q, v, static_cast<std::size_t>(i)); };
    MPoly<Rationals> z(Q, v);
    PolyMatrix<Rationals> m = {{z, x(0), x(1), x(2)}, {-x(0), z, x(3), x(4)}, {-x(1), -x(3), z, x(5)}, {-x(2), -x(4), -x(5), z}};
    auto pf = pfaffian_ideal(m, 4);
    ASSERT_EQ(pf.size(), 1u);
    EXPECT_EQ(pf[0], x(0) * x(5) - x(1) * x(4) + x(2) * x(3));
}

TEST(Linalg, CharPolyRoutesAgree) {
    Rationals Q;
    Rng rng(4);
    for (int t = 0; t < 5; ++t) {
        auto m = random_matrix(Q, 7, 7, rng);
        auto fl = char_poly_faddeev(m);
        auto hs = char_poly_hessenberg(m);
        EXPECT_EQ(fl, hs);
        // det(tI - A) at a few integers
        for (long s : {-2L, 0L, 3L}) {
            auto tI = Rational(s) * Matrix<Rationals>::identity(Q, 7) - m;
            Rational val = 0, pw = 1;
            for (auto& c : fl) {
                val += c * pw;
                pw *= Rational(s);
            }
            EXPECT_EQ(val, determinant(tI));
        }
    }
    PrimeField F(5);  // characteristic below the size
    auto mp = random_matrix(F, 9, 9, rng);
    auto cp = char_poly(mp);
    EXPECT_THROW(char_poly_faddeev(mp), InvalidParameter);
    for (long s = 0; s < 5; ++s) {
        auto tI = F.from_int(s) * Matrix<PrimeField>::identity(F, 9) - mp;
        Fp val = F.zero(), pw = F.one();
        for (auto& c : cp) {
            val += c * pw;
            pw *= F.from_int(s);
        }
        EXPECT_EQ(val, determinant(tI));
    }
}

TEST(Linalg, QuadricRankFromPolynomial) {
    Rationals Q;
    VarSet v({"a", "b", "c", "d"});
    auto x = [&](int i) { return MPoly<Rationals>::var(Q, v, static_cast<std::size_t>(i)); };
    EXPECT_EQ(quadric_rank(x(0) * x(1) - x(2) * x(3)), 4u);
    EXPECT_EQ(quadric_rank(x(0) * x(0) + Rational(2) * x(0) * x(1) + x(1) * x(1)), 1u);
    auto q = QuadraticForm<Rationals>::from_poly(x(0) * x(2) + x(1) * x(1));
    EXPECT_EQ(q.to_poly(v), x(0) * x(2) + x(1) * x(1));
    EXPECT_THROW(quadric_rank(x(0) * x(1) * x(2)), DegreeMismatch);
}
