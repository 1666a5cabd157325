#include <gtest/gtest.h>

#include "g2kit/exterior.hpp"

using namespace g2kit;

namespace {

template <class F>
ExtVector<F> random_form(const F& K, unsigned n, unsigned k, Rng& rng) {
    return ExtVector<F>(K, n, k, random_vector(K, exterior_basis(n, k).size(), rng));
}

}  // namespace

TEST(Exterior, WedgeIsGradedCommutativeAndAssociative) {
    Rationals Q;
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        auto a = random_form(Q, 7, 2, rng), b = random_form(Q, 7, 3, rng), c = random_form(Q, 7, 1, rng);
        EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
        EXPECT_EQ(wedge(a, b), wedge(b, a));                      // (-1)^{2*3}
        EXPECT_EQ(wedge(b, c), Rational(-1) * wedge(c, b));       // (-1)^{3*1}
        EXPECT_TRUE(wedge(c, c).is_zero());
    }
}

TEST(Exterior, ContractionIsAntiDerivation) {
    Rationals Q;
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        auto a = random_form(Q, 6, 2, rng), b = random_form(Q, 6, 3, rng);
        auto v = random_vector(Q, 6, rng);
        auto lhs = contract(v, wedge(a, b));
        auto rhs = wedge(contract(v, a), b) + wedge(a, contract(v, b));  // sign (-1)^2
        EXPECT_EQ(lhs, rhs);
        EXPECT_TRUE(contract(v, contract(v, b)).is_zero());
    }
}

TEST(Exterior, PluckerIdealDimensions) {
    Rationals Q;
    auto v27 = plucker_vars(2, 7, 0);
    auto v36 = plucker_vars(3, 6, 1);
    EXPECT_EQ(v27[0], "x01");
    EXPECT_EQ(v36[19], "x456");
    EXPECT_EQ(plucker_ideal(Q, 2, 7, v27).size(), 35u);
    EXPECT_EQ(plucker_ideal(Q, 3, 6, v36).size(), 35u);
}

TEST(Exterior, PluckerIdealVanishesOnSamples) {
    PrimeField F(101);
    Rng rng(8);
    for (auto [k, n] : {std::pair<unsigned, unsigned>{2, 7}, {3, 6}, {2, 5}}) {
        auto vars = plucker_vars(k, n, 0);
        auto I = plucker_ideal(F, k, n, vars);
        for (int t = 0; t < 10; ++t) {
            auto pt = sample_grassmannian(F, k, n, rng);
            for (auto& f : I) EXPECT_TRUE(f.eval(pt.plucker).is_zero());
        }
        // a random point of the ambient space is not on the Grassmannian
        auto junk = random_vector(F, vars.size(), rng);
        bool all_zero = true;
        for (auto& f : I) all_zero = all_zero && f.eval(junk).is_zero();
        EXPECT_FALSE(all_zero);
    }
}

TEST(Exterior, BladeSubspaceRecovered) {
    PrimeField F(31);
    Rng rng(9);
    auto pt = sample_grassmannian(F, 3, 6, rng);
    ExtVector<PrimeField> alpha(F, 6, 3, pt.plucker);
    auto sub = subspace_of_blade(alpha);
    EXPECT_EQ(sub.rows(), 3u);
    EXPECT_TRUE(same_row_space(sub, pt.frame));
}

TEST(Exterior, QuadricFromFourFormNormalization) {
    // beta = x1^x2^x3^x4 gives 2(a12 a34 - a13 a24 + a14 a23)
    Rationals Q;
    auto beta = ExtVector<Rationals>::basis_blade(Q, 7, {1, 2, 3, 4});
    auto q = quadric_from_4form(beta);
    auto vars = plucker_vars(2, 7, 0);
    auto x = [&](const std::string& s) { return MPoly<Rationals>::var(Q, vars, s); };
    auto expect = Rational(2) * (x("x12") * x("x34") - x("x13") * x("x24") + x("x14") * x("x23"));
    EXPECT_EQ(q.to_poly(vars), expect);
    EXPECT_EQ(q.rank(), 6u);
    // q(alpha) = beta(alpha ^ alpha) on random alpha
    Rng rng(10);
    for (int t = 0; t < 5; ++t) {
        auto b = random_form(Q, 7, 4, rng);
        auto a = random_form(Q, 7, 2, rng);
        auto aa = wedge(a, a);
        Rational direct = 0;
        for (std::size_t i = 0; i < aa.coords().size(); ++i) direct += aa.coords()[i] * b.coords()[i];
        EXPECT_EQ(quadric_from_4form(b).eval(a.coords()), direct);
    }
}

TEST(Exterior, QuadricFromEndoDiagonal) {
    // identity maps to zero; diag(m) gives sum (s(I^c) - s(I)) a_I a_{I^c} up to a global sign
    Rationals Q;
    EXPECT_TRUE(quadric_from_endo(Matrix<Rationals>::identity(Q, 6)).matrix().is_zero());
    std::vector<long> m = {1, 2, 3, 5, 7, 11};
    Matrix<Rationals> M(Q, 6, 6);
    for (int i = 0; i < 6; ++i) M(i, i) = Rational(m[i]);
    auto q = quadric_from_endo(M);
    const auto& B = exterior_basis(6, 3);
    Matrix<Rationals> S(Q, 20, 20);
    for (std::size_t i = 0; i < 20; ++i) {
        std::uint32_t I = B.masks[i], J = 63u ^ I;
        long sI = 0, sJ = 0;
        for (int b = 0; b < 6; ++b) (I >> b & 1 ? sI : sJ) += m[b];
        S(i, B.index[J]) = Rational(wedge_sign(I, J) * (sJ - sI));
    }
    // compare up to a scalar
    Rational ratio = 0;
    bool ok = true;
    for (std::size_t i = 0; i < 20 && ok; ++i)
        for (std::size_t j = 0; j < 20 && ok; ++j) {
            const auto& a = q.matrix()(i, j);
            const auto& b = S(i, j);
            if (a.is_zero() != b.is_zero()) ok = false;
            else if (!a.is_zero()) {
                if (ratio.is_zero()) ratio = a / b;
                ok = (a / b == ratio);
            }
        }
    EXPECT_TRUE(ok);
    EXPECT_FALSE(ratio.is_zero());
    // against the defining formula on random 3-forms
    Rng rng(12);
    for (int t = 0; t < 5; ++t) {
        auto A = Matrix<Rationals>(Q, 6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) A(i, j) = random_element(Q, rng);
        auto al = random_form(Q, 6, 3, rng);
        Rational direct = 0;
        for (unsigned i = 0; i < 6; ++i)
            for (unsigned j = 0; j < 6; ++j) {
                auto ei = ExtVector<Rationals>::basis_blade(Q, 6, {i});
                std::vector<Rational> xj(6, Rational(0));
                xj[j] = 1;
                direct += A(i, j) * top_coefficient(wedge(contract(xj, wedge(al, ei)), al));
            }
        EXPECT_EQ(quadric_from_endo(A).eval(al.coords()), direct);
    }
}

TEST(Exterior, SchubertSpan) {
    Rationals Q;
    std::vector<Rational> u = {1, 2, 0, -1, 3, 1};
    auto S = schubert_contains(Q, u, 3);
    EXPECT_EQ(S.rows(), 10u);
}

TEST(Exterior, PointCounts) {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        EXPECT_EQ(segre_count({1, 1, 1}, p), std::uint64_t(p + 1) * (p + 1) * (p + 1));
        EXPECT_EQ(segre_count({2, 2}, p), projective_count(2, p) * projective_count(2, p));
        EXPECT_EQ(veronese_count(p), std::uint64_t(p) * p + p + 1);
    }
    EXPECT_THROW(veronese_count(3), InvalidParameter);
    std::uint64_t c = 0;
    for_each_projective_point(4, 5, [&](const std::vector<std::uint32_t>&) { ++c; });
    EXPECT_EQ(c, projective_count(3, 5));
}
