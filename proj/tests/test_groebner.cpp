#include <gtest/gtest.h>

#include <filesystem>

#include "g2kit/exterior.hpp"
#include "g2kit/groebner.hpp"

using namespace g2kit;

namespace {

using P = MPoly<PrimeField>;

// deg G(k, n) by the hook-content formula
mpz_class grassmannian_degree(unsigned k, unsigned n) {
    mpz_class num, r = 1;
    mpz_fac_ui(num.get_mpz_t(), k * (n - k));
    r = num;
    for (unsigned i = 0; i < k; ++i) {
        mpz_class a, b;
        mpz_fac_ui(a.get_mpz_t(), i);
        mpz_fac_ui(b.get_mpz_t(), n - k + i);
        r = r * a / b;
    }
    return r;
}

}  // namespace

TEST(Groebner, AlreadyABasis) {
    PrimeField F(101);
    VarSet v({"x", "y"});
    auto x = P::var(F, v, 0), y = P::var(F, v, 1);
    auto gb = buchberger({x * x, x * y});
    ASSERT_EQ(gb.basis.size(), 2u);
    EXPECT_EQ(gb.basis[0], x * y);
    EXPECT_EQ(gb.basis[1], x * x);
}

TEST(Groebner, TwistedCubicPairGainsCubic) {
    PrimeField F(101);
    VarSet v({"x", "y", "z"});
    auto x = P::var(F, v, 0), y = P::var(F, v, 1), z = P::var(F, v, 2);
    auto gb = buchberger({x * y - z * z, x * z - y * y});
    // leading terms are xy and y^2 (z is smallest, so y^2 > xz);
    // by hand the S-polynomial y(xy - z^2) + x(xz - y^2) = x^2 z - y z^2 is already reduced
    auto s = x * x * z - y * z * z;
    ASSERT_EQ(gb.basis.size(), 3u);
    EXPECT_EQ(gb.basis[2], s);
    // z(xy - z^2) - y(xz - y^2) = y^3 - z^3 lies in the ideal
    EXPECT_TRUE(normal_form(y * y * y - z * z * z, gb).is_zero());
    EXPECT_FALSE(normal_form(x * x * x, gb).is_zero());
    for (auto& g : gb.generators) EXPECT_TRUE(normal_form(g, gb).is_zero());
}

TEST(Groebner, HilbertTrivialCases) {
    PrimeField F(101);
    VarSet v({"x", "y", "z"});
    auto hp = hilbert_profile_of_monomials({}, 3);
    EXPECT_EQ(hp.projective_dim, 2);
    EXPECT_EQ(hp.degree, 1);
    auto x = P::var(F, v, 0), y = P::var(F, v, 1), z = P::var(F, v, 2);
    auto conic = hilbert_profile(buchberger({x * z - y * y}));
    EXPECT_EQ(conic.projective_dim, 1);
    EXPECT_EQ(conic.degree, 2);
    EXPECT_EQ(conic.numerator_string(), "1 - t^2");
}

TEST(Groebner, GrassmannianCalibration) {
    PrimeField F(101);
    EXPECT_EQ(grassmannian_degree(2, 7), 42);
    EXPECT_EQ(grassmannian_degree(3, 6), 42);
    for (auto [k, n] : {std::pair<unsigned, unsigned>{2, 7}, {3, 6}, {2, 5}}) {
        auto vars = plucker_vars(k, n, 0);
        auto gb = buchberger(plucker_ideal(F, k, n, vars));
        auto hp = hilbert_profile(gb);
        EXPECT_EQ(hp.projective_dim, static_cast<int>(k * (n - k))) << k << "," << n;
        EXPECT_EQ(hp.degree, grassmannian_degree(k, n)) << k << "," << n;
    }
}

TEST(Groebner, EmptinessCertificates) {
    PrimeField F7(7);
    VarSet v({"x", "y"});
    auto x = P::var(F7, v, 0), y = P::var(F7, v, 1);
    auto c1 = projective_emptiness({x, y});
    EXPECT_TRUE(c1.empty);
    EXPECT_EQ(c1.pure_power_exponents, (std::vector<unsigned>{1, 1}));
    auto c2 = projective_emptiness({x * x + y * y, x * y});
    EXPECT_TRUE(c2.empty);
    EXPECT_EQ(c2.pure_power_exponents, (std::vector<unsigned>{2, 3}));
    auto c3 = projective_emptiness({x * y});
    EXPECT_FALSE(c3.empty);
    EXPECT_EQ(c3.profile.projective_dim, 0);
}

TEST(Groebner, ProfileInvariantUnderPermutationAndLinearChange) {
    PrimeField F(103);
    Rng rng(21);
    auto vars = plucker_vars(2, 5, 0);
    auto I = plucker_ideal(F, 2, 5, vars);
    auto base = hilbert_profile(buchberger(I));
    auto J = I;
    std::reverse(J.begin(), J.end());
    auto perm = hilbert_profile(buchberger(J));
    EXPECT_EQ(perm.numerator, base.numerator);
    // random invertible change of coordinates
    std::vector<P> img;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        P f(F, vars);
        for (std::size_t j = 0; j < vars.size(); ++j) f += random_element(F, rng) * P::var(F, vars, j);
        img.push_back(f);
    }
    std::vector<P> K;
    for (auto& f : I) K.push_back(linear_substitute(f, img));
    auto ch = hilbert_profile(buchberger(K));
    EXPECT_EQ(ch.numerator, base.numerator);
}

TEST(Groebner, ErrorsAndBudget) {
    PrimeField F(101);
    VarSet v({"x", "y"});
    auto x = P::var(F, v, 0), y = P::var(F, v, 1);
    EXPECT_THROW(buchberger({x * x + y}), NonHomogeneousInput);
    auto vars = plucker_vars(2, 7, 0);
    GbOptions tiny;
    tiny.max_pairs = 10;
    EXPECT_THROW(buchberger(plucker_ideal(F, 2, 7, vars), tiny), BudgetExceeded);
}

TEST(Groebner, CacheRoundTrip) {
    auto dir = std::filesystem::temp_directory_path() / "g2kit-test-cache";
    std::filesystem::remove_all(dir);
    auto& cache = GbCache::global();
    cache.configure(true, dir);
    PrimeField F(101);
    auto vars = plucker_vars(3, 6);
    auto I = plucker_ideal(F, 3, 6, vars);
    auto fresh = buchberger(I);
    EXPECT_FALSE(fresh.stats.from_cache);
    auto again = buchberger(I);
    EXPECT_TRUE(again.stats.from_cache);
    EXPECT_EQ(again.basis, fresh.basis);
    auto bypass = buchberger(I, {}, false);
    EXPECT_FALSE(bypass.stats.from_cache);
    EXPECT_EQ(bypass.basis, fresh.basis);
    cache.configure(false);
    std::filesystem::remove_all(dir);
}
