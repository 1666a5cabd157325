#include <gtest/gtest.h>

#include "g2kit/mpoly.hpp"
#include "g2kit/random.hpp"
#include "g2kit/scalar.hpp"

using namespace g2kit;

TEST(Scalar, RationalCanonical) {
    Rational a(6, -4);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ((a + Rational(3, 2)).str(), "0");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_THROW(Rational(1, 0), DivisionByZero);
    EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Scalar, FpArithmetic) {
    PrimeField F(101);
    auto a = F.from_int(-3);
    EXPECT_EQ(a.residue(), 98u);
    EXPECT_EQ((a * a.inverse()).residue(), 1u);
    EXPECT_EQ((F.from_int(7) / F.from_int(7)).residue(), 1u);
    EXPECT_THROW(PrimeField(100), NotPrime);
    PrimeField G(103);
    EXPECT_THROW(F.one() + G.one(), ModulusMismatch);
}

TEST(Scalar, ReduceModHomomorphism) {
    PrimeField F(101);
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        long a = static_cast<long>(uniform_below(rng, 2000)) - 1000;
        long b = static_cast<long>(uniform_below(rng, 99)) + 1;
        long c = static_cast<long>(uniform_below(rng, 2000)) - 1000;
        long d = static_cast<long>(uniform_below(rng, 99)) + 1;
        Rational x(a, b), y(c, d);
        EXPECT_EQ(reduce_mod(x + y, F), reduce_mod(x, F) + reduce_mod(y, F));
        EXPECT_EQ(reduce_mod(x * y, F), reduce_mod(x, F) * reduce_mod(y, F));
    }
    EXPECT_THROW(reduce_mod(Rational(1, 202), F), DenominatorVanishes);
}

TEST(MPoly, GrevlexOrder) {
    // in three variables x > y > z: x^2 > xy > y^2 > xz > yz > z^2
    auto mons = monomials_of_degree(3, 2);
    std::vector<std::vector<std::uint16_t>> expect = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    ASSERT_EQ(mons.size(), expect.size());
    for (std::size_t i = 0; i < mons.size(); ++i) EXPECT_EQ(mons[i].e, expect[i]);
    EXPECT_EQ(monomials_of_degree(21, 2).size(), 231u);
}

TEST(MPoly, RingAxiomsAndRoundTrip) {
    Rationals Q;
    VarSet v({"a", "b", "c"});
    Rng rng(11);
    auto rnd = [&]() {
        MPoly<Rationals> p(Q, v);
        for (int i = 0; i < 5; ++i) {
            std::vector<std::uint16_t> e(3);
            for (auto& x : e) x = static_cast<std::uint16_t>(uniform_below(rng, 3));
            p.add_term(Monomial(e), Rational(static_cast<long>(uniform_below(rng, 11)) - 5,
                                             static_cast<long>(uniform_below(rng, 4)) + 1));
        }
        return p;
    };
    for (int t = 0; t < 30; ++t) {
        auto f = rnd(), g = rnd(), h = rnd();
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ(parse_poly(f.str(), Q, v), f);
        auto fp = reduce_mod(f * g, PrimeField(101));
        EXPECT_EQ(fp, reduce_mod(f, PrimeField(101)) * reduce_mod(g, PrimeField(101)));
        EXPECT_EQ(parse_poly(fp.str(), PrimeField(101), v), fp);
    }
}

TEST(MPoly, EvalAndSubstitution) {
    Rationals Q;
    VarSet v({"x", "y"}), w({"s", "t", "u"});
    auto x = MPoly<Rationals>::var(Q, v, 0), y = MPoly<Rationals>::var(Q, v, 1);
    auto f = x * x * y - Rational(3) * y * y * y + x * y;
    auto s = MPoly<Rationals>::var(Q, w, 0), t = MPoly<Rationals>::var(Q, w, 1), u = MPoly<Rationals>::var(Q, w, 2);
    auto g = linear_substitute(f, {s + t, t - Rational(2) * u});
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        auto p = random_vector(Q, 3, rng);
        EXPECT_EQ(g.eval(p), f.eval({p[0] + p[1], p[1] - Rational(2) * p[2]}));
    }
    EXPECT_THROW(linear_substitute(f, {s * t, u}), DegreeMismatch);
    EXPECT_THROW(x + s, VarMismatch);
    EXPECT_FALSE(f.is_homogeneous());
    EXPECT_EQ(f.degree(), 3);
}

TEST(MPoly, ParseErrors) {
    Rationals Q;
    VarSet v({"x", "y"});
    EXPECT_THROW(parse_poly("x + z", Q, v), VarMismatch);
    EXPECT_THROW(parse_poly("", Q, v), ParseError);
    EXPECT_EQ(parse_poly("-x^2 + 1/2*x*y - y", Q, v).str(), "-x^2 + 1/2*x*y - y");
}
