#include <gtest/gtest.h>

#include "g2kit/embedding.hpp"
#include "g2kit/scroll.hpp"

using namespace g2kit;
using embedding::Family;

namespace {

std::vector<std::string> negatives_of(const std::vector<int>& s) {
    std::vector<std::string> out;
    const auto& B = exterior_basis(6, 3);
    for (std::size_t q = 0; q < 20; ++q) {
        if (s[q] > 0) continue;
        std::string k;
        for (auto e : B.elements(q)) k += std::to_string(e + 1);
        out.push_back(k);
    }
    return out;
}

}  // namespace

TEST(Embedding, PlacementsCoverAllCoordinates) {
    for (auto& ch : embedding::placement_candidates()) {
        auto P = embedding::make_placement(ch);
        std::set<std::uint32_t> s(P.begin(), P.end());
        ASSERT_EQ(s.size(), 20u);
    }
    EXPECT_EQ(embedding::placement_candidates().size(), 576u);
}

TEST(Embedding, StoredDictionaryIsTheFirstSearchHit) {
    PrimeField F(10007);
    for (auto fam : {Family::one, Family::two})
        for (long lv : {3L, 7L}) {
            auto hit = embedding::dictionary_search(F, fam, F.from_int(lv));
            ASSERT_TRUE(hit.has_value());
            auto want = embedding::make_placement(embedding::dictionary_placement(fam));
            EXPECT_EQ(embedding::make_placement(hit->placement), want);
            EXPECT_EQ(negatives_of(hit->signs), embedding::dictionary_negatives(fam));
        }
}

TEST(Embedding, LiteralFamilyTwoEntryHasNoDictionary) {
    PrimeField F(10007);
    EXPECT_FALSE(embedding::dictionary_search(F, Family::two, F.from_int(3), {true}).has_value());
}

TEST(Embedding, IdealEqualityOverQForDefaultLambdas) {
    Rationals Q;
    for (auto fam : {Family::one, Family::two})
        for (auto& lam : CheckConfig{}.lambdas) {
            auto r = embedding::verify_ideal_equality(Q, fam, lam);
            EXPECT_TRUE(r.pass) << embedding::family_number(fam) << " " << lam.str();
            EXPECT_EQ(r.metrics["pfaffian_slice_dim"], 28);
            EXPECT_EQ(r.metrics["plucker_slice_dim"], 28);
        }
}

TEST(Embedding, IdealEqualityModP) {
    PrimeField F(101);
    EXPECT_TRUE(embedding::verify_ideal_equality(F, Family::one, Rational(2)).pass);
    EXPECT_TRUE(embedding::verify_ideal_equality(F, Family::two, Rational(1, 2)).pass);
}

TEST(Embedding, LiteralEntryFailsWithWitness) {
    Rationals Q;
    auto r = embedding::verify_ideal_equality(Q, Family::two, Rational(2), {true});
    EXPECT_FALSE(r.pass);
    EXPECT_GT(r.metrics["joint_dim"].get<int>(), 28);
    EXPECT_FALSE(r.to_json()["witness"]["data"]["quadric"].get<std::string>().empty());
}

TEST(Embedding, InadmissibleLambdaRejected) {
    Rationals Q;
    EXPECT_THROW(embedding::verify_ideal_equality(Q, Family::one, Rational(-1)), InvalidParameter);
    EXPECT_THROW(embedding::verify_ideal_equality(Q, Family::one, Rational(0)), InvalidParameter);
    EXPECT_THROW(embedding::verify_ideal_equality(Q, Family::two, Rational(0)), InvalidParameter);
    EXPECT_NO_THROW(embedding::verify_ideal_equality(Q, Family::two, Rational(-1)));
    // admissible over Q but not mod 101
    PrimeField F(101);
    EXPECT_THROW(embedding::verify_ideal_equality(F, Family::one, Rational(100)), InvalidParameter);
}

TEST(Embedding, ExampleSpacesAreTheSpanOfTheFirstFamily) {
    Rationals Q;
    for (auto& lam : CheckConfig{}.lambdas) {
        auto r = embedding::example_spaces(Q, lam);
        EXPECT_TRUE(r.pass) << lam.str();
        EXPECT_EQ(r.metrics["h12_rank"], 7);
    }
}

TEST(Embedding, InjectivityProbe) {
    Rng rng(21);
    PrimeField F(10007), G(101);
    EXPECT_TRUE(embedding::embedding_injectivity_probe(F, Family::one, Rational(1), 50, rng).pass);
    EXPECT_TRUE(embedding::embedding_injectivity_probe(G, Family::one, Rational(3), 50, rng).pass);
    EXPECT_TRUE(embedding::embedding_injectivity_probe(G, Family::two, Rational(2), 30, rng).pass);
    // degenerate member of the second family: e_i is on the section and maps to zero
    auto d = embedding::embedding_injectivity_probe(G, Family::two, Rational(0), 10, rng);
    EXPECT_TRUE(d.pass);
    EXPECT_TRUE(d.metrics["center_maps_to_zero"].get<bool>());
    auto n = embedding::embedding_injectivity_probe(G, Family::two, Rational(2), 5, rng);
    EXPECT_FALSE(n.metrics["center_maps_to_zero"].get<bool>());
}

TEST(Embedding, SectionSamplesSatisfyBothIdeals) {
    PrimeField F(101);
    Rng rng(22);
    auto l = F.from_int(3);
    auto S = embedding::section_model(F, Family::one, l);
    auto forms = embedding::plucker_forms(F, Family::one, l);
    auto pl = plucker_ideal(F, 3, 6, embedding::plucker_ring());
    for (auto& y : embedding::sample_section_points(F, S, 20, rng)) {
        EXPECT_TRUE(S.hyperplane.eval(y).is_zero());
        auto x = embedding::eval_forms(forms, y);
        for (auto& q : pl) EXPECT_TRUE(q.eval(x).is_zero());
    }
}

TEST(Scroll, RankDropLocusIsAVeroneseBothWays) {
    for (auto side : {scroll::Side::Ustar, scroll::Side::U}) {
        auto r7 = scroll::scroll_rank_locus(7, Rational(1), side);
        EXPECT_TRUE(r7.pass);
        EXPECT_EQ(r7.metrics["rank_drop_points"], 57);
        EXPECT_EQ(scroll::scroll_rank_locus(11, Rational(1), side).metrics["rank_drop_points"], 133);
        EXPECT_TRUE(scroll::scroll_rank_locus(7, Rational(2), side).pass);
    }
}

TEST(Scroll, CountsAcrossDefaultLambdas) {
    for (auto& lam : CheckConfig{}.lambdas)
        for (std::uint32_t p : {7u, 11u}) EXPECT_TRUE(scroll::scroll_rank_locus(p, lam, scroll::Side::U).pass) << lam.str();
}

TEST(Scroll, BothSidesShareTheDegenerateForms) {
    const std::uint32_t p = 7;
    std::set<std::vector<std::uint32_t>> S[2];
    for (int s = 0; s < 2; ++s) {
        auto side = s ? scroll::Side::U : scroll::Side::Ustar;
        auto B = scroll::bilinear(p, Rational(1), side);
        for (auto& v : scroll::enumerate_locus(p, Rational(1), side).points) {
            auto ker = modp::kernel(B.system_for_v(v));
            ASSERT_EQ(ker.size(), 2u);
            for (std::uint32_t a = 0; a <= p; ++a) {
                std::vector<std::uint32_t> c(7);
                for (int r = 0; r < 7; ++r) c[r] = a == p ? ker[1][r] : (ker[0][r] + std::uint64_t(a) * ker[1][r]) % p;
                modp::normalize(c, p);
                S[s].insert(c);
            }
        }
    }
    EXPECT_EQ(S[0].size(), 456u);
    EXPECT_EQ(S[0], S[1]);
}

TEST(Scroll, VeroneseQuadricsAndControl) {
    Rng rng(23);
    for (std::uint32_t p : {7u, 11u}) {
        auto r = scroll::veronese_quadrics(p, Rational(1), scroll::Side::Ustar, rng);
        EXPECT_TRUE(r.pass);
        EXPECT_EQ(r.metrics["quadric_space_dim"], 6);
        EXPECT_EQ(r.metrics["random_points_quadric_dim"], 0);
    }
    EXPECT_TRUE(scroll::veronese_quadrics(101, Rational(1), scroll::Side::U, rng).pass);
    EXPECT_TRUE(scroll::veronese_quadrics(103, Rational(2), scroll::Side::Ustar, rng).pass);
}

TEST(Scroll, WalkedPointsLieOnTheEnumeratedLocus) {
    Rng rng(24);
    const std::uint32_t p = 11;
    for (auto side : {scroll::Side::Ustar, scroll::Side::U}) {
        auto L = scroll::enumerate_locus(p, Rational(2), side);
        std::set<std::vector<std::uint32_t>> E(L.points.begin(), L.points.end());
        auto S = scroll::sample_locus(p, Rational(2), side, rng, 60);
        EXPECT_GE(S.size(), 60u);
        for (auto& v : S) EXPECT_TRUE(E.count(v));
        // same quadric system either way
        auto a = scroll::quadrics_through(p, L.points), b = scroll::quadrics_through(p, S);
        EXPECT_TRUE(same_row_space(a, b));
    }
}

TEST(Scroll, Pi6MissesTheGrassmannian) {
    Rng rng(25);
    auto r = scroll::pi6_avoids_dual_grassmannian(Rational(1), rng);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.metrics["scan_zero_count"], 0);
    scroll::Pi6Options o;
    o.negative_control = true;
    auto n = scroll::pi6_avoids_dual_grassmannian(Rational(1), rng, o);
    EXPECT_FALSE(n.pass);
    EXPECT_GE(n.metrics["scan_zero_count"].get<int>(), 1);
}
