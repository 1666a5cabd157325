#include <gtest/gtest.h>

#include "g2kit/g2_checks.hpp"

using namespace g2kit;

TEST(G2Checks, CartanPencil) {
    Rationals Q;
    auto r = cartan_pencil_avoids_baselocus(Q);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.metrics["long_zeros"].size(), 3u);
    EXPECT_FALSE(cartan_pencil_avoids_baselocus(Q, true).pass);
    EXPECT_TRUE(cartan_pencil_avoids_baselocus(PrimeField(101)).pass);
}

TEST(G2Checks, RootsAndKilling) {
    Rationals Q;
    Rng rng(31);
    auto r = cartan_root_factorization(Q, rng);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.metrics["constant"], "1");
    EXPECT_TRUE(killing_quadric_check(Q, rng).pass);
    EXPECT_TRUE(killing_quadric_check(PrimeField(10007), rng).pass);
}

TEST(G2Checks, ModelsAgree) {
    Rationals Q;
    Rng rng(32);
    auto r = model_agreement(Q, rng);
    EXPECT_TRUE(r.pass);
}

TEST(G2Checks, NondegenerateSectionAndControl) {
    Rationals Q;
    EXPECT_TRUE(section_presentations(Q, SectionCase::nondegenerate).pass);
    EXPECT_FALSE(section_presentations(Q, SectionCase::nondegenerate, true).pass);
}

TEST(G2Checks, DegenerateSectionNeedsTheSignFix) {
    Rationals Q;
    auto r = section_presentations(Q, SectionCase::degenerate);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.metrics["degree_2"]["rank_joint"], 21);
    EXPECT_TRUE(r.metrics["aligned_x12_sign"]["equal"].get<bool>());
    EXPECT_FALSE(section_presentations(Q, SectionCase::degenerate, true).pass);
}

TEST(G2Checks, TangentConeLiteralComparison) {
    Rationals Q;
    auto r = tangent_cone_at_point(Q);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.metrics["degree_2"]["rank_lhs"], 15);
    EXPECT_EQ(r.metrics["degree_2"]["rank_rhs"], 11);
    EXPECT_TRUE(r.metrics["aligned_rhs_contained_in_lhs"].get<bool>());
    EXPECT_TRUE(r.metrics["aligned_modulo_x03"]["equal"].get<bool>());
    EXPECT_TRUE(r.metrics["displayed_reduced_matrix_vs_restriction"]["equal"].get<bool>());
}
