#include <gtest/gtest.h>

#include "duval/dynkin.hpp"
#include "oracles.hpp"

using namespace duval;

TEST(ParseDynkin, AcceptsCanonicalLabels) {
    EXPECT_EQ(parse_dynkin("E8"), DynkinType(DynkinKind::E, 8));
    EXPECT_EQ(parse_dynkin("A1"), DynkinType(DynkinKind::A, 1));
    EXPECT_EQ(parse_dynkin("d5"), DynkinType(DynkinKind::D, 5));
    EXPECT_EQ(parse_dynkin(" e6 "), DynkinType(DynkinKind::E, 6));
}

TEST(ParseDynkin, RejectsTypesExcludedOnDegreeOne) {
    for (const char* label : {"A9", "D9", "D3", "E5", "E9", "A0", "A10"}) {
        EXPECT_THROW(parse_dynkin(label), OutOfRange) << label;
    }
}

TEST(ParseDynkin, RejectsMalformedLabels) {
    for (const char* label : {"", "E", "B3", "8E", "A-1", "A1x", "A 1", "A1234"}) {
        EXPECT_THROW(parse_dynkin(label), MalformedLabel) << label;
    }
}

TEST(ParseDynkin, LabelRoundTripsForAllTypes) {
    const auto types = all_dynkin_types();
    ASSERT_EQ(types.size(), 16U);  // A1..A8, D4..D8, E6..E8
    for (const auto& t : types) EXPECT_EQ(parse_dynkin(t.label()), t);
}

TEST(IntersectionMatrix, A2AndA1) {
    EXPECT_EQ(intersection_matrix(parse_dynkin("A2")), (IntegerMatrix{{-2, 1}, {1, -2}}));
    EXPECT_EQ(intersection_matrix(parse_dynkin("A1")), (IntegerMatrix{{-2}}));
}

TEST(IntersectionMatrix, BranchNodeOfExceptionalTypes) {
    // the last node hangs off node 3 (E6), 4 (E7), 5 (E8)
    const std::pair<const char*, std::size_t> cases[] = {{"E6", 2}, {"E7", 3}, {"E8", 4}};
    for (auto [label, attach] : cases) {
        const auto m = intersection_matrix(parse_dynkin(label));
        const std::size_t last = m.size() - 1;
        for (std::size_t j = 0; j < last; ++j) EXPECT_EQ(m(last, j), j == attach ? 1 : 0) << label << " col " << j;
    }
    const auto e6 = intersection_matrix(parse_dynkin("E6"));
    EXPECT_EQ(e6.row(5), (std::vector<int>{0, 0, 1, 0, 0, -2}));
}

TEST(IntersectionMatrix, DnForkAtNodeNMinus2) {
    for (int n = 4; n <= 8; ++n) {
        const auto m = intersection_matrix(DynkinType(DynkinKind::D, n));
        const auto fork = static_cast<std::size_t>(n - 3);
        EXPECT_EQ(m(fork, n - 2), 1);
        EXPECT_EQ(m(fork, n - 1), 1);
        EXPECT_EQ(m(n - 2, n - 1), 0);
    }
}

TEST(IntersectionMatrix, InvariantsHoldForEveryType) {
    for (const auto& t : all_dynkin_types()) {
        const auto m = intersection_matrix(t);
        ASSERT_EQ(m.size(), t.size()) << t.label();
        EXPECT_TRUE(m.is_symmetric()) << t.label();
        int edges = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            EXPECT_EQ(m(i, i), -2);
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (i == j) continue;
                EXPECT_TRUE(m(i, j) == 0 || m(i, j) == 1);
                edges += m(i, j);
            }
        }
        // a tree on `rank` nodes
        EXPECT_EQ(edges / 2, t.rank() - 1) << t.label();
        EXPECT_TRUE(is_negative_definite(m)) << t.label();
    }
}

TEST(IntersectionMatrix, AnRowSums) {
    for (int n = 2; n <= 8; ++n) {
        const auto m = intersection_matrix(DynkinType(DynkinKind::A, n));
        for (std::size_t i = 0; i < m.size(); ++i) {
            int sum = 0;
            for (int v : m.row(i)) sum += v;
            EXPECT_EQ(sum, (i == 0 || i + 1 == m.size()) ? -1 : 0);
        }
    }
}

TEST(NegativeDefinite, MinorsAgreeWithLaplaceExpansion) {
    for (const auto& t : all_dynkin_types()) {
        const auto m = intersection_matrix(t);
        const auto minors = leading_principal_minors(m);
        ASSERT_EQ(minors.size(), m.size());
        for (std::size_t k = 1; k <= m.size(); ++k)
            EXPECT_EQ(minors[k - 1], Integer(oracle::leading_minor(m, k))) << t.label() << " k=" << k;
    }
}

TEST(NegativeDefinite, KnownDeterminants) {
    // det of the Cartan matrix: A_n -> n+1, D_n -> 4, E6 -> 3, E7 -> 2, E8 -> 1
    auto cartan_det = [](const DynkinType& t) {
        const auto m = intersection_matrix(t);
        const long long d = oracle::leading_minor(m, m.size());
        return (m.size() % 2 == 0) ? d : -d;
    };
    EXPECT_EQ(cartan_det(parse_dynkin("A2")), 3);
    EXPECT_EQ(cartan_det(parse_dynkin("A8")), 9);
    EXPECT_EQ(cartan_det(parse_dynkin("D6")), 4);
    EXPECT_EQ(cartan_det(parse_dynkin("E6")), 3);
    EXPECT_EQ(cartan_det(parse_dynkin("E7")), 2);
    EXPECT_EQ(cartan_det(parse_dynkin("E8")), 1);
}

TEST(NegativeDefinite, RejectsNonDefiniteAndAsymmetric) {
    EXPECT_FALSE(is_negative_definite(IntegerMatrix{{0}}));
    EXPECT_FALSE(is_negative_definite(IntegerMatrix{{2}}));
    // affine A2 (a cycle of three -2 curves) is only semi-definite
    EXPECT_FALSE(is_negative_definite(IntegerMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));
    EXPECT_FALSE(is_negative_definite(IntegerMatrix{{-1, 2}, {2, -1}}));
    EXPECT_TRUE(is_negative_definite(IntegerMatrix{{-3, 1}, {1, -2}}));
    EXPECT_THROW(is_negative_definite(IntegerMatrix{{-2, 1}, {0, -2}}), NotSymmetric);
}
