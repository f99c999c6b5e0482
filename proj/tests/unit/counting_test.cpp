#include <gtest/gtest.h>

#include "gdseq/counting.hpp"
#include "gdseq/oracle.hpp"

using namespace gdseq;

TEST(Counting, SmallReport) {
    const CountReport r = count_all_improved(10, FillOptions{1, 0, {}});
    ASSERT_EQ(r.rows.size(), 9U);
    const std::uint64_t d[] = {1, 2, 7, 20, 71, 240, 871, 3148, 11655};
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        EXPECT_EQ(r.rows[i].n, static_cast<int>(i) + 2);
        EXPECT_EQ(r.rows[i].D, BigCount(d[i]));
    }
    EXPECT_FALSE(check_report_identities(r).has_value());
}

TEST(Counting, LengthTwoWithoutTable) {
    const CountReport r = count_all_improved(2);
    ASSERT_EQ(r.rows.size(), 1U);
    EXPECT_EQ(r.rows[0].D, BigCount(1));
    EXPECT_EQ(r.rows[0].D0, BigCount(2));
}

TEST(Counting, IdentityCheckerCatchesCorruption) {
    CountReport r = count_all_improved(8, FillOptions{1, 0, {}});
    r.rows[3].H += BigCount(1);
    EXPECT_TRUE(check_report_identities(r).has_value());
    CountReport s = count_all_improved(8, FillOptions{1, 0, {}});
    s.rows[4].D0 += BigCount(1);
    EXPECT_TRUE(check_report_identities(s).has_value());
}

TEST(Counting, BaselineAgreesWithImproved) {
    const CountReport a = count_all_improved(14, FillOptions{1, 0, {}});
    const CountReport b = count_all_baseline(14, FillOptions{1, 0, {}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(count_L_baseline(14), a.rows.back().L);
}

TEST(Counting, DirectRouteAgrees) {
    const CountReport r = count_all_improved(10);
    for (const CountRow& row : r.rows) {
        EXPECT_EQ(d_direct(row.n), row.D) << row.n;
    }
    EXPECT_THROW(d_direct(kDirectMaxN + 1), std::invalid_argument);
}

TEST(Counting, LprimeSymmetric) {
    for (int n = 4; n <= 14; ++n) {
        const auto series = lprime_series(n);
        const long long top = static_cast<long long>(n) * (n - 1);
        for (const auto& [N, v] : series) {
            const long long mirror = top - N;
            for (const auto& [M, w] : series) {
                if (M == mirror) {
                    EXPECT_EQ(v, w) << n << ' ' << N;
                }
            }
            if (N <= 16) {
                EXPECT_EQ(v, oracle::lprime_bruteforce(N, n)) << n << ' ' << N;
            }
        }
    }
}

TEST(Counting, GraphicalPartitions) {
    for (long long N = 0; N <= 14; N += 2) {
        EXPECT_EQ(g_count(N), oracle::g_bruteforce(N)) << N;
    }
    EXPECT_THROW(g_count(7), std::invalid_argument);
}

TEST(Counting, FourVariateEntryPoint) {
    EXPECT_EQ(p_nkls_dp(12, 4, 5, 3), oracle::p_nkls_bruteforce(12, 4, 5, 3));
    EXPECT_EQ(p_nkls_dp(12, 4, 5, -1), BigCount(0));
    EXPECT_EQ(p_nkls_dp(40, 10, 10, 100), p_nkl_dp(40, 10, 10));
}
