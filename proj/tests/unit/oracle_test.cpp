#include <gtest/gtest.h>

#include "gdseq/bounds.hpp"
#include "gdseq/oracle.hpp"
#include "gdseq/partition.hpp"

using namespace gdseq;

TEST(Oracle, SmallValues) {
    EXPECT_EQ(oracle::p_nkls_bruteforce(0, 0, 0, 0), BigCount(1));
    EXPECT_EQ(oracle::p_nkls_bruteforce(0, 3, 3, -1), BigCount(0));
    EXPECT_EQ(oracle::p_nkls_bruteforce(5, 0, 3, 4), BigCount(0));
    EXPECT_EQ(oracle::p_nkl_bruteforce(6, 3, 3), BigCount(3));
    EXPECT_EQ(oracle::p_nkl_bruteforce(10, 10, 10), BigCount(42));
}

TEST(Oracle, DegreeSequenceCounts) {
    const std::uint64_t d[] = {1, 2, 7, 20, 71, 240, 871, 3148, 11655};
    const std::uint64_t e[] = {1, 2, 9, 28, 110, 396, 1519, 5720, 21942};
    for (int n = 2; n <= 10; ++n) {
        EXPECT_EQ(oracle::d_bruteforce(n), BigCount(d[n - 2])) << n;
        EXPECT_EQ(oracle::e_bruteforce(n), BigCount(e[n - 2])) << n;
    }
}

TEST(Oracle, GraphicalPartitionCounts) {
    EXPECT_EQ(oracle::g_bruteforce(0), BigCount(1));
    EXPECT_EQ(oracle::g_bruteforce(2), BigCount(1));
    EXPECT_EQ(oracle::g_bruteforce(4), BigCount(2));
    EXPECT_EQ(oracle::g_bruteforce(6), BigCount(5));
    EXPECT_EQ(oracle::g_bruteforce(5), BigCount(0));
}

TEST(OracleProperty, MonotoneInEachArgument) {
    for (long long N = 0; N <= 14; ++N) {
        for (int k = 0; k <= 6; ++k) {
            for (int l = 0; l <= 6; ++l) {
                for (long long s = 0; s <= 10; ++s) {
                    const BigCount v = oracle::p_nkls_bruteforce(N, k, l, s);
                    EXPECT_LE(v, oracle::p_nkls_bruteforce(N, k, l, s + 1));
                    EXPECT_LE(v, oracle::p_nkls_bruteforce(N, k + 1, l, s));
                    EXPECT_LE(v, oracle::p_nkls_bruteforce(N, k, l + 1, s));
                }
            }
        }
    }
}

TEST(OracleProperty, SaturatesToThreeVariate) {
    for (long long N = 0; N <= 16; ++N) {
        for (int k = 0; k <= 6; ++k) {
            for (int l = 0; l <= 6; ++l) {
                EXPECT_EQ(oracle::p_nkls_bruteforce(N, k, l, N + 1), oracle::p_nkl_bruteforce(N, k, l));
            }
        }
    }
}

TEST(OracleProperty, GraphicalSplitsByLength) {
    for (long long N = 2; N <= 20; N += 2) {
        for (int l = 1; l <= 10; ++l) {
            EXPECT_EQ(oracle::gprime_bruteforce(N, l),
                      oracle::hprime_bruteforce(N, l) + oracle::lprime_bruteforce(N, l));
        }
    }
    for (int n = 2; n <= 8; ++n) {
        BigCount total;
        for (long long N = 2; N <= static_cast<long long>(n) * (n - 1); N += 2) {
            total += oracle::gprime_bruteforce(N, n);
        }
        EXPECT_EQ(total, oracle::d_bruteforce(n)) << n;
    }
}

TEST(OracleProperty, CorankExtremesWithinBounds) {
    for (long long N = 1; N <= 18; ++N) {
        for (int k = 1; k <= 7; ++k) {
            for (int l = 1; l <= 7; ++l) {
                const auto ext = oracle::corank_extremes_bruteforce(N, k, l);
                if (!ext) {
                    EXPECT_EQ(oracle::p_nkl_bruteforce(N, k, l), BigCount(0));
                    continue;
                }
                EXPECT_LE(ext->first, ext->second);
                EXPECT_LE(ext->second, m_upper(N, k)) << N << ' ' << k << ' ' << l;
            }
        }
    }
}
