#include <gtest/gtest.h>

#include "gdseq/alloc_model.hpp"

using namespace gdseq;

TEST(AllocModel, KnownRows) {
    EXPECT_EQ(f1(10), BigCount(20736));
    EXPECT_EQ(f4(10), BigCount(2030));
    EXPECT_EQ(f4(20), BigCount(99736));
    EXPECT_EQ(f4(80), BigCount(146132702));
    EXPECT_THROW(f1(3), std::invalid_argument);
    EXPECT_THROW(f4(3), std::invalid_argument);
}

TEST(AllocModel, RatioRoundsHalfToEven) {
    EXPECT_EQ(format_ratio(BigCount(1), BigCount(3)), "0.3333333");
    EXPECT_EQ(format_ratio(BigCount(2), BigCount(3)), "0.6666667");
    // 0.00000005 exactly -> ties to even (0)
    EXPECT_EQ(format_ratio(BigCount(1), BigCount(20000000)), "0.0000000");
    // 0.00000015 exactly -> ties to even (2)
    EXPECT_EQ(format_ratio(BigCount(3), BigCount(20000000)), "0.0000002");
    EXPECT_EQ(format_ratio(BigCount(5), BigCount(4), 2), "1.25");
    EXPECT_EQ(format_ratio(BigCount(1), BigCount(8), 2), "0.12");
    EXPECT_THROW(format_ratio(BigCount(1), BigCount(0)), std::domain_error);
}

TEST(AllocModelProperty, RaggedBelowRectangular) {
    for (int n = 4; n <= 200; ++n) {
        EXPECT_LT(f4(n), f1(n)) << n;
    }
}

TEST(AllocModel, TableRowsInOrder) {
    const auto rows = alloc_table({10, 20});
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(rows[0].n, 10);
    EXPECT_EQ(rows[0].ratio, "0.0978974");
    EXPECT_EQ(rows[1].ratio, "0.0947452");
}
