#include <gtest/gtest.h>

#include <array>
#include <sstream>

#include "gdseq/bigcount.hpp"

using gdseq::BigCount;

TEST(BigCount, LimbsRoundTrip) {
    const std::array<std::uint64_t, 3> limbs{0xffffffffffffffffULL, 0x1ULL, 0x0ULL};
    const BigCount v = BigCount::from_limbs(limbs);
    EXPECT_EQ(v.to_string(), "36893488147419103231");
    EXPECT_EQ(v.bit_length(), 65U);
    EXPECT_TRUE(v.is_odd());
}

TEST(BigCount, StringRoundTrip) {
    const std::string digits = "123456789012345678901234567890";
    EXPECT_EQ(BigCount::from_string(digits).to_string(), digits);
    EXPECT_EQ(BigCount::from_string("0").to_string(), "0");
    EXPECT_THROW(BigCount::from_string("12a"), std::invalid_argument);
    EXPECT_THROW(BigCount::from_string(""), std::invalid_argument);
}

TEST(BigCount, Arithmetic) {
    BigCount a = BigCount::from_string("100000000000000000000");
    const BigCount b(7);
    EXPECT_EQ((a * b).to_string(), "700000000000000000000");
    EXPECT_EQ((a / b).to_string(), "14285714285714285714");
    EXPECT_EQ((a % b).to_u64(), 2U);
    EXPECT_EQ((a - a).is_zero(), true);
    EXPECT_THROW(BigCount(1) - BigCount(2), std::domain_error);
    EXPECT_LT(b, a);
    EXPECT_THROW((void)a.to_u64(), std::overflow_error);
}

TEST(BigCount, Log2AndStream) {
    EXPECT_DOUBLE_EQ(BigCount(1024).log2(), 10.0);
    const BigCount huge = BigCount::from_string("1" + std::string(400, '0'));
    EXPECT_NEAR(huge.log2(), 400 * 3.321928094887362, 1e-9);
    std::ostringstream os;
    os << BigCount(42);
    EXPECT_EQ(os.str(), "42");
}
