#include "qbs/bitstring.h"

#include <gtest/gtest.h>

#include <random>

using namespace qbs;

TEST(bitstring, first_bit_is_least_significant) {
    auto b = BitString::from_string("01");
    EXPECT_EQ(b.to_integer(), 2u);
    EXPECT_EQ(b[1], 0);
    EXPECT_EQ(b[2], 1);
    EXPECT_EQ(BitString::from_integer(6, 3).to_string(), "011");
}

TEST(bitstring, integer_round_trip) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        int n = 1 + static_cast<int>(rng() % 40);
        uint64_t x = rng() & ((uint64_t{1} << n) - 1);
        auto b = BitString::from_integer(x, n);
        ASSERT_EQ(b.size(), n);
        ASSERT_EQ(b.to_integer(), x);
        ASSERT_EQ(BitString::from_string(b.to_string()), b);
    }
}

TEST(bitstring, rejects_bad_input) {
    EXPECT_THROW(BitString::from_string("012"), std::invalid_argument);
    EXPECT_THROW(BitString::from_integer(4, 2), std::out_of_range);
    EXPECT_THROW(BitString(std::vector<uint8_t>{0, 2}), std::invalid_argument);
}

TEST(bitstring, popcount) {
    EXPECT_EQ(BitString::from_string("10110").popcount(), 3);
    EXPECT_EQ(BitString::zeros(5).popcount(), 0);
    EXPECT_EQ(BitString::ones(4).to_integer(), 15u);
}
