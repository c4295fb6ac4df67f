#include <gtest/gtest.h>

#include "cnum/errors.hpp"
#include "cnum/index.hpp"

namespace cnum {
namespace {

constexpr Index kUp = Index::Vastavic;
constexpr Index kDown = Index::Calpanic;
constexpr Index kBoth[] = {kUp, kDown};

TEST(IndexMul, FullTable) {
    EXPECT_EQ(index_mul(kUp, kUp), kUp);
    EXPECT_EQ(index_mul(kUp, kDown), kDown);
    EXPECT_EQ(index_mul(kDown, kUp), kUp);
    EXPECT_EQ(index_mul(kDown, kDown), kDown);
}

TEST(IndexMul, RightProjectionExhaustive) {
    for (const Index a : kBoth) {
        for (const Index b : kBoth) {
            EXPECT_EQ(index_mul(a, b), b);
        }
    }
}

TEST(IndexMul, NonCommutative) {
    EXPECT_NE(index_mul(kDown, kUp), index_mul(kUp, kDown));
}

TEST(IndexMul, AssociativeExhaustive) {
    for (const Index a : kBoth) {
        for (const Index b : kBoth) {
            for (const Index c : kBoth) {
                EXPECT_EQ(index_mul(index_mul(a, b), c), index_mul(a, index_mul(b, c)));
            }
        }
    }
}

TEST(IndexDiv, SameIndex) {
    EXPECT_EQ(index_div(kUp, kUp), kUp);
    EXPECT_EQ(index_div(kDown, kDown), kDown);
}

TEST(IndexDiv, MixedThrows) {
    EXPECT_THROW(index_div(kUp, kDown), MixedIndexDivision);
    EXPECT_THROW(index_div(kDown, kUp), MixedIndexDivision);
}

TEST(IndexAbs, IdentityAndIdempotent) {
    for (const Index a : kBoth) {
        EXPECT_EQ(index_abs(a), a);
        EXPECT_EQ(index_abs(index_abs(a)), index_abs(a));
    }
}

TEST(IndexText, Rendering) {
    EXPECT_EQ(to_string(kUp), "up");
    EXPECT_EQ(to_string(kDown), "down");
}

}  // namespace
}  // namespace cnum
