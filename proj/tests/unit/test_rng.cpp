#include <gtest/gtest.h>

#include "lfol/rng.hpp"

namespace lfol {
namespace {

// Reference values computed with an independent Python implementation.

TEST(SplitMix64, MatchesReferenceVector) {
  SplitMix64 sm(1234567);
  EXPECT_EQ(sm(), 6457827717110365317ULL);
  EXPECT_EQ(sm(), 3203168211198807973ULL);
  EXPECT_EQ(sm(), 9817491932198370423ULL);
}

TEST(Xoshiro256, MatchesReferenceVectors) {
  Xoshiro256 zero(0);
  EXPECT_EQ(zero(), 11091344671253066420ULL);
  EXPECT_EQ(zero(), 13793997310169335082ULL);
  EXPECT_EQ(zero(), 1900383378846508768ULL);
  EXPECT_EQ(zero(), 7684712102626143532ULL);

  Xoshiro256 g(42);
  EXPECT_EQ(g(), 1546998764402558742ULL);
  EXPECT_EQ(g(), 6990951692964543102ULL);
  EXPECT_EQ(g(), 12544586762248559009ULL);
  EXPECT_EQ(g(), 17057574109182124193ULL);
}

TEST(Xoshiro256, BelowUsesMultiplyShift) {
  Xoshiro256 g(42);
  const std::uint64_t want[] = {83, 378, 680, 924, 991};
  for (auto w : want) EXPECT_EQ(g.below(1000), w);
}

TEST(Xoshiro256, BelowStaysInRange) {
  Xoshiro256 g(3);
  for (int i = 0; i < 10000; ++i) ASSERT_LT(g.below(7), 7u);
}

}  // namespace
}  // namespace lfol
