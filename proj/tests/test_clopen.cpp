#include <gtest/gtest.h>

#include "boolmeas/clopen.hpp"
#include "boolmeas/error.hpp"
#include "test_support.hpp"

namespace boolmeas {
namespace {

using testing::clopen;
using testing::iv;
using testing::q;

TEST(Normalize, MergesAdjacentAndOverlapping) {
  EXPECT_EQ(clopen({{q(0), q(1, 2)}, {q(1, 2), q(1)}}), ClopenSet::unit());
  EXPECT_EQ(clopen({{q(1, 4), q(3, 4)}, {q(0), q(1, 2)}}), iv(0, 1, 3, 4));
  const auto canonical = clopen({{q(1, 3), q(1, 2)}, {q(2, 3), q(1)}});
  ASSERT_EQ(canonical.intervals().size(), 2U);
  EXPECT_EQ(canonical.intervals()[0], (Interval{q(1, 3), q(1, 2)}));
  EXPECT_EQ(canonical.intervals()[1], (Interval{q(2, 3), q(1)}));
}

TEST(Normalize, ReportsMalformedPairPosition) {
  const std::vector<Interval> raw{{q(0), q(1, 2)}, {q(3, 4), q(1, 2)}};
  try {
    normalize(raw);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.where(), "[1]");
  }
  const std::vector<Interval> out_of_range{{q(1, 2), q(3, 2)}};
  EXPECT_THROW(normalize(out_of_range), ValidationError);
  const std::vector<Interval> negative{{q(-1, 2), q(1, 2)}};
  EXPECT_THROW(normalize(negative), ValidationError);
}

TEST(Combine, Examples) {
  EXPECT_EQ(combine(BoolOp::meet, iv(0, 1, 1, 2), iv(1, 4, 3, 4)), iv(1, 4, 1, 2));
  EXPECT_EQ(combine(BoolOp::complement, iv(0, 1, 1, 2)), iv(1, 2, 1, 1));
  EXPECT_TRUE(combine(BoolOp::symmetric_difference, iv(0, 1, 1, 2), iv(0, 1, 1, 2)).is_zero());
  EXPECT_THROW(combine(BoolOp::join, iv(0, 1, 1, 2)), ValidationError);
}

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda_measure(clopen({{q(0), q(1, 2)}, {q(3, 4), q(1)}})), q(3, 4));
  EXPECT_EQ(lambda_measure(ClopenSet{}), q(0));
  EXPECT_EQ(lambda_measure(iv(1, 3, 2, 3)), q(1, 3));
}

TEST(FnDistance, Examples) {
  EXPECT_EQ(fn_distance(iv(0, 1, 1, 2), iv(1, 4, 3, 4)), q(1, 2));
  const auto a = iv(1, 3, 5, 6);
  EXPECT_EQ(fn_distance(a, a), q(0));
  EXPECT_EQ(fn_distance(iv(0, 1, 1, 2), iv(1, 2, 1, 1)), q(1));
}

TEST(Contains, HalfOpenConvention) {
  const auto a = iv(1, 4, 1, 2);
  EXPECT_TRUE(a.contains(q(1, 4)));
  EXPECT_FALSE(a.contains(q(1, 2)));
  EXPECT_FALSE(ClopenSet::unit().contains(q(1)));
  EXPECT_TRUE(ClopenSet::unit().contains(q(0)));
}

// Oracle: x in T^-n a  iff  T^n x in a, checked on a grid finer than every
// endpoint of the expected answer.
void expect_preimage_matches_grid(const ClopenSet& a, unsigned n, const ClopenSet& expected) {
  for (const auto& x : testing::grid(3 * 64)) {
    Rational y = x;
    for (unsigned i = 0; i < n; ++i) y = testing::doubling(y);
    EXPECT_EQ(expected.contains(x), a.contains(y)) << "x=" << to_string(x);
  }
}

TEST(ShiftPreimage, Examples) {
  const auto expected1 = clopen({{q(0), q(1, 4)}, {q(1, 2), q(3, 4)}});
  expect_preimage_matches_grid(iv(0, 1, 1, 2), 1, expected1);
  EXPECT_EQ(shift_preimage(iv(0, 1, 1, 2), 1), expected1);

  const auto expected2 = clopen({{q(1, 4), q(1, 2)}, {q(3, 4), q(1)}});
  expect_preimage_matches_grid(iv(1, 2, 1, 1), 1, expected2);
  EXPECT_EQ(shift_preimage(iv(1, 2, 1, 1), 1), expected2);

  const auto a = iv(1, 3, 5, 6);
  EXPECT_EQ(shift_preimage(a, 0), a);
}

TEST(ShiftPreimage, AgreesWithGridOracleOnRandomSets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testing::random_clopen(rng, {2, 3, 4, 6});
    const unsigned n = static_cast<unsigned>(rng() % 4);
    expect_preimage_matches_grid(a, n, shift_preimage(a, n));
  }
}

TEST(ShiftedMeetMeasure, MatchesMaterializedPreimage) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_clopen(rng);
    const auto b = testing::random_clopen(rng);
    const unsigned n = static_cast<unsigned>(rng() % 7);
    EXPECT_EQ(shifted_meet_measure(a, n, b), lambda_measure(meet(shift_preimage(a, n), b)));
  }
}

TEST(BitFlip, Examples) {
  EXPECT_EQ(bit_flip(iv(0, 1, 1, 2), 0), iv(1, 2, 1, 1));
  EXPECT_EQ(bit_flip(iv(0, 1, 1, 2), 1), iv(0, 1, 1, 2));
  EXPECT_EQ(bit_flip(iv(0, 1, 1, 4), 1), iv(1, 4, 1, 2));
}

TEST(BitFlip, AgreesWithPointwiseDigitFlip) {
  // x in flip_n(a) iff flip_n(x) in a.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testing::random_clopen(rng, {3, 4, 6, 12});
    const unsigned n = static_cast<unsigned>(rng() % 4);
    const auto image = bit_flip(a, n);
    for (const auto& x : testing::grid(12 * 16)) {
      EXPECT_EQ(image.contains(x), a.contains(testing::flip_digit(x, n)));
    }
  }
}

TEST(DyadicRefine, ExamplesAndErrors) {
  EXPECT_EQ(dyadic_refine(iv(0, 1, 1, 2), 1), (std::vector<DyadicCylinder>{{1, 0}}));
  EXPECT_EQ(dyadic_refine(iv(0, 1, 1, 2), 2), (std::vector<DyadicCylinder>{{2, 0}, {2, 1}}));
  try {
    dyadic_refine(iv(1, 3, 1, 2), 2);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("non-dyadic endpoint 1/3"), std::string::npos);
  }
  EXPECT_THROW(dyadic_refine(iv(1, 8, 1, 2), 2), ValidationError);
}

TEST(DigitSet, FirstDigits) {
  EXPECT_EQ(digit_set(0), iv(1, 2, 1, 1));
  EXPECT_EQ(digit_set(1), clopen({{q(1, 4), q(1, 2)}, {q(3, 4), q(1)}}));
  for (unsigned n = 0; n < 6; ++n) EXPECT_EQ(lambda_measure(digit_set(n)), q(1, 2));
}

// Property suite over random canonical sets.
class ClopenLaws : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ClopenLaws, BooleanAlgebraLaws) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_clopen(rng);
    const auto b = testing::random_clopen(rng);
    const auto c = testing::random_clopen(rng);
    EXPECT_EQ(meet(a, meet(b, c)), meet(meet(a, b), c));
    EXPECT_EQ(join(a, join(b, c)), join(join(a, b), c));
    EXPECT_EQ(meet(a, join(b, c)), join(meet(a, b), meet(a, c)));
    EXPECT_EQ(join(a, meet(b, c)), meet(join(a, b), join(a, c)));
    EXPECT_EQ(complement(meet(a, b)), join(complement(a), complement(b)));
    EXPECT_EQ(complement(join(a, b)), meet(complement(a), complement(b)));
    EXPECT_TRUE(meet(a, complement(a)).is_zero());
    EXPECT_TRUE(join(a, complement(a)).is_unit());
    EXPECT_EQ(complement(complement(a)), a);
    // modularity
    EXPECT_EQ(lambda_measure(join(a, b)) + lambda_measure(meet(a, b)), lambda_measure(a) + lambda_measure(b));
    // normalize idempotent
    EXPECT_EQ(normalize(a.intervals()), a);
  }
}

TEST_P(ClopenLaws, FnDistanceIsAMetric) {
  std::mt19937_64 rng(GetParam() + 100);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_clopen(rng);
    const auto b = testing::random_clopen(rng);
    const auto c = testing::random_clopen(rng);
    EXPECT_EQ(fn_distance(a, b), fn_distance(b, a));
    EXPECT_LE(fn_distance(a, c), fn_distance(a, b) + fn_distance(b, c));
    EXPECT_EQ(fn_distance(a, b) == 0, a == b);
  }
}

TEST_P(ClopenLaws, ShiftIsMeasurePreservingEndomorphism) {
  std::mt19937_64 rng(GetParam() + 200);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testing::random_clopen(rng);
    const auto b = testing::random_clopen(rng);
    const unsigned m = static_cast<unsigned>(rng() % 3);
    const unsigned n = static_cast<unsigned>(rng() % 3);
    EXPECT_EQ(lambda_measure(shift_preimage(a, n)), lambda_measure(a));
    EXPECT_EQ(shift_preimage(meet(a, b), n), meet(shift_preimage(a, n), shift_preimage(b, n)));
    EXPECT_EQ(shift_preimage(complement(a), n), complement(shift_preimage(a, n)));
    EXPECT_EQ(shift_preimage(a, m + n), shift_preimage(shift_preimage(a, n), m));
  }
}

TEST_P(ClopenLaws, BitFlipIsMeasurePreservingInvolution) {
  std::mt19937_64 rng(GetParam() + 300);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = testing::random_clopen(rng);
    const auto b = testing::random_clopen(rng);
    const unsigned n = static_cast<unsigned>(rng() % 8);
    EXPECT_EQ(bit_flip(bit_flip(a, n), n), a);
    EXPECT_EQ(lambda_measure(bit_flip(a, n)), lambda_measure(a));
    EXPECT_EQ(bit_flip(meet(a, b), n), meet(bit_flip(a, n), bit_flip(b, n)));
    EXPECT_EQ(bit_flip(complement(a), n), complement(bit_flip(a, n)));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ClopenLaws, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace boolmeas
