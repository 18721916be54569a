#include <gtest/gtest.h>

#include "boolmeas/algebras.hpp"
#include "boolmeas/error.hpp"
#include "test_support.hpp"

namespace boolmeas {
namespace {

using testing::clopen;
using testing::iv;
using testing::q;

TEST(ElementOps, Examples) {
  const Element fc = FiniteCofinite::of({0, 1});
  EXPECT_EQ(std::get<FiniteCofinite>(complement(fc)), FiniteCofinite::of({0, 1}, true));

  const Element c0 = CantorClopen::generator(0);
  EXPECT_TRUE(is_zero(meet(c0, complement(c0))));

  const Element x = parse_bitstring("100");
  const Element y = parse_bitstring("010");
  EXPECT_EQ(to_bitstring(std::get<FiniteElement>(join(x, y))), "110");
}

TEST(ElementOps, RejectsMixedPresentations) {
  EXPECT_THROW(meet(Element{CantorClopen::generator(0)}, Element{FiniteCofinite::of({1})}), ValidationError);
  EXPECT_THROW(join(Element{parse_bitstring("10")}, Element{parse_bitstring("100")}), ValidationError);
}

TEST(Bitstring, RoundTrip) {
  for (const auto& e : all_elements(4)) EXPECT_EQ(parse_bitstring(to_bitstring(e)), e);
  EXPECT_THROW(parse_bitstring("10x"), ValidationError);
}

TEST(CantorClopen, CanonicalFormDropsRedundantIndices) {
  // Patterns {00, 10} over {0,1}: bit 0 is free, so the set is C_1 complement.
  const CantorClopen c({0, 1}, {0b00, 0b01});
  EXPECT_EQ(c, complement(CantorClopen::generator(1)));
  EXPECT_EQ(CantorClopen({2}, {0, 1}), CantorClopen::unit());
  EXPECT_EQ(CantorClopen({2, 5}, {}), CantorClopen::zero());
  EXPECT_THROW(CantorClopen({1, 1}, {0}), ValidationError);
  EXPECT_THROW(CantorClopen({1}, {2}), ValidationError);
}

TEST(CantorToInterval, Examples) {
  EXPECT_EQ(cantor_to_interval(CantorClopen::generator(0)), iv(1, 2, 1, 1));
  EXPECT_EQ(cantor_to_interval(CantorClopen::generator(1)), clopen({{q(1, 4), q(1, 2)}, {q(3, 4), q(1)}}));
  EXPECT_EQ(cantor_to_interval(meet(CantorClopen::generator(0), CantorClopen::generator(1))), iv(3, 4, 1, 1));
}

TEST(CantorToInterval, AgreesWithDigitOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = testing::random_cantor(rng, 5);
    const auto image = cantor_to_interval(c);
    for (const auto& x : testing::grid(64)) {
      bool inside = false;
      for (auto p : c.patterns()) {
        bool match = true;
        for (std::size_t j = 0; j < c.support().size(); ++j) {
          if (testing::digit(x, c.support()[j]) != ((p >> j) & 1U)) match = false;
        }
        inside = inside || match;
      }
      EXPECT_EQ(image.contains(x), inside);
    }
  }
}

TEST(CantorToInterval, IsAMeasurePreservingHomomorphism) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testing::random_cantor(rng, 6);
    const auto b = testing::random_cantor(rng, 6);
    EXPECT_EQ(cantor_to_interval(meet(a, b)), meet(cantor_to_interval(a), cantor_to_interval(b)));
    EXPECT_EQ(cantor_to_interval(join(a, b)), join(cantor_to_interval(a), cantor_to_interval(b)));
    EXPECT_EQ(cantor_to_interval(complement(a)), complement(cantor_to_interval(a)));
    // pattern count over the support gives the measure
    const Rational expected = make_rational(static_cast<std::int64_t>(a.patterns().size()), 1) *
                              dyadic(static_cast<unsigned>(a.support().size()));
    EXPECT_EQ(lambda_measure(cantor_to_interval(a)), expected);
  }
}

TEST(CantorToInterval, ShiftMovesDigits) {
  for (unsigned n = 0; n < 6; ++n) {
    for (unsigned k = 0; k < 4; ++k) {
      EXPECT_EQ(shift_preimage(cantor_to_interval(CantorClopen::generator(k)), n),
                cantor_to_interval(CantorClopen::generator(k + n)));
    }
  }
}

TEST(Chunks, CountAndDescription) {
  EXPECT_EQ(chunks_below(1).size(), 2U);
  EXPECT_EQ(chunks_below(3).size(), 26U);
  EXPECT_EQ((Chunk{{0}, {1}}).describe(), "C0&C1'");
  EXPECT_EQ((Chunk{{0}, {1}}).to_clopen(), meet(CantorClopen::generator(0), complement(CantorClopen::generator(1))));
  for (const auto& c : chunks_below(3)) EXPECT_FALSE(c.to_clopen().is_zero());
}

TEST(Sikorski, Examples) {
  const auto alg = FiniteSetAlgebra::with_atoms(2);
  const std::vector<ClopenSet> good{iv(0, 1, 1, 2), iv(1, 2, 1, 1)};
  EXPECT_TRUE(sikorski_check(alg, good).extendable);

  const std::vector<ClopenSet> bad{iv(0, 1, 3, 4), iv(1, 2, 1, 1)};
  const auto v = sikorski_check(alg, bad);
  EXPECT_FALSE(v.extendable);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_EQ(v.counterexample_image, iv(1, 2, 3, 4));

  EXPECT_TRUE(sikorski_check({{0, iv(0, 1, 1, 3)}, {1, ClopenSet::unit()}}).extendable);
}

// Oracle: an atom assignment extends iff extend_atoms preserves every meet
// and complement, checked over the whole algebra.
bool extension_is_homomorphism(const std::vector<ClopenSet>& images) {
  const unsigned k = static_cast<unsigned>(images.size());
  const auto elems = all_elements(k);
  for (const auto& x : elems) {
    const auto fx = extend_atoms(images, x);
    if (extend_atoms(images, FiniteElement{FiniteElement::unit(k).bits & ~x.bits, k}) != complement(fx)) return false;
    for (const auto& y : elems) {
      if (extend_atoms(images, FiniteElement{x.bits & y.bits, k}) != meet(fx, extend_atoms(images, y))) return false;
    }
  }
  return true;
}

TEST(Sikorski, ExhaustiveOverSmallAssignments) {
  // Every assignment of depth-2 dyadic sets to up to 3 atoms.
  std::vector<ClopenSet> pool;
  for (unsigned m = 0; m < 16; ++m) {
    std::vector<Interval> raw;
    for (unsigned i = 0; i < 4; ++i) {
      if ((m >> i) & 1U) raw.push_back({q(i, 4), q(i + 1, 4)});
    }
    pool.push_back(normalize(raw));
  }
  const auto alg1 = FiniteSetAlgebra::with_atoms(1);
  const auto alg2 = FiniteSetAlgebra::with_atoms(2);
  for (const auto& a : pool) {
    const std::vector<ClopenSet> one{a};
    EXPECT_EQ(sikorski_check(alg1, one).extendable, extension_is_homomorphism(one));
    for (const auto& b : pool) {
      const std::vector<ClopenSet> two{a, b};
      EXPECT_EQ(sikorski_check(alg2, two).extendable, extension_is_homomorphism(two));
    }
  }
  const auto alg3 = FiniteSetAlgebra::with_atoms(3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<ClopenSet> three{pool[rng() % 16], pool[rng() % 16], pool[rng() % 16]};
    EXPECT_EQ(sikorski_check(alg3, three).extendable, extension_is_homomorphism(three));
  }
}

template <class Gen>
void check_boolean_laws(Gen gen, int trials) {
  for (int t = 0; t < trials; ++t) {
    const Element a = gen();
    const Element b = gen();
    const Element c = gen();
    EXPECT_EQ(meet(a, join(b, c)), join(meet(a, b), meet(a, c)));
    EXPECT_EQ(join(a, meet(b, c)), meet(join(a, b), join(a, c)));
    EXPECT_EQ(meet(a, meet(b, c)), meet(meet(a, b), c));
    EXPECT_EQ(meet(a, b), meet(b, a));
    EXPECT_EQ(join(a, b), join(b, a));
    EXPECT_EQ(complement(meet(a, b)), join(complement(a), complement(b)));
    EXPECT_EQ(complement(complement(a)), a);
    EXPECT_TRUE(is_zero(meet(a, complement(a))));
    EXPECT_TRUE(is_unit(join(a, complement(a))));
    EXPECT_EQ(join(a, meet(a, b)), a);
  }
}

TEST(BooleanLaws, FiniteAlgebra) {
  std::mt19937_64 rng(1);
  check_boolean_laws([&] { return Element{FiniteElement{rng() % 32, 5}}; }, 500);
}

TEST(BooleanLaws, CantorAlgebra) {
  std::mt19937_64 rng(2);
  check_boolean_laws([&] { return Element{testing::random_cantor(rng, 5)}; }, 500);
}

TEST(BooleanLaws, FiniteCofiniteAlgebra) {
  std::mt19937_64 rng(3);
  check_boolean_laws([&] { return Element{testing::random_finite_cofinite(rng)}; }, 500);
  const auto a = FiniteCofinite::of({2, 5}, true);
  EXPECT_FALSE(a.contains(2));
  EXPECT_TRUE(a.contains(3));
}

}  // namespace
}  // namespace boolmeas
