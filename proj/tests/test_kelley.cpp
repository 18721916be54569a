#include <gtest/gtest.h>

#include "boolmeas/error.hpp"
#include "boolmeas/kelley.hpp"
#include "boolmeas/simplex.hpp"
#include "test_support.hpp"

namespace boolmeas {
namespace {

using testing::q;

KelleyInstance instance(unsigned k, std::initializer_list<const char*> members) {
  KelleyInstance inst{FiniteSetAlgebra::with_atoms(k), {}};
  for (const char* m : members) inst.family.push_back(parse_bitstring(m));
  return inst;
}

// Witness is a probability vector and every member gets at least `value`;
// the certificate's own ratio matches `value`.
void expect_valid(const KelleyInstance& inst, const KelleyResult& r) {
  Rational total = 0;
  for (const auto& w : r.witness) {
    EXPECT_GE(w, 0);
    total += w;
  }
  EXPECT_EQ(total, q(1));
  Rational least = 2;
  for (const auto& a : inst.family) {
    Rational m = 0;
    for (unsigned i = 0; i < a.atom_count; ++i) {
      if (a.contains(i)) m += r.witness[i];
    }
    least = std::min(least, m);
  }
  EXPECT_EQ(least, r.value);
  EXPECT_EQ(max_intersecting_count(inst, r.certificate.multiplicity), r.certificate.max_intersecting);
  EXPECT_EQ(r.certificate.ratio(), r.value);
}

TEST(KelleyLp, Examples) {
  const auto unit = instance(3, {"111"});
  EXPECT_EQ(kelley_lp(unit).value, q(1));

  const auto singletons = instance(3, {"100", "010", "001"});
  const auto r1 = kelley_lp(singletons);
  EXPECT_EQ(r1.value, q(1, 3));
  EXPECT_EQ(r1.witness, (std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3)}));
  expect_valid(singletons, r1);

  const auto pairs = instance(3, {"110", "011", "101"});
  const auto r2 = kelley_lp(pairs);
  EXPECT_EQ(r2.value, q(2, 3));
  expect_valid(pairs, r2);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(intersection_number_bruteforce(instance(2, {"11"}), 5).value, q(1));
  const auto s = intersection_number_bruteforce(instance(3, {"100", "010", "001"}), 3);
  EXPECT_EQ(s.value, q(1, 3));
  EXPECT_EQ(s.best.multiplicity, (std::vector<std::uint64_t>{1, 1, 1}));
  const auto p = intersection_number_bruteforce(instance(3, {"110", "011", "101"}), 3);
  EXPECT_EQ(p.value, q(2, 3));
  EXPECT_EQ(p.best.max_intersecting, 2U);
  EXPECT_THROW(intersection_number_bruteforce(instance(3, {"110"}), kMaxBruteForceSize + 1), CapExceeded);
}

TEST(SupportsDecision, Examples) {
  const auto a3 = FiniteSetAlgebra::with_atoms(3);
  const auto v1 = supports_decision(a3, {parse_bitstring("100"), parse_bitstring("010"), parse_bitstring("001")}, 3);
  EXPECT_EQ(v1.lp.value, q(1, 3));
  EXPECT_TRUE(v1.agrees);

  std::vector<FiniteElement> all;
  for (const auto& e : all_elements(3)) {
    if (!e.is_zero()) all.push_back(e);
  }
  EXPECT_EQ(supports_decision(a3, all).lp.value, q(1, 3));
  EXPECT_EQ(supports_decision(a3, {FiniteElement::unit(3), FiniteElement::unit(3)}).lp.value, q(1));
}

TEST(KelleyInstance, Validation) {
  EXPECT_THROW(kelley_lp(instance(3, {})), ValidationError);
  EXPECT_THROW(kelley_lp(instance(3, {"000"})), ValidationError);
  KelleyInstance mixed = instance(3, {"100"});
  mixed.family.push_back(parse_bitstring("10"));
  EXPECT_THROW(kelley_lp(mixed), ValidationError);
}

TEST(KelleyLp, MatchesVertexEnumeration) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(rng() % 5);
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    KelleyInstance inst{FiniteSetAlgebra::with_atoms(k), {}};
    const unsigned m = 1 + static_cast<unsigned>(rng() % 5);
    for (unsigned i = 0; i < m; ++i) {
      std::uint64_t bits = rng() & mask;
      if (bits == 0) bits = 1;
      inst.family.push_back({bits, k});
    }
    const auto r = kelley_lp(inst);
    EXPECT_EQ(r.value, testing::kelley_vertex_oracle(k, inst.family));
    expect_valid(inst, r);
  }
}

TEST(KelleyLp, WeakDualityAgainstBruteForce) {
  // every multiset ratio bounds the LP value from above
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    KelleyInstance inst{FiniteSetAlgebra::with_atoms(4), {}};
    for (int i = 0; i < 3; ++i) inst.family.push_back({1 + rng() % 15, 4});
    const auto lp = kelley_lp(inst);
    const auto brute = intersection_number_bruteforce(inst, 6);
    EXPECT_LE(lp.value, brute.value);
    for (int t = 0; t < 10; ++t) {
      std::vector<std::uint64_t> mult(3);
      std::uint64_t n = 0;
      for (auto& x : mult) n += (x = rng() % 4);
      if (n == 0) continue;
      EXPECT_LE(lp.value, make_rational(Integer(max_intersecting_count(inst, mult)), Integer(n)));
    }
  }
}

TEST(KelleyLp, MonotoneUnderFamilyExtension) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    KelleyInstance inst{FiniteSetAlgebra::with_atoms(4), {}};
    inst.family.push_back({1 + rng() % 15, 4});
    Rational prev = kelley_lp(inst).value;
    for (int i = 0; i < 4; ++i) {
      inst.family.push_back({1 + rng() % 15, 4});
      const Rational v = kelley_lp(inst).value;
      EXPECT_LE(v, prev);
      prev = v;
    }
  }
}

TEST(Simplex, SmallPackingProblem) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6
  const auto s = solve_packing_lp({{q(1), q(2)}, {q(3), q(1)}}, {q(4), q(6)}, {q(1), q(1)});
  EXPECT_EQ(s.status, LpSolution::Status::optimal);
  EXPECT_EQ(s.objective, q(14, 5));
  EXPECT_EQ(s.primal, (std::vector<Rational>{q(8, 5), q(6, 5)}));
  EXPECT_EQ(s.dual[0] * 4 + s.dual[1] * 6, s.objective);
  const auto u = solve_packing_lp({{q(-1)}}, {q(1)}, {q(1)});
  EXPECT_EQ(u.status, LpSolution::Status::unbounded);
}

}  // namespace
}  // namespace boolmeas
