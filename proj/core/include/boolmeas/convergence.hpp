#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolmeas/algebras.hpp"
#include "boolmeas/names.hpp"

namespace boolmeas {

// A computable sequence of homomorphisms together with its intended limit.
//
//  bit-flip:  member n = bit_flip(., n) o base on the Cantor algebra; the
//             limit is the base.
//  principal: member n is A -> [n in A] on the finite-cofinite algebra; the
//             limit is the homomorphism of the cofinite ultrafilter.
//  constant:  every member equals the limit.
class HomSequence {
 public:
  enum class Kind { bit_flip, principal, constant };

  static HomSequence bit_flip(Homomorphism base);
  static HomSequence principal();
  static HomSequence constant(Homomorphism h);

  Kind kind() const noexcept { return kind_; }
  const Homomorphism& limit() const noexcept { return limit_; }
  Homomorphism member(std::uint64_t n) const;

 private:
  HomSequence(Kind kind, Homomorphism limit) : kind_(kind), limit_(std::move(limit)) {}

  Kind kind_;
  Homomorphism limit_;
};

std::string to_string(HomSequence::Kind k);

// d_n = fn_distance(member n (a), limit (a)) for n = 0..N.
std::vector<Rational> pointwise_report(const HomSequence& seq, const Element& a, unsigned n_max);

struct Defect {
  Rational sup;
  std::size_t witness_index = 0;
  Element witness;
};

// Largest distance between member n and the limit over a nonempty family;
// the witness is the first member attaining it.
Defect uniform_defect(const HomSequence& seq, std::uint64_t n, const std::vector<Element>& family);

// {C_0..C_N} on the Cantor algebra; {0}..{N} and their complements on the
// finite-cofinite algebra; the atoms of a finite domain.
std::vector<Element> canonical_test_family(const HomSequence& seq, unsigned n_max);

// C_0..C_s, {0}..{s}, or the atoms of a finite domain.
std::vector<Element> generator_elements(const HomSequence& seq, unsigned s);

struct Stabilization {
  Element element;
  // Least m with d_n = 0 for every m <= n <= N, if d_N = 0.
  std::optional<unsigned> index;
};

struct NontrivialityReport {
  unsigned support_bound = 0;
  unsigned horizon = 0;
  bool pointwise = false;
  bool uniform = true;
  std::vector<Stabilization> stabilization;
  std::vector<Defect> defects;  // one per n = 0..N
  bool nontrivial() const { return pointwise && !uniform; }
};

// Pointwise holds iff N > s and every generator of support <= s stabilizes
// at distance 0 by N. Uniform fails iff some n with s < n <= N has defect
// >= 1/2 on the canonical test family.
NontrivialityReport nontriviality_verdict(const HomSequence& seq, unsigned s, unsigned n_max);

// Short identifier for report rows.
std::string describe(const Element& e);

}  // namespace boolmeas
