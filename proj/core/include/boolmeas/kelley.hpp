#pragma once

#include <cstdint>
#include <vector>

#include "boolmeas/algebras.hpp"
#include "boolmeas/rational.hpp"

namespace boolmeas {

// Kelley's intersection number of a family F of nonzero elements,
//
//   I(F) = inf over finite multisets (A_1..A_n) from F of
//          max{|S| : S subset of {1..n}, meet of A_i (i in S) != 0} / n,
//
// equals max over probability measures mu of min over A in F of mu(A)
// (Kelley, "Measures on Boolean algebras", Pacific J. Math. 1959). On a
// finite algebra both sides are attained.

inline constexpr unsigned kMaxKelleyAtoms = 20;
inline constexpr std::size_t kMaxKelleyFamily = 20;
inline constexpr unsigned kMaxBruteForceSize = 12;

struct KelleyInstance {
  FiniteSetAlgebra algebra;
  std::vector<FiniteElement> family;

  // Throws ValidationError for an empty family, a zero member, or a member
  // from another algebra; CapExceeded beyond the documented caps.
  void validate() const;
};

// Multiset over the family given by multiplicities, together with the size
// of its largest sub-multiset with nonzero meet.
struct MultisetCertificate {
  std::vector<std::uint64_t> multiplicity;  // indexed like the family
  std::uint64_t size = 0;
  std::uint64_t max_intersecting = 0;

  Rational ratio() const { return make_rational(Integer(max_intersecting), Integer(size)); }
};

// Largest number of members of the multiset sharing an atom.
std::uint64_t max_intersecting_count(const KelleyInstance& instance,
                                     const std::vector<std::uint64_t>& multiplicity);

struct KelleyResult {
  Rational value;
  std::vector<Rational> witness;  // atom weights attaining `value`
  MultisetCertificate certificate;
};

// Exact LP optimum with witness measure and dual multiset certificate.
KelleyResult kelley_lp(const KelleyInstance& instance);

struct BruteForceResult {
  Rational value;
  MultisetCertificate best;
};

// The defining infimum restricted to multisets of size <= max_size.
BruteForceResult intersection_number_bruteforce(const KelleyInstance& instance, unsigned max_size);

struct SupportsVerdict {
  KelleyResult lp;
  BruteForceResult brute;
  unsigned brute_size = 0;
  bool agrees = false;
};

SupportsVerdict supports_decision(const FiniteSetAlgebra& algebra, std::vector<FiniteElement> family,
                                  unsigned brute_size = kMaxBruteForceSize);

}  // namespace boolmeas
