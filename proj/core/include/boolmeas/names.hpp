#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "boolmeas/algebras.hpp"
#include "boolmeas/clopen.hpp"
#include "boolmeas/measures.hpp"

namespace boolmeas {

// Image of Cantor generators that have no explicit image.
enum class TailRule { digit_identity, zero, one };

std::string to_string(TailRule t);
TailRule parse_tail_rule(const std::string& s);

// Boolean homomorphism from an algebra presentation into the interval
// model; reading phi(A) as the truth value of "A is in the ultrafilter"
// makes it a name for an ultrafilter.
class Homomorphism {
 public:
  // Atom images must be pairwise disjoint and join to the unit; otherwise
  // ValidationError carrying the Sikorski counterexample.
  static Homomorphism on_finite(FiniteSetAlgebra algebra, std::vector<ClopenSet> atom_images);
  static Homomorphism on_cantor(std::map<std::uint64_t, ClopenSet> generator_images,
                                TailRule tail = TailRule::digit_identity);
  // Images of singletons {n}; unlisted singletons map to 0. Images must be
  // pairwise disjoint.
  static Homomorphism on_finite_cofinite(std::map<std::uint64_t, ClopenSet> singleton_images);

  // The digit embedding of the Cantor algebra.
  static Homomorphism digit_identity() { return on_cantor({}); }

  AlgebraKind domain_kind() const noexcept { return kind_; }
  const FiniteSetAlgebra& algebra() const;  // finite domain only
  const std::map<std::uint64_t, ClopenSet>& images() const noexcept { return images_; }
  TailRule tail() const noexcept { return tail_; }

  // phi(C_n) on the Cantor algebra.
  ClopenSet generator_image(std::uint64_t n) const;
  // phi({n}) on the finite-cofinite algebra.
  ClopenSet singleton_image(std::uint64_t n) const;
  // phi(atom i) on a finite algebra.
  const ClopenSet& atom_image(unsigned i) const;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;

 private:
  Homomorphism() = default;

  AlgebraKind kind_ = AlgebraKind::cantor;
  std::optional<FiniteSetAlgebra> algebra_;
  std::map<std::uint64_t, ClopenSet> images_;
  std::vector<ClopenSet> atom_images_;
  TailRule tail_ = TailRule::digit_identity;
};

ClopenSet evaluate_hom(const Homomorphism& phi, const Element& a);

// lambda o phi.
Measure induced_measure(const Homomorphism& phi);

// Atom i goes to [cum_{i-1}, cum_i) of cumulative weights. Rejects measures
// that are not strictly positive, naming the null atom.
Homomorphism metric_embedding(const FiniteSetAlgebra& algebra, const Measure& mu);

// SplitMix64: state += 0x9e3779b97f4a7c15, then the standard mix.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Binary digits of a pseudorandom point: the outputs of SplitMix64(seed),
// each consumed most significant bit first.
struct BitStreamPoint {
  std::uint64_t seed = 0;

  friend bool operator==(const BitStreamPoint&, const BitStreamPoint&) = default;
};

// A point of [0,1) standing in for the generic filter.
using SamplePoint = std::variant<Rational, BitStreamPoint>;

inline constexpr unsigned kMaxStreamBits = 4096;

// Half-open membership. A stream point is resolved by reading digits until
// its dyadic prefix interval lies inside or outside `a`; if kMaxStreamBits
// do not decide, the point is taken to be the prefix's left endpoint.
bool contains(const ClopenSet& a, const SamplePoint& x);

// `count` stream points whose seeds are successive outputs of
// SplitMix64(seed).
std::vector<SamplePoint> sample_points(std::uint64_t seed, std::size_t count);

// The ultrafilter {A : x in phi(A)}.
class UltrafilterOracle {
 public:
  UltrafilterOracle(Homomorphism phi, SamplePoint x) : phi_(std::move(phi)), x_(std::move(x)) {}
  bool accepts(const Element& a) const { return contains(evaluate_hom(phi_, a), x_); }

 private:
  Homomorphism phi_;
  SamplePoint x_;
};

UltrafilterOracle name_at_point(const Homomorphism& phi, const SamplePoint& x);

struct AntichainPart {
  unsigned atom = 0;
  ClopenSet part;
};

// p_n = phi(atom n): the maximal antichain realized by a name over a finite
// algebra.
std::vector<AntichainPart> purely_atomic_antichain(const Homomorphism& phi);

// Maximal antichain with all parts of measure < 1/n, or the failure witness.
PartitionResult antichain_ladder(const Measure& mu, unsigned n);

}  // namespace boolmeas
