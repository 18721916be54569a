#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "boolmeas/algebras.hpp"
#include "boolmeas/rational.hpp"

namespace boolmeas {

class Homomorphism;

// Finitely additive probability measure, either given by atom weights on a
// finite algebra or induced as lambda o phi by a homomorphism phi.
class Measure {
 public:
  enum class Kind { atoms, induced };

  // Weights must be nonnegative and sum to exactly 1. Zero weights are
  // allowed so that non-strictly-positive measures can be represented.
  static Measure atoms(FiniteSetAlgebra algebra, std::vector<Rational> weights);
  static Measure dirac(FiniteSetAlgebra algebra, unsigned atom);
  static Measure uniform(FiniteSetAlgebra algebra);
  static Measure induced(Homomorphism phi);

  Kind kind() const noexcept { return kind_; }
  AlgebraKind domain_kind() const;

  // atoms kind only
  const FiniteSetAlgebra& algebra() const;
  const std::vector<Rational>& weights() const;
  // induced kind only
  const Homomorphism& hom() const;

 private:
  Measure() = default;

  Kind kind_ = Kind::atoms;
  std::optional<FiniteSetAlgebra> algebra_;
  std::vector<Rational> weights_;
  std::shared_ptr<const Homomorphism> hom_;
};

// Exact measure of `a`; rejects elements of another presentation.
Rational evaluate_measure(const Measure& mu, const Element& a);

// Per-atom weights of a measure whose domain is a finite algebra.
std::vector<Rational> atom_weights(const Measure& mu);

struct PositivityVerdict {
  bool strictly_positive = false;
  std::optional<unsigned> null_atom;
};

PositivityVerdict is_strictly_positive(const Measure& mu, const FiniteSetAlgebra& algebra);

struct PartitionResult {
  bool success = false;
  // On success: a partition of unity, each part of measure < eps.
  std::vector<Element> parts;
  std::vector<Rational> part_measures;
  // On failure: an indivisible piece with measure >= eps.
  std::optional<Element> witness;
  Rational witness_measure;
};

// Finest available partition of unity into parts of measure < eps. On a
// finite algebra the parts are the atoms. For an induced measure on the
// Cantor algebra the parts are the full chunks over {0..d-1} for the least
// d that works, searched up to kMaxPartitionDepth.
inline constexpr unsigned kMaxPartitionDepth = 16;
PartitionResult atomless_partition(const Measure& mu, const Rational& eps);

struct NetResult {
  std::size_t size = 0;
  std::vector<FiniteElement> centers;
  // False when the result is a greedy upper bound (size cap or search
  // budget exceeded).
  bool exact = false;
};

inline constexpr unsigned kMaxExactNetAtoms = 16;
inline constexpr unsigned kMaxNetAtoms = 20;

// Minimal number of open d_mu-balls of radius eps covering the algebra.
NetResult epsilon_net_size(const Measure& mu, const FiniteSetAlgebra& algebra, const Rational& eps,
                           std::uint64_t node_budget = 2'000'000);

// Truncated sum of 2^-(n+1) delta_{U_n}; the last term's weight is doubled
// so the total mass is exactly 1.
Measure measure_from_centering(const FiniteSetAlgebra& algebra, std::span<const unsigned> ultrafilters);

}  // namespace boolmeas
