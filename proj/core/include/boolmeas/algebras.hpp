#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "boolmeas/clopen.hpp"

namespace boolmeas {

inline constexpr unsigned kMaxAtoms = 64;

// The powerset of k labelled atoms.
class FiniteSetAlgebra {
 public:
  explicit FiniteSetAlgebra(std::vector<std::string> labels);
  // Atoms labelled "a", "b", ... (then "a26", "a27", ... past z).
  static FiniteSetAlgebra with_atoms(unsigned k);

  unsigned atom_count() const noexcept { return static_cast<unsigned>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<unsigned> atom_index(const std::string& label) const;

  friend bool operator==(const FiniteSetAlgebra&, const FiniteSetAlgebra&) = default;

 private:
  std::vector<std::string> labels_;
};

// Element of a FiniteSetAlgebra: bit i set iff atom i belongs to it.
struct FiniteElement {
  std::uint64_t bits = 0;
  unsigned atom_count = 0;

  static FiniteElement zero(unsigned k) { return {0, k}; }
  static FiniteElement unit(unsigned k);
  static FiniteElement atom(unsigned k, unsigned i) { return {std::uint64_t{1} << i, k}; }

  bool contains(unsigned atom) const { return (bits >> atom) & 1U; }
  bool is_zero() const { return bits == 0; }

  friend bool operator==(const FiniteElement&, const FiniteElement&) = default;
};

// Bitstring over atoms, character i for atom i.
std::string to_bitstring(const FiniteElement& e);
FiniteElement parse_bitstring(const std::string& bits);

// Every element of the k-atom algebra, in bit order.
std::vector<FiniteElement> all_elements(unsigned k);

inline constexpr unsigned kMaxCantorSupport = 24;

// Clopen subset of 2^omega in canonical form: a minimal support S of
// generator indices and the set of admissible patterns S -> {0,1}. Pattern
// bit j is the value at support()[j]. Zero has empty support and no
// patterns; the unit has empty support and the single empty pattern.
class CantorClopen {
 public:
  CantorClopen() = default;
  // Canonicalizes; throws ValidationError on unsorted/duplicate support or
  // patterns out of range.
  CantorClopen(std::vector<unsigned> support, std::vector<std::uint64_t> patterns);

  static CantorClopen zero() { return {}; }
  static CantorClopen unit();
  // C_n = {x : x(n) = 1}.
  static CantorClopen generator(unsigned n);

  const std::vector<unsigned>& support() const noexcept { return support_; }
  const std::vector<std::uint64_t>& patterns() const noexcept { return patterns_; }
  bool is_zero() const noexcept { return patterns_.empty(); }
  bool is_unit() const noexcept { return support_.empty() && patterns_.size() == 1; }

  // Patterns of this set re-expressed over a superset of its support.
  std::vector<std::uint64_t> patterns_over(const std::vector<unsigned>& wider) const;

  friend bool operator==(const CantorClopen&, const CantorClopen&) = default;

 private:
  std::vector<unsigned> support_;
  std::vector<std::uint64_t> patterns_;
};

// Finite subset of omega, or the complement of one.
struct FiniteCofinite {
  std::vector<std::uint64_t> finite;  // sorted, unique
  bool cofinite = false;

  static FiniteCofinite of(std::vector<std::uint64_t> points, bool cofinite = false);
  bool contains(std::uint64_t n) const;

  friend bool operator==(const FiniteCofinite&, const FiniteCofinite&) = default;
};

// Elementary conjunction of generators and complemented generators.
struct Chunk {
  std::vector<unsigned> positive;
  std::vector<unsigned> negative;

  CantorClopen to_clopen() const;
  std::string describe() const;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

// All 3^m - 1 chunks with positive/negative supports inside {0..m-1}.
std::vector<Chunk> chunks_below(unsigned m);

using Element = std::variant<FiniteElement, CantorClopen, FiniteCofinite>;

enum class AlgebraKind { finite, cantor, finite_cofinite };
AlgebraKind kind_of(const Element& e);
std::string to_string(AlgebraKind k);

// Canonical meet/join/complement within one presentation. Mixing
// presentations (or finite algebras of different size) throws
// ValidationError. `b` is ignored for complement.
Element element_ops(BoolOp op, const Element& a, const std::optional<Element>& b = std::nullopt);

Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element complement(const Element& a);
bool is_zero(const Element& e);
bool is_unit(const Element& e);

CantorClopen meet(const CantorClopen& a, const CantorClopen& b);
CantorClopen join(const CantorClopen& a, const CantorClopen& b);
CantorClopen complement(const CantorClopen& a);
FiniteCofinite meet(const FiniteCofinite& a, const FiniteCofinite& b);
FiniteCofinite join(const FiniteCofinite& a, const FiniteCofinite& b);
FiniteCofinite complement(const FiniteCofinite& a);

// Digit embedding C_n -> {x in [0,1) : binary digit n of x is 1}.
ClopenSet cantor_to_interval(const CantorClopen& c);

struct SikorskiVerdict {
  bool extendable = false;
  // Vanishing polynomial of the domain whose image does not vanish.
  std::optional<std::string> counterexample;
  ClopenSet counterexample_image;
};

// Atom assignment on a finite algebra: extendable iff the images are
// pairwise disjoint and join to the unit.
SikorskiVerdict sikorski_check(const FiniteSetAlgebra& algebra, std::span<const ClopenSet> atom_images);

// Generators of the free algebra: every assignment extends.
SikorskiVerdict sikorski_check(const std::map<unsigned, ClopenSet>& generator_images);

// Structural-recursion extension of an atom assignment.
ClopenSet extend_atoms(std::span<const ClopenSet> atom_images, const FiniteElement& e);

}  // namespace boolmeas
