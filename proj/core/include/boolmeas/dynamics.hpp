#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolmeas/algebras.hpp"
#include "boolmeas/clopen.hpp"
#include "boolmeas/measures.hpp"
#include "boolmeas/names.hpp"

namespace boolmeas {

// lambda(T^-n a meet b) for n = 0..N under the doubling map T.
std::vector<Rational> mixing_table(const ClopenSet& a, const ClopenSet& b, unsigned n_max);

// rho_n = T^-n o psi for a metric embedding psi of a finite algebra. Each
// rho_n is a homomorphism with lambda o rho_n = lambda o psi.
class CenteringSequence {
 public:
  explicit CenteringSequence(Homomorphism base);

  const Homomorphism& base() const noexcept { return base_; }
  // Materialized member; n is limited by kMaxShiftMaterialize.
  Homomorphism member(unsigned n) const;
  // rho_n(a) meet p != 0, decided without materializing rho_n.
  bool meets(unsigned n, const FiniteElement& a, const ClopenSet& p) const;

 private:
  Homomorphism base_;
};

// Least n <= cap with rho_n(a) meet p != 0; CapExceeded if none.
unsigned centering_witness(const CenteringSequence& seq, const FiniteElement& a, const DyadicCylinder& p,
                           unsigned cap);

struct CoverEntry {
  unsigned atom = 0;
  DyadicCylinder cylinder;
  unsigned witness = 0;
};

struct CoverReport {
  unsigned depth = 0;
  std::vector<CoverEntry> entries;  // atom-major, cylinders in index order
  unsigned max_witness = 0;
};

// Witness table for every atom against every depth-g cylinder, with
// psi = metric_embedding(algebra, mu). Weights must be dyadic rationals.
CoverReport centering_cover_report(const FiniteSetAlgebra& algebra, const Measure& mu, unsigned g,
                                   unsigned cap);

struct SymmetryViolation {
  Chunk a;
  Chunk b;
  // 0: phiA(A) & phiB(B) = 0 but phiB(A) & phiA(B) != 0; 1: the reverse.
  unsigned side = 0;
};

struct SymmetryReport {
  bool symmetric = true;
  unsigned support_bound = 0;
  std::size_t pairs_checked = 0;
  std::vector<SymmetryViolation> violations;
};

// Exhaustive over ordered pairs of chunks with support inside {0..m-1}.
SymmetryReport symmetry_check(const Homomorphism& phi_a, const Homomorphism& phi_b, unsigned m);

// Automorphism of the finite subalgebra of the interval model generated by
// {phiA(C_n), phiB(C_n) : n < m}, given as a permutation of its atoms.
class PartialAutomorphism {
 public:
  PartialAutomorphism(std::vector<ClopenSet> atoms, std::vector<std::size_t> image);

  const std::vector<ClopenSet>& atoms() const noexcept { return atoms_; }
  const std::vector<std::size_t>& atom_image() const noexcept { return image_; }

  // Decomposes `x` into atoms; nullopt if x is outside the subalgebra.
  std::optional<std::vector<std::size_t>> decompose(const ClopenSet& x) const;
  // Throws ValidationError when x is outside the subalgebra.
  ClopenSet apply(const ClopenSet& x) const;
  // Element given as a bitmask over atoms().
  ClopenSet element(std::uint64_t atom_mask) const;
  std::uint64_t apply_mask(std::uint64_t atom_mask) const;

 private:
  std::vector<ClopenSet> atoms_;
  std::vector<std::size_t> image_;
};

struct SwapResult {
  std::optional<PartialAutomorphism> automorphism;
  SymmetryReport report;
};

SwapResult swap_automorphism(const Homomorphism& phi_a, const Homomorphism& phi_b, unsigned m);

}  // namespace boolmeas
