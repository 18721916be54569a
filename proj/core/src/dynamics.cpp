#include "boolmeas/dynamics.hpp"

#include <algorithm>
#include <map>

#include "boolmeas/error.hpp"

namespace boolmeas {

std::vector<Rational> mixing_table(const ClopenSet& a, const ClopenSet& b, unsigned n_max) {
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(shifted_meet_measure(a, n, b));
  return out;
}

CenteringSequence::CenteringSequence(Homomorphism base) : base_(std::move(base)) {
  if (base_.domain_kind() != AlgebraKind::finite) {
    throw ValidationError("centering sequence needs a homomorphism on a finite algebra");
  }
}

Homomorphism CenteringSequence::member(unsigned n) const {
  std::vector<ClopenSet> images;
  for (unsigned i = 0; i < base_.algebra().atom_count(); ++i) {
    images.push_back(shift_preimage(base_.atom_image(i), n));
  }
  return Homomorphism::on_finite(base_.algebra(), std::move(images));
}

bool CenteringSequence::meets(unsigned n, const FiniteElement& a, const ClopenSet& p) const {
  return shifted_meet_measure(evaluate_hom(base_, a), n, p) > 0;
}

unsigned centering_witness(const CenteringSequence& seq, const FiniteElement& a, const DyadicCylinder& p,
                           unsigned cap) {
  if (a.is_zero()) throw ValidationError("a", "centering witness needs a nonzero element");
  if (evaluate_hom(seq.base(), a).is_zero()) {
    throw ValidationError("a", "base homomorphism sends the element to 0");
  }
  const ClopenSet cell = cylinder_set(p);
  for (unsigned n = 0; n <= cap; ++n) {
    if (seq.meets(n, a, cell)) return n;
  }
  throw CapExceeded("centering_witness: no n <= " + std::to_string(cap) + " meets cylinder (" +
                    std::to_string(p.depth) + ", " + std::to_string(p.index) + ")");
}

CoverReport centering_cover_report(const FiniteSetAlgebra& algebra, const Measure& mu, unsigned g,
                                   unsigned cap) {
  if (g > kMaxShiftMaterialize) {
    throw CapExceeded("centering_cover_report: depth " + std::to_string(g) + " exceeds " +
                      std::to_string(kMaxShiftMaterialize));
  }
  const auto weights = atom_weights(mu);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!is_dyadic(weights[i])) {
      throw ValidationError("weights/" + std::to_string(i),
                            "weight " + to_string(weights[i]) + " is not a dyadic rational");
    }
  }
  const CenteringSequence seq(metric_embedding(algebra, mu));
  CoverReport report;
  report.depth = g;
  const unsigned k = algebra.atom_count();
  for (unsigned atom = 0; atom < k; ++atom) {
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << g); ++idx) {
      const DyadicCylinder cyl{g, idx};
      const unsigned w = centering_witness(seq, FiniteElement::atom(k, atom), cyl, cap);
      report.entries.push_back({atom, cyl, w});
      report.max_witness = std::max(report.max_witness, w);
    }
  }
  return report;
}

SymmetryReport symmetry_check(const Homomorphism& phi_a, const Homomorphism& phi_b, unsigned m) {
  if (phi_a.domain_kind() != AlgebraKind::cantor || phi_b.domain_kind() != AlgebraKind::cantor) {
    throw ValidationError("symmetry_check needs homomorphisms on the Cantor algebra");
  }
  const auto chunks = chunks_below(m);
  std::vector<ClopenSet> a_img, b_img;
  for (const auto& c : chunks) {
    const Element e = c.to_clopen();
    a_img.push_back(evaluate_hom(phi_a, e));
    b_img.push_back(evaluate_hom(phi_b, e));
  }
  SymmetryReport report;
  report.support_bound = m;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    for (std::size_t j = 0; j < chunks.size(); ++j) {
      ++report.pairs_checked;
      const bool ab_zero = disjoint(a_img[i], b_img[j]);
      const bool ba_zero = disjoint(b_img[i], a_img[j]);
      if (ab_zero == ba_zero) continue;
      report.violations.push_back({chunks[i], chunks[j], ab_zero ? 0U : 1U});
    }
  }
  report.symmetric = report.violations.empty();
  return report;
}

PartialAutomorphism::PartialAutomorphism(std::vector<ClopenSet> atoms, std::vector<std::size_t> image)
    : atoms_(std::move(atoms)), image_(std::move(image)) {
  if (atoms_.size() != image_.size()) throw ValidationError("partial automorphism: bad atom permutation");
}

std::optional<std::vector<std::size_t>> PartialAutomorphism::decompose(const ClopenSet& x) const {
  std::vector<std::size_t> parts;
  ClopenSet rebuilt;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const ClopenSet overlap = meet(atoms_[i], x);
    if (overlap.is_zero()) continue;
    if (overlap != atoms_[i]) return std::nullopt;
    parts.push_back(i);
    rebuilt = join(rebuilt, atoms_[i]);
  }
  if (rebuilt != x) return std::nullopt;
  return parts;
}

ClopenSet PartialAutomorphism::apply(const ClopenSet& x) const {
  const auto parts = decompose(x);
  if (!parts) throw ValidationError("element lies outside the generated subalgebra");
  ClopenSet out;
  for (auto i : *parts) out = join(out, atoms_[image_[i]]);
  return out;
}

ClopenSet PartialAutomorphism::element(std::uint64_t atom_mask) const {
  if (atoms_.size() > 64) throw CapExceeded("atom masks need at most 64 atoms");
  ClopenSet out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if ((atom_mask >> i) & 1U) out = join(out, atoms_[i]);
  }
  return out;
}

std::uint64_t PartialAutomorphism::apply_mask(std::uint64_t atom_mask) const {
  if (atoms_.size() > 64) throw CapExceeded("atom masks need at most 64 atoms");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if ((atom_mask >> i) & 1U) out |= std::uint64_t{1} << image_[i];
  }
  return out;
}

SwapResult swap_automorphism(const Homomorphism& phi_a, const Homomorphism& phi_b, unsigned m) {
  SwapResult result;
  result.report = symmetry_check(phi_a, phi_b, m);
  if (!result.report.symmetric) return result;

  // Generators g_{2n} = phiA(C_n), g_{2n+1} = phiB(C_n); the swap exchanges
  // the two bits of every pair in a sign pattern.
  std::vector<ClopenSet> gens;
  for (unsigned n = 0; n < m; ++n) {
    gens.push_back(phi_a.generator_image(n));
    gens.push_back(phi_b.generator_image(n));
  }
  std::vector<std::pair<std::uint64_t, ClopenSet>> cells{{0, ClopenSet::unit()}};
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const ClopenSet neg = complement(gens[g]);
    std::vector<std::pair<std::uint64_t, ClopenSet>> next;
    for (auto& [pattern, cell] : cells) {
      ClopenSet in = meet(cell, gens[g]);
      ClopenSet out = meet(cell, neg);
      if (!in.is_zero()) next.emplace_back(pattern | (std::uint64_t{1} << g), std::move(in));
      if (!out.is_zero()) next.emplace_back(pattern, std::move(out));
    }
    cells = std::move(next);
  }
  auto swap_pattern = [m](std::uint64_t p) {
    std::uint64_t q = 0;
    for (unsigned n = 0; n < m; ++n) {
      const std::uint64_t a = (p >> (2 * n)) & 1U, b = (p >> (2 * n + 1)) & 1U;
      q |= (b << (2 * n)) | (a << (2 * n + 1));
    }
    return q;
  };
  std::map<std::uint64_t, std::size_t> index_of;
  for (std::size_t i = 0; i < cells.size(); ++i) index_of[cells[i].first] = i;

  std::vector<ClopenSet> atoms;
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto it = index_of.find(swap_pattern(cells[i].first));
    if (it == index_of.end()) {
      // A nonvanishing pattern whose swap vanishes contradicts symmetry.
      throw std::logic_error("swap_automorphism: symmetric pair failed the extension criterion");
    }
    atoms.push_back(cells[i].second);
    image.push_back(it->second);
  }
  result.automorphism.emplace(std::move(atoms), std::move(image));
  return result;
}

}  // namespace boolmeas
