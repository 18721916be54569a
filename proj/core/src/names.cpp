#include "boolmeas/names.hpp"

#include "boolmeas/error.hpp"

namespace boolmeas {

std::string to_string(TailRule t) {
  switch (t) {
    case TailRule::digit_identity:
      return "digit-identity";
    case TailRule::zero:
      return "zero";
    case TailRule::one:
      return "one";
  }
  return "?";
}

TailRule parse_tail_rule(const std::string& s) {
  if (s == "digit-identity") return TailRule::digit_identity;
  if (s == "zero") return TailRule::zero;
  if (s == "one") return TailRule::one;
  throw ValidationError("tail", "unknown tail rule '" + s + "'");
}

Homomorphism Homomorphism::on_finite(FiniteSetAlgebra algebra, std::vector<ClopenSet> atom_images) {
  const auto verdict = sikorski_check(algebra, atom_images);
  if (!verdict.extendable) {
    throw ValidationError("images", "assignment does not extend: " + *verdict.counterexample +
                                        " vanishes but its image does not");
  }
  Homomorphism phi;
  phi.kind_ = AlgebraKind::finite;
  for (unsigned i = 0; i < atom_images.size(); ++i) phi.images_.emplace(i, atom_images[i]);
  phi.algebra_ = std::move(algebra);
  phi.atom_images_ = std::move(atom_images);
  phi.tail_ = TailRule::zero;
  return phi;
}

Homomorphism Homomorphism::on_cantor(std::map<std::uint64_t, ClopenSet> generator_images, TailRule tail) {
  Homomorphism phi;
  phi.kind_ = AlgebraKind::cantor;
  phi.images_ = std::move(generator_images);
  phi.tail_ = tail;
  return phi;
}

Homomorphism Homomorphism::on_finite_cofinite(std::map<std::uint64_t, ClopenSet> singleton_images) {
  ClopenSet seen;
  for (const auto& [n, img] : singleton_images) {
    if (!disjoint(seen, img)) {
      throw ValidationError("images/" + std::to_string(n),
                            "singleton images must be pairwise disjoint");
    }
    seen = join(seen, img);
  }
  Homomorphism phi;
  phi.kind_ = AlgebraKind::finite_cofinite;
  phi.images_ = std::move(singleton_images);
  phi.tail_ = TailRule::zero;
  return phi;
}

const FiniteSetAlgebra& Homomorphism::algebra() const {
  if (!algebra_) throw ValidationError("homomorphism domain is not a finite algebra");
  return *algebra_;
}

ClopenSet Homomorphism::generator_image(std::uint64_t n) const {
  if (auto it = images_.find(n); it != images_.end()) return it->second;
  switch (tail_) {
    case TailRule::digit_identity:
      return digit_set(static_cast<unsigned>(n));
    case TailRule::zero:
      return {};
    case TailRule::one:
      return ClopenSet::unit();
  }
  return {};
}

ClopenSet Homomorphism::singleton_image(std::uint64_t n) const {
  if (auto it = images_.find(n); it != images_.end()) return it->second;
  return {};
}

const ClopenSet& Homomorphism::atom_image(unsigned i) const { return atom_images_.at(i); }

namespace {

ClopenSet evaluate_cantor(const Homomorphism& phi, const CantorClopen& c) {
  if (c.is_zero()) return {};
  if (c.is_unit()) return ClopenSet::unit();
  bool identity = phi.tail() == TailRule::digit_identity;
  for (auto i : c.support()) identity = identity && !phi.images().contains(i);
  if (identity) return cantor_to_interval(c);

  // Join over patterns of the meet of literal images.
  std::vector<ClopenSet> pos, neg;
  for (auto i : c.support()) {
    pos.push_back(phi.generator_image(i));
    neg.push_back(complement(pos.back()));
  }
  ClopenSet out;
  for (auto p : c.patterns()) {
    ClopenSet term = ClopenSet::unit();
    for (std::size_t j = 0; j < pos.size() && !term.is_zero(); ++j) {
      term = meet(term, ((p >> j) & 1U) ? pos[j] : neg[j]);
    }
    out = join(out, term);
  }
  return out;
}

ClopenSet evaluate_finite_cofinite(const Homomorphism& phi, const FiniteCofinite& a) {
  ClopenSet out;
  for (auto n : a.finite) out = join(out, phi.singleton_image(n));
  return a.cofinite ? complement(out) : out;
}

}  // namespace

ClopenSet evaluate_hom(const Homomorphism& phi, const Element& a) {
  if (kind_of(a) != phi.domain_kind()) {
    throw ValidationError("element of the " + to_string(kind_of(a)) +
                          " presentation given to a homomorphism on the " +
                          to_string(phi.domain_kind()) + " presentation");
  }
  switch (phi.domain_kind()) {
    case AlgebraKind::finite: {
      const auto& e = std::get<FiniteElement>(a);
      std::vector<ClopenSet> images;
      for (unsigned i = 0; i < phi.algebra().atom_count(); ++i) images.push_back(phi.atom_image(i));
      return extend_atoms(images, e);
    }
    case AlgebraKind::cantor:
      return evaluate_cantor(phi, std::get<CantorClopen>(a));
    case AlgebraKind::finite_cofinite:
      return evaluate_finite_cofinite(phi, std::get<FiniteCofinite>(a));
  }
  return {};
}

Measure induced_measure(const Homomorphism& phi) { return Measure::induced(phi); }

Homomorphism metric_embedding(const FiniteSetAlgebra& algebra, const Measure& mu) {
  const auto verdict = is_strictly_positive(mu, algebra);
  if (!verdict.strictly_positive) {
    const unsigned atom = *verdict.null_atom;
    throw ValidationError("weights/" + std::to_string(atom),
                          "measure is not strictly positive: atom " + std::to_string(atom) + " ('" +
                              algebra.labels()[atom] + "') is null");
  }
  const auto w = atom_weights(mu);
  std::vector<ClopenSet> images;
  Rational cum = 0;
  for (const auto& wi : w) {
    images.push_back(ClopenSet::interval(cum, cum + wi));
    cum += wi;
  }
  return Homomorphism::on_finite(algebra, std::move(images));
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Where the dyadic interval [k/2^d, (k+1)/2^d) sits relative to `a`.
enum class Placement { inside, outside, straddles };

Placement place(const ClopenSet& a, const Rational& lo, const Rational& hi) {
  for (const auto& i : a.intervals()) {
    if (i.hi <= lo) continue;
    if (i.lo >= hi) break;
    if (i.lo <= lo && hi <= i.hi) return Placement::inside;
    return Placement::straddles;
  }
  return Placement::outside;
}

bool stream_contains(const ClopenSet& a, std::uint64_t seed) {
  if (a.is_zero()) return false;
  if (a.is_unit()) return true;
  SplitMix64 gen(seed);
  Integer index = 0;
  std::uint64_t word = 0;
  for (unsigned d = 1; d <= kMaxStreamBits; ++d) {
    if ((d - 1) % 64 == 0) word = gen.next();
    const unsigned bit = (word >> (63 - (d - 1) % 64)) & 1U;
    index = index * 2 + bit;
    const Rational w = dyadic(d);
    const Rational lo = Rational(index) * w;
    switch (place(a, lo, lo + w)) {
      case Placement::inside:
        return true;
      case Placement::outside:
        return false;
      case Placement::straddles:
        break;
    }
  }
  return a.contains(Rational(index) * dyadic(kMaxStreamBits));
}

}  // namespace

bool contains(const ClopenSet& a, const SamplePoint& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return a.contains(*r);
  return stream_contains(a, std::get<BitStreamPoint>(x).seed);
}

std::vector<SamplePoint> sample_points(std::uint64_t seed, std::size_t count) {
  SplitMix64 master(seed);
  std::vector<SamplePoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(BitStreamPoint{master.next()});
  return out;
}

UltrafilterOracle name_at_point(const Homomorphism& phi, const SamplePoint& x) {
  if (const auto* r = std::get_if<Rational>(&x); r != nullptr && (*r < 0 || *r >= 1)) {
    throw ValidationError("point", "sample point " + to_string(*r) + " is outside [0,1)");
  }
  return UltrafilterOracle(phi, x);
}

std::vector<AntichainPart> purely_atomic_antichain(const Homomorphism& phi) {
  if (phi.domain_kind() != AlgebraKind::finite) {
    throw ValidationError("purely_atomic_antichain needs a finite domain");
  }
  std::vector<AntichainPart> out;
  for (unsigned i = 0; i < phi.algebra().atom_count(); ++i) out.push_back({i, phi.atom_image(i)});
  return out;
}

PartitionResult antichain_ladder(const Measure& mu, unsigned n) {
  if (n == 0) throw ValidationError("n", "n must be positive");
  if (mu.domain_kind() != AlgebraKind::finite) {
    throw ValidationError("antichain_ladder needs a measure on a finite algebra");
  }
  return atomless_partition(mu, make_rational(1, n));
}

}  // namespace boolmeas
