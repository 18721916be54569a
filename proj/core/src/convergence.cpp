#include "boolmeas/convergence.hpp"

#include "boolmeas/error.hpp"

namespace boolmeas {

HomSequence HomSequence::bit_flip(Homomorphism base) {
  if (base.domain_kind() != AlgebraKind::cantor) {
    throw ValidationError("bit-flip sequence needs a base on the Cantor algebra");
  }
  return HomSequence(Kind::bit_flip, std::move(base));
}

HomSequence HomSequence::principal() {
  return HomSequence(Kind::principal, Homomorphism::on_finite_cofinite({}));
}

HomSequence HomSequence::constant(Homomorphism h) { return HomSequence(Kind::constant, std::move(h)); }

std::string to_string(HomSequence::Kind k) {
  switch (k) {
    case HomSequence::Kind::bit_flip:
      return "bit-flip";
    case HomSequence::Kind::principal:
      return "principal";
    case HomSequence::Kind::constant:
      return "constant";
  }
  return "?";
}

Homomorphism HomSequence::member(std::uint64_t n) const {
  switch (kind_) {
    case Kind::bit_flip: {
      // Generators outside the explicit images and != n keep their tail
      // image: flipping digit n fixes digit sets of other digits and the
      // constants 0 and 1.
      std::map<std::uint64_t, ClopenSet> images;
      const unsigned digit = static_cast<unsigned>(n);
      for (const auto& [k, img] : limit_.images()) images.emplace(k, boolmeas::bit_flip(img, digit));
      if (!images.contains(n)) images.emplace(n, boolmeas::bit_flip(limit_.generator_image(n), digit));
      return Homomorphism::on_cantor(std::move(images), limit_.tail());
    }
    case Kind::principal:
      return Homomorphism::on_finite_cofinite({{n, ClopenSet::unit()}});
    case Kind::constant:
      return limit_;
  }
  return limit_;
}

std::vector<Rational> pointwise_report(const HomSequence& seq, const Element& a, unsigned n_max) {
  const ClopenSet target = evaluate_hom(seq.limit(), a);
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(fn_distance(evaluate_hom(seq.member(n), a), target));
  return out;
}

Defect uniform_defect(const HomSequence& seq, std::uint64_t n, const std::vector<Element>& family) {
  if (family.empty()) throw ValidationError("family", "test family is empty");
  const Homomorphism member = seq.member(n);
  Defect d{Rational(-1), 0, family.front()};
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Rational dist = fn_distance(evaluate_hom(member, family[i]), evaluate_hom(seq.limit(), family[i]));
    if (dist > d.sup) d = {dist, i, family[i]};
  }
  return d;
}

std::vector<Element> generator_elements(const HomSequence& seq, unsigned s) {
  std::vector<Element> out;
  switch (seq.limit().domain_kind()) {
    case AlgebraKind::cantor:
      for (unsigned k = 0; k <= s; ++k) out.emplace_back(CantorClopen::generator(k));
      break;
    case AlgebraKind::finite_cofinite:
      for (unsigned k = 0; k <= s; ++k) out.emplace_back(FiniteCofinite::of({k}));
      break;
    case AlgebraKind::finite: {
      const unsigned atoms = seq.limit().algebra().atom_count();
      for (unsigned i = 0; i < atoms; ++i) out.emplace_back(FiniteElement::atom(atoms, i));
      break;
    }
  }
  return out;
}

std::vector<Element> canonical_test_family(const HomSequence& seq, unsigned n_max) {
  auto out = generator_elements(seq, n_max);
  if (seq.limit().domain_kind() == AlgebraKind::finite_cofinite) {
    for (unsigned k = 0; k <= n_max; ++k) out.emplace_back(FiniteCofinite::of({k}, true));
  }
  return out;
}

NontrivialityReport nontriviality_verdict(const HomSequence& seq, unsigned s, unsigned n_max) {
  NontrivialityReport r;
  r.support_bound = s;
  r.horizon = n_max;

  r.pointwise = n_max > s;
  for (auto& g : generator_elements(seq, s)) {
    const auto d = pointwise_report(seq, g, n_max);
    std::optional<unsigned> index;
    for (unsigned m = n_max + 1; m-- > 0 && d[m] == 0;) index = m;
    r.pointwise = r.pointwise && index.has_value();
    r.stabilization.push_back({std::move(g), index});
  }

  const auto family = canonical_test_family(seq, n_max);
  const Rational half = make_rational(1, 2);
  r.uniform = true;
  for (unsigned n = 0; n <= n_max; ++n) {
    r.defects.push_back(uniform_defect(seq, n, family));
    if (n > s && r.defects.back().sup >= half) r.uniform = false;
  }
  return r;
}

std::string describe(const Element& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteElement>) {
          return to_bitstring(x);
        } else if constexpr (std::is_same_v<T, CantorClopen>) {
          if (x.is_zero()) return "0";
          if (x.is_unit()) return "1";
          if (x.patterns().size() == 1) {
            Chunk c;
            for (std::size_t j = 0; j < x.support().size(); ++j) {
              ((x.patterns()[0] >> j) & 1U ? c.positive : c.negative).push_back(x.support()[j]);
            }
            return c.describe();
          }
          std::string s = "{";
          for (std::size_t j = 0; j < x.support().size(); ++j) s += (j ? "," : "") + std::to_string(x.support()[j]);
          s += "}:";
          for (std::size_t i = 0; i < x.patterns().size(); ++i) {
            if (i) s += "|";
            for (std::size_t j = 0; j < x.support().size(); ++j) s += ((x.patterns()[i] >> j) & 1U) ? '1' : '0';
          }
          return s;
        } else {
          std::string s = x.cofinite ? "co{" : "{";
          for (std::size_t i = 0; i < x.finite.size(); ++i) s += (i ? "," : "") + std::to_string(x.finite[i]);
          return s + "}";
        }
      },
      e);
}

}  // namespace boolmeas
