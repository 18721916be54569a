#include "boolmeas/measures.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "boolmeas/error.hpp"
#include "boolmeas/names.hpp"

namespace boolmeas {

Measure Measure::atoms(FiniteSetAlgebra algebra, std::vector<Rational> weights) {
  if (weights.size() != algebra.atom_count()) {
    throw ValidationError("weights", "expected " + std::to_string(algebra.atom_count()) +
                                         " weights, got " + std::to_string(weights.size()));
  }
  Rational total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      throw ValidationError("weights/" + std::to_string(i), "negative weight " + to_string(weights[i]));
    }
    total += weights[i];
  }
  if (total != 1) throw ValidationError("weights", "weights sum to " + to_string(total) + ", not 1");
  Measure mu;
  mu.kind_ = Kind::atoms;
  mu.algebra_ = std::move(algebra);
  mu.weights_ = std::move(weights);
  return mu;
}

Measure Measure::dirac(FiniteSetAlgebra algebra, unsigned atom) {
  std::vector<Rational> w(algebra.atom_count(), Rational(0));
  w.at(atom) = 1;
  return atoms(std::move(algebra), std::move(w));
}

Measure Measure::uniform(FiniteSetAlgebra algebra) {
  const unsigned k = algebra.atom_count();
  return atoms(std::move(algebra), std::vector<Rational>(k, make_rational(1, k)));
}

Measure Measure::induced(Homomorphism phi) {
  Measure mu;
  mu.kind_ = Kind::induced;
  if (phi.domain_kind() == AlgebraKind::finite) mu.algebra_ = phi.algebra();
  mu.hom_ = std::make_shared<const Homomorphism>(std::move(phi));
  return mu;
}

AlgebraKind Measure::domain_kind() const {
  return kind_ == Kind::atoms ? AlgebraKind::finite : hom_->domain_kind();
}

const FiniteSetAlgebra& Measure::algebra() const {
  if (!algebra_) throw ValidationError("measure is not defined on a finite algebra");
  return *algebra_;
}

const std::vector<Rational>& Measure::weights() const {
  if (kind_ != Kind::atoms) throw ValidationError("induced measure has no explicit weights");
  return weights_;
}

const Homomorphism& Measure::hom() const {
  if (kind_ != Kind::induced) throw ValidationError("atom-weighted measure has no homomorphism");
  return *hom_;
}

Rational evaluate_measure(const Measure& mu, const Element& a) {
  if (mu.kind() == Measure::Kind::induced) return lambda_measure(evaluate_hom(mu.hom(), a));
  const auto* e = std::get_if<FiniteElement>(&a);
  if (e == nullptr || e->atom_count != mu.algebra().atom_count()) {
    throw ValidationError("element does not belong to the measure's " +
                          std::to_string(mu.algebra().atom_count()) + "-atom algebra");
  }
  Rational total = 0;
  for (unsigned i = 0; i < e->atom_count; ++i) {
    if (e->contains(i)) total += mu.weights()[i];
  }
  return total;
}

std::vector<Rational> atom_weights(const Measure& mu) {
  if (mu.kind() == Measure::Kind::atoms) return mu.weights();
  const unsigned k = mu.algebra().atom_count();
  std::vector<Rational> out;
  out.reserve(k);
  for (unsigned i = 0; i < k; ++i) out.push_back(evaluate_measure(mu, FiniteElement::atom(k, i)));
  return out;
}

PositivityVerdict is_strictly_positive(const Measure& mu, const FiniteSetAlgebra& algebra) {
  if (mu.domain_kind() != AlgebraKind::finite || !(mu.algebra() == algebra)) {
    throw ValidationError("measure is not defined on the given algebra");
  }
  const auto w = atom_weights(mu);
  for (unsigned i = 0; i < w.size(); ++i) {
    if (w[i] == 0) return {false, i};
  }
  return {true, std::nullopt};
}

namespace {

PartitionResult finite_partition(const Measure& mu, const Rational& eps) {
  const auto w = atom_weights(mu);
  const unsigned k = static_cast<unsigned>(w.size());
  PartitionResult r;
  for (unsigned i = 0; i < k; ++i) {
    if (w[i] >= eps) {
      r.witness = FiniteElement::atom(k, i);
      r.witness_measure = w[i];
      return r;
    }
  }
  r.success = true;
  for (unsigned i = 0; i < k; ++i) {
    r.parts.emplace_back(FiniteElement::atom(k, i));
    r.part_measures.push_back(w[i]);
  }
  return r;
}

PartitionResult cantor_partition(const Measure& mu, const Rational& eps) {
  PartitionResult r;
  for (unsigned depth = 0; depth <= kMaxPartitionDepth; ++depth) {
    std::vector<unsigned> support(depth);
    std::iota(support.begin(), support.end(), 0U);
    std::vector<Element> parts;
    std::vector<Rational> measures;
    std::size_t heaviest = 0;
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << depth); ++p) {
      parts.emplace_back(CantorClopen(support, {p}));
      measures.push_back(evaluate_measure(mu, parts.back()));
      if (measures.back() > measures[heaviest]) heaviest = measures.size() - 1;
    }
    if (measures[heaviest] < eps) {
      r.success = true;
      r.parts = std::move(parts);
      r.part_measures = std::move(measures);
      return r;
    }
    if (depth == kMaxPartitionDepth) {
      r.witness = parts[heaviest];
      r.witness_measure = measures[heaviest];
    }
  }
  return r;
}

}  // namespace

PartitionResult atomless_partition(const Measure& mu, const Rational& eps) {
  if (eps <= 0) throw ValidationError("eps", "eps must be positive");
  switch (mu.domain_kind()) {
    case AlgebraKind::finite:
      return finite_partition(mu, eps);
    case AlgebraKind::cantor:
      return cantor_partition(mu, eps);
    case AlgebraKind::finite_cofinite:
      break;
  }
  throw ValidationError("atomless_partition needs a finite or Cantor domain");
}

// ---------------------------------------------------------------------------
// epsilon nets
//
// d_mu(A, B) = mu(A xor B) is invariant under xor-translation, so every ball
// is a translate of the ball around 0 and some optimal net contains 0.

namespace {

class CoverSearch {
 public:
  CoverSearch(unsigned k, std::vector<std::uint64_t> ball, std::uint64_t budget)
      : size_(std::uint64_t{1} << k), ball_(std::move(ball)), budget_(budget) {}

  std::vector<std::uint64_t> greedy() const {
    std::vector<char> covered(size_, 0);
    std::uint64_t left = size_;
    std::vector<std::uint64_t> centers;
    while (left > 0) {
      std::uint64_t best = 0, best_gain = 0;
      for (std::uint64_t c = 0; c < size_; ++c) {
        std::uint64_t gain = 0;
        for (auto b : ball_) gain += covered[c ^ b] ? 0 : 1;
        if (gain > best_gain) best_gain = gain, best = c;
      }
      centers.push_back(best);
      for (auto b : ball_) {
        if (!covered[best ^ b]) covered[best ^ b] = 1, --left;
      }
    }
    return centers;
  }

  // Returns false if the node budget ran out.
  bool solve(std::vector<std::uint64_t>& best) {
    best_ = best;
    std::vector<char> covered(size_, 0);
    std::vector<std::uint64_t> chosen;
    place(0, covered, size_, chosen);  // translation symmetry: 0 is a center
    dfs(covered, chosen);
    best = best_;
    return !exhausted_;
  }

 private:
  std::uint64_t place(std::uint64_t c, std::vector<char>& covered, std::uint64_t left,
                      std::vector<std::uint64_t>& chosen) {
    chosen.push_back(c);
    for (auto b : ball_) {
      if (!covered[c ^ b]) covered[c ^ b] = 1, --left;
    }
    left_ = left;
    return left;
  }

  void dfs(std::vector<char>& covered, std::vector<std::uint64_t>& chosen) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const std::uint64_t left = left_;
    if (left == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const std::uint64_t lower = chosen.size() + (left + ball_.size() - 1) / ball_.size();
    if (lower >= best_.size()) return;

    std::uint64_t u = 0;
    while (covered[u]) ++u;
    // Any cover must contain a center within eps of u.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> options;
    for (auto b : ball_) {
      const std::uint64_t c = u ^ b;
      std::uint64_t gain = 0;
      for (auto d : ball_) gain += covered[c ^ d] ? 0 : 1;
      options.emplace_back(gain, c);
    }
    std::sort(options.begin(), options.end(), std::greater<>());
    for (const auto& [gain, c] : options) {
      std::vector<std::uint64_t> newly;
      for (auto d : ball_) {
        if (!covered[c ^ d]) covered[c ^ d] = 1, newly.push_back(c ^ d);
      }
      chosen.push_back(c);
      left_ = left - newly.size();
      dfs(covered, chosen);
      chosen.pop_back();
      for (auto x : newly) covered[x] = 0;
      left_ = left;
      if (exhausted_) return;
      if (chosen.size() + 1 >= best_.size()) return;
    }
  }

  std::uint64_t size_;
  std::vector<std::uint64_t> ball_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t left_ = 0;
  bool exhausted_ = false;
  std::vector<std::uint64_t> best_;
};

}  // namespace

NetResult epsilon_net_size(const Measure& mu, const FiniteSetAlgebra& algebra, const Rational& eps,
                           std::uint64_t node_budget) {
  if (eps <= 0) throw ValidationError("eps", "eps must be positive");
  const unsigned k = algebra.atom_count();
  if (k > kMaxNetAtoms) {
    throw CapExceeded("epsilon_net_size: " + std::to_string(k) + " atoms exceeds " +
                      std::to_string(kMaxNetAtoms));
  }
  const auto w = atom_weights(mu);
  if (w.size() != k) throw ValidationError("measure is not defined on the given algebra");

  // Ball around 0: elements of weight < eps.
  std::vector<std::uint64_t> ball;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    Rational m = 0;
    for (unsigned i = 0; i < k; ++i) {
      if ((x >> i) & 1U) m += w[i];
    }
    if (m < eps) ball.push_back(x);
  }

  CoverSearch search(k, std::move(ball), node_budget);
  std::vector<std::uint64_t> centers = search.greedy();
  bool exact = false;
  if (k <= kMaxExactNetAtoms) exact = search.solve(centers);

  NetResult r;
  r.size = centers.size();
  r.exact = exact;
  for (auto c : centers) r.centers.push_back({c, k});
  return r;
}

Measure measure_from_centering(const FiniteSetAlgebra& algebra, std::span<const unsigned> ultrafilters) {
  if (ultrafilters.empty()) throw ValidationError("ultrafilters", "centering list is empty");
  const unsigned k = algebra.atom_count();
  std::vector<Rational> w(k, Rational(0));
  for (std::size_t n = 0; n < ultrafilters.size(); ++n) {
    const unsigned atom = ultrafilters[n];
    if (atom >= k) {
      throw ValidationError("ultrafilters/" + std::to_string(n), "no atom " + std::to_string(atom));
    }
    w[atom] += dyadic(static_cast<unsigned>(n + 1));
  }
  w[ultrafilters.back()] += dyadic(static_cast<unsigned>(ultrafilters.size()));
  return Measure::atoms(algebra, std::move(w));
}

}  // namespace boolmeas
