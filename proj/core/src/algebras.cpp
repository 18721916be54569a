#include "boolmeas/algebras.hpp"

#include <algorithm>
#include <set>

#include "boolmeas/error.hpp"

namespace boolmeas {

FiniteSetAlgebra::FiniteSetAlgebra(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("atoms", "algebra needs at least one atom");
  if (labels_.size() > kMaxAtoms) {
    throw CapExceeded("algebra has " + std::to_string(labels_.size()) + " atoms; cap is " +
                      std::to_string(kMaxAtoms));
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!seen.insert(labels_[i]).second) {
      throw ValidationError("atoms/" + std::to_string(i), "duplicate atom label '" + labels_[i] + "'");
    }
  }
}

FiniteSetAlgebra FiniteSetAlgebra::with_atoms(unsigned k) {
  std::vector<std::string> labels;
  for (unsigned i = 0; i < k; ++i) {
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  }
  return FiniteSetAlgebra(std::move(labels));
}

std::optional<unsigned> FiniteSetAlgebra::atom_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<unsigned>(it - labels_.begin());
}

FiniteElement FiniteElement::unit(unsigned k) {
  return {k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1, k};
}

std::string to_bitstring(const FiniteElement& e) {
  std::string s(e.atom_count, '0');
  for (unsigned i = 0; i < e.atom_count; ++i) {
    if (e.contains(i)) s[i] = '1';
  }
  return s;
}

FiniteElement parse_bitstring(const std::string& bits) {
  if (bits.empty() || bits.size() > kMaxAtoms) {
    throw ValidationError("bitstring length must be in 1.." + std::to_string(kMaxAtoms));
  }
  FiniteElement e{0, static_cast<unsigned>(bits.size())};
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      e.bits |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw ValidationError("bitstring '" + bits + "' has a character other than 0/1");
    }
  }
  return e;
}

std::vector<FiniteElement> all_elements(unsigned k) {
  if (k > 20) throw CapExceeded("all_elements: 2^" + std::to_string(k) + " elements");
  std::vector<FiniteElement> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) out.push_back({b, k});
  return out;
}

// ---------------------------------------------------------------------------
// CantorClopen

namespace {

std::uint64_t full_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

// Removes support indices whose value never matters, then sorts patterns.
void canonicalize(std::vector<unsigned>& support, std::vector<std::uint64_t>& patterns) {
  std::vector<char> member(std::size_t{1} << support.size(), 0);
  for (auto p : patterns) member[p] = 1;

  bool changed = true;
  while (changed && !support.empty()) {
    changed = false;
    const std::size_t width = support.size();
    for (std::size_t j = 0; j < width; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      bool redundant = true;
      for (std::uint64_t p = 0; p < member.size() && redundant; ++p) {
        if (member[p] != member[p ^ bit]) redundant = false;
      }
      if (!redundant) continue;
      // Project out position j.
      std::vector<char> projected(member.size() / 2, 0);
      for (std::uint64_t p = 0; p < member.size(); ++p) {
        if (p & bit) continue;
        const std::uint64_t low = p & (bit - 1);
        const std::uint64_t high = (p >> (j + 1)) << j;
        projected[low | high] = member[p];
      }
      member = std::move(projected);
      support.erase(support.begin() + static_cast<std::ptrdiff_t>(j));
      changed = true;
      break;
    }
  }
  patterns.clear();
  for (std::uint64_t p = 0; p < member.size(); ++p) {
    if (member[p]) patterns.push_back(p);
  }
  if (patterns.empty()) support.clear();
}

std::vector<unsigned> merged_support(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  std::vector<unsigned> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.size() > kMaxCantorSupport) {
    throw CapExceeded("Cantor clopen support of size " + std::to_string(out.size()) + " exceeds " +
                      std::to_string(kMaxCantorSupport));
  }
  return out;
}

template <typename Combine>
CantorClopen combine_cantor(const CantorClopen& a, const CantorClopen& b, Combine f) {
  auto support = merged_support(a.support(), b.support());
  std::vector<char> in_a(std::size_t{1} << support.size(), 0);
  std::vector<char> in_b(in_a.size(), 0);
  for (auto p : a.patterns_over(support)) in_a[p] = 1;
  for (auto p : b.patterns_over(support)) in_b[p] = 1;
  std::vector<std::uint64_t> patterns;
  for (std::uint64_t p = 0; p < in_a.size(); ++p) {
    if (f(in_a[p] != 0, in_b[p] != 0)) patterns.push_back(p);
  }
  return CantorClopen(std::move(support), std::move(patterns));
}

}  // namespace

CantorClopen::CantorClopen(std::vector<unsigned> support, std::vector<std::uint64_t> patterns)
    : support_(std::move(support)), patterns_(std::move(patterns)) {
  if (support_.size() > kMaxCantorSupport) {
    throw CapExceeded("Cantor clopen support of size " + std::to_string(support_.size()) +
                      " exceeds " + std::to_string(kMaxCantorSupport));
  }
  for (std::size_t i = 1; i < support_.size(); ++i) {
    if (support_[i - 1] >= support_[i]) {
      throw ValidationError("support", "support must be strictly increasing");
    }
  }
  const std::uint64_t mask = full_mask(support_.size());
  for (auto p : patterns_) {
    if ((p & ~mask) != 0) throw ValidationError("patterns", "pattern wider than support");
  }
  canonicalize(support_, patterns_);
}

CantorClopen CantorClopen::unit() { return CantorClopen({}, {0}); }

CantorClopen CantorClopen::generator(unsigned n) { return CantorClopen({n}, {1}); }

std::vector<std::uint64_t> CantorClopen::patterns_over(const std::vector<unsigned>& wider) const {
  // position of each own support index inside `wider`
  std::vector<unsigned> pos;
  for (auto s : support_) {
    auto it = std::lower_bound(wider.begin(), wider.end(), s);
    if (it == wider.end() || *it != s) throw ValidationError("patterns_over: not a superset support");
    pos.push_back(static_cast<unsigned>(it - wider.begin()));
  }
  std::vector<char> member(std::size_t{1} << support_.size(), 0);
  for (auto p : patterns_) member[p] = 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 0; q < (std::uint64_t{1} << wider.size()); ++q) {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if ((q >> pos[j]) & 1U) r |= std::uint64_t{1} << j;
    }
    if (member[r]) out.push_back(q);
  }
  return out;
}

CantorClopen meet(const CantorClopen& a, const CantorClopen& b) {
  return combine_cantor(a, b, [](bool x, bool y) { return x && y; });
}

CantorClopen join(const CantorClopen& a, const CantorClopen& b) {
  return combine_cantor(a, b, [](bool x, bool y) { return x || y; });
}

CantorClopen complement(const CantorClopen& a) {
  std::vector<char> member(std::size_t{1} << a.support().size(), 0);
  for (auto p : a.patterns()) member[p] = 1;
  std::vector<std::uint64_t> patterns;
  for (std::uint64_t p = 0; p < member.size(); ++p) {
    if (!member[p]) patterns.push_back(p);
  }
  return CantorClopen(a.support(), std::move(patterns));
}

// ---------------------------------------------------------------------------
// FiniteCofinite

FiniteCofinite FiniteCofinite::of(std::vector<std::uint64_t> points, bool cofinite) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return {std::move(points), cofinite};
}

bool FiniteCofinite::contains(std::uint64_t n) const {
  return std::binary_search(finite.begin(), finite.end(), n) != cofinite;
}

FiniteCofinite meet(const FiniteCofinite& a, const FiniteCofinite& b) {
  std::vector<std::uint64_t> out;
  const auto &x = a.finite, &y = b.finite;
  if (!a.cofinite && !b.cofinite) {
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return {std::move(out), false};
  }
  if (a.cofinite && b.cofinite) {
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return {std::move(out), true};
  }
  const auto& fin = a.cofinite ? y : x;
  const auto& removed = a.cofinite ? x : y;
  std::set_difference(fin.begin(), fin.end(), removed.begin(), removed.end(), std::back_inserter(out));
  return {std::move(out), false};
}

FiniteCofinite complement(const FiniteCofinite& a) { return {a.finite, !a.cofinite}; }

FiniteCofinite join(const FiniteCofinite& a, const FiniteCofinite& b) {
  return complement(meet(complement(a), complement(b)));
}

// ---------------------------------------------------------------------------
// Chunks

CantorClopen Chunk::to_clopen() const {
  std::vector<unsigned> support = positive;
  support.insert(support.end(), negative.begin(), negative.end());
  std::sort(support.begin(), support.end());
  std::uint64_t pattern = 0;
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (std::find(positive.begin(), positive.end(), support[j]) != positive.end()) {
      pattern |= std::uint64_t{1} << j;
    }
  }
  return CantorClopen(std::move(support), {pattern});
}

std::string Chunk::describe() const {
  std::string s;
  auto append = [&](unsigned i, bool neg) {
    if (!s.empty()) s += "&";
    s += "C" + std::to_string(i) + (neg ? "'" : "");
  };
  std::vector<std::pair<unsigned, bool>> lits;
  for (auto i : positive) lits.emplace_back(i, false);
  for (auto i : negative) lits.emplace_back(i, true);
  std::sort(lits.begin(), lits.end());
  for (auto [i, neg] : lits) append(i, neg);
  return s.empty() ? "1" : s;
}

std::vector<Chunk> chunks_below(unsigned m) {
  std::vector<Chunk> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) total *= 3;
  for (std::uint64_t code = 1; code < total; ++code) {
    Chunk c;
    std::uint64_t rest = code;
    for (unsigned i = 0; i < m; ++i, rest /= 3) {
      if (rest % 3 == 1) c.positive.push_back(i);
      if (rest % 3 == 2) c.negative.push_back(i);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentation-generic ops

AlgebraKind kind_of(const Element& e) { return static_cast<AlgebraKind>(e.index()); }

std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::finite:
      return "finite";
    case AlgebraKind::cantor:
      return "cantor";
    case AlgebraKind::finite_cofinite:
      return "finite-cofinite";
  }
  return "?";
}

namespace {

void require_same(const Element& a, const Element& b) {
  if (a.index() != b.index()) {
    throw ValidationError("mixed presentations: " + to_string(kind_of(a)) + " and " +
                          to_string(kind_of(b)));
  }
  if (const auto* fa = std::get_if<FiniteElement>(&a)) {
    const auto& fb = std::get<FiniteElement>(b);
    if (fa->atom_count != fb.atom_count) {
      throw ValidationError("finite algebras differ: " + std::to_string(fa->atom_count) + " vs " +
                            std::to_string(fb.atom_count) + " atoms");
    }
  }
}

}  // namespace

Element meet(const Element& a, const Element& b) {
  require_same(a, b);
  return std::visit(
      [&](const auto& x) -> Element {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, FiniteElement>) {
          return FiniteElement{x.bits & y.bits, x.atom_count};
        } else {
          return meet(x, y);
        }
      },
      a);
}

Element join(const Element& a, const Element& b) {
  require_same(a, b);
  return std::visit(
      [&](const auto& x) -> Element {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, FiniteElement>) {
          return FiniteElement{x.bits | y.bits, x.atom_count};
        } else {
          return join(x, y);
        }
      },
      a);
}

Element complement(const Element& a) {
  return std::visit(
      [](const auto& x) -> Element {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteElement>) {
          return FiniteElement{~x.bits & FiniteElement::unit(x.atom_count).bits, x.atom_count};
        } else {
          return complement(x);
        }
      },
      a);
}

bool is_zero(const Element& e) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteCofinite>) {
          return !x.cofinite && x.finite.empty();
        } else {
          return x.is_zero();
        }
      },
      e);
}

bool is_unit(const Element& e) { return is_zero(complement(e)); }

Element element_ops(BoolOp op, const Element& a, const std::optional<Element>& b) {
  if (op == BoolOp::complement) return complement(a);
  if (!b) throw ValidationError("binary operation requires a second operand");
  switch (op) {
    case BoolOp::meet:
      return meet(a, *b);
    case BoolOp::join:
      return join(a, *b);
    case BoolOp::symmetric_difference:
      return join(meet(a, complement(*b)), meet(complement(a), *b));
    case BoolOp::complement:
      break;
  }
  return complement(a);
}

// ---------------------------------------------------------------------------

ClopenSet cantor_to_interval(const CantorClopen& c) {
  if (c.is_zero()) return {};
  if (c.is_unit()) return ClopenSet::unit();
  const auto& support = c.support();
  const unsigned depth = support.back() + 1;
  if (depth > kMaxShiftMaterialize) {
    throw CapExceeded("cantor_to_interval: depth " + std::to_string(depth) + " exceeds " +
                      std::to_string(kMaxShiftMaterialize));
  }
  std::vector<char> member(std::size_t{1} << support.size(), 0);
  for (auto p : c.patterns()) member[p] = 1;

  // Walk depth-`depth` cylinders in order and emit maximal runs.
  std::vector<Interval> runs;
  const Rational w = dyadic(depth);
  const std::uint64_t cells = std::uint64_t{1} << depth;
  std::optional<std::uint64_t> run_start;
  for (std::uint64_t k = 0; k <= cells; ++k) {
    bool in = false;
    if (k < cells) {
      std::uint64_t p = 0;
      for (std::size_t j = 0; j < support.size(); ++j) {
        // digit i of the cylinder's points is bit (depth - 1 - i) of k
        if ((k >> (depth - 1 - support[j])) & 1U) p |= std::uint64_t{1} << j;
      }
      in = member[p] != 0;
    }
    if (in && !run_start) run_start = k;
    if (!in && run_start) {
      runs.push_back({Rational(*run_start) * w, Rational(k) * w});
      run_start.reset();
    }
  }
  return normalize(runs);
}

SikorskiVerdict sikorski_check(const FiniteSetAlgebra& algebra, std::span<const ClopenSet> atom_images) {
  if (atom_images.size() != algebra.atom_count()) {
    throw ValidationError("assignment covers " + std::to_string(atom_images.size()) + " of " +
                          std::to_string(algebra.atom_count()) + " atoms");
  }
  const auto& labels = algebra.labels();
  for (std::size_t i = 0; i < atom_images.size(); ++i) {
    for (std::size_t j = i + 1; j < atom_images.size(); ++j) {
      ClopenSet overlap = meet(atom_images[i], atom_images[j]);
      if (!overlap.is_zero()) {
        return {false, labels[i] + "&" + labels[j], std::move(overlap)};
      }
    }
  }
  ClopenSet covered;
  for (const auto& img : atom_images) covered = join(covered, img);
  if (!covered.is_unit()) {
    std::string poly = "~(";
    for (std::size_t i = 0; i < labels.size(); ++i) poly += (i ? "|" : "") + labels[i];
    poly += ")";
    return {false, std::move(poly), complement(covered)};
  }
  return {true, std::nullopt, {}};
}

SikorskiVerdict sikorski_check(const std::map<unsigned, ClopenSet>&) {
  // Free generators: no nontrivial vanishing polynomial.
  return {true, std::nullopt, {}};
}

ClopenSet extend_atoms(std::span<const ClopenSet> atom_images, const FiniteElement& e) {
  if (e.atom_count != atom_images.size()) {
    throw ValidationError("element of a " + std::to_string(e.atom_count) + "-atom algebra, expected " +
                          std::to_string(atom_images.size()));
  }
  ClopenSet out;
  for (unsigned i = 0; i < e.atom_count; ++i) {
    if (e.contains(i)) out = join(out, atom_images[i]);
  }
  return out;
}

}  // namespace boolmeas
