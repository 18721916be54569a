#include "boolmeas/serialize.hpp"

#include <limits>

#include "boolmeas/error.hpp"

namespace boolmeas::json {

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

const json& require(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) throw ValidationError(at.empty() ? "/" : at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(child(at, key), "missing field");
  return *it;
}

namespace {

const json& require_array(const json& j, const std::string& at) {
  if (!j.is_array()) throw ValidationError(at, "expected an array");
  return j;
}

const std::string& require_string(const json& j, const std::string& at) {
  if (!j.is_string()) throw ValidationError(at, "expected a string");
  return j.get_ref<const std::string&>();
}

json integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Integer read_integer(const json& j, const std::string& at) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      const Rational r = parse_rational(j.get<std::string>());
      if (denominator(r) == 1) return numerator(r);
    } catch (const ValidationError&) {
    }
  }
  throw ValidationError(at, "expected an integer");
}

Rational ratio(const json& num, const json& den, const std::string& at_num, const std::string& at_den) {
  const Integer n = read_integer(num, at_num);
  const Integer d = read_integer(den, at_den);
  if (d == 0) throw ValidationError(at_den, "zero denominator");
  return make_rational(n, d);
}

}  // namespace

json rational(const Rational& r) { return json::array({integer(numerator(r)), integer(denominator(r))}); }

Rational read_rational(const json& j, const std::string& at) {
  if (j.is_array() && j.size() == 2) return ratio(j[0], j[1], child(at, 0), child(at, 1));
  if (j.is_number_integer()) return Rational(read_integer(j, at));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(at, e.message());
    }
  }
  throw ValidationError(at, "expected a rational [num, den]");
}

std::uint64_t read_uint(const json& j, const std::string& at, std::uint64_t max) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw ValidationError(at, "expected a nonnegative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v > max) throw ValidationError(at, "value " + std::to_string(v) + " exceeds " + std::to_string(max));
  return v;
}

json clopen(const ClopenSet& a) {
  json out = json::array();
  for (const auto& i : a.intervals()) {
    out.push_back({integer(numerator(i.lo)), integer(denominator(i.lo)), integer(numerator(i.hi)),
                   integer(denominator(i.hi))});
  }
  return out;
}

ClopenSet read_clopen(const json& j, const std::string& at) {
  require_array(j, at);
  std::vector<Interval> raw;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& q = j[i];
    const std::string here = child(at, i);
    if (!q.is_array() || q.size() != 4) {
      throw ValidationError(here, "expected [num-lo, den-lo, num-hi, den-hi]");
    }
    raw.push_back({ratio(q[0], q[1], child(here, 0), child(here, 1)),
                   ratio(q[2], q[3], child(here, 2), child(here, 3))});
  }
  try {
    return normalize(raw);
  } catch (const ValidationError& e) {
    // normalize() reports the position as "[i]"
    const std::string& w = e.where();
    const std::string pos = w.size() > 2 ? w.substr(1, w.size() - 2) : "";
    throw ValidationError(pos.empty() ? at : child(at, pos), e.message());
  }
}

json algebra(const FiniteSetAlgebra& a) { return {{"atoms", a.labels()}}; }

FiniteSetAlgebra read_algebra(const json& j, const std::string& at) {
  const auto& atoms = require_array(require(j, "atoms", at), child(at, "atoms"));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    labels.push_back(require_string(atoms[i], child(child(at, "atoms"), i)));
  }
  try {
    return FiniteSetAlgebra(std::move(labels));
  } catch (const ValidationError& e) {
    throw ValidationError(child(at, e.where().empty() ? "atoms" : e.where()), e.message());
  }
}

json cantor(const CantorClopen& c) {
  json patterns = json::array();
  for (auto p : c.patterns()) {
    std::string s(c.support().size(), '0');
    for (std::size_t j = 0; j < s.size(); ++j) {
      if ((p >> j) & 1U) s[j] = '1';
    }
    patterns.push_back(s);
  }
  return {{"support", c.support()}, {"patterns", patterns}};
}

CantorClopen read_cantor(const json& j, const std::string& at) {
  const std::string at_support = child(at, "support");
  const std::string at_patterns = child(at, "patterns");
  const auto& support_j = require_array(require(j, "support", at), at_support);
  const auto& patterns_j = require_array(require(j, "patterns", at), at_patterns);
  std::vector<unsigned> support;
  for (std::size_t i = 0; i < support_j.size(); ++i) {
    support.push_back(static_cast<unsigned>(read_uint(support_j[i], child(at_support, i), 1U << 20)));
  }
  // Accept any order; patterns are permuted to match the sorted support.
  std::vector<std::size_t> order(support.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return support[x] < support[y]; });
  std::vector<unsigned> sorted;
  for (auto i : order) sorted.push_back(support[i]);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError(at_support, "duplicate generator index");
  }
  if (sorted.size() > kMaxCantorSupport) {
    throw CapExceeded("Cantor support of size " + std::to_string(sorted.size()) + " exceeds " +
                      std::to_string(kMaxCantorSupport));
  }
  std::vector<std::uint64_t> patterns;
  for (std::size_t i = 0; i < patterns_j.size(); ++i) {
    const std::string here = child(at_patterns, i);
    const auto& s = require_string(patterns_j[i], here);
    if (s.size() != support.size()) throw ValidationError(here, "pattern length differs from support size");
    std::uint64_t p = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const char ch = s[order[pos]];
      if (ch != '0' && ch != '1') throw ValidationError(here, "pattern must be a bitstring");
      if (ch == '1') p |= std::uint64_t{1} << pos;
    }
    patterns.push_back(p);
  }
  return CantorClopen(std::move(sorted), std::move(patterns));
}

json finite_cofinite(const FiniteCofinite& f) { return {{"finite", f.finite}, {"cofinite", f.cofinite}}; }

FiniteCofinite read_finite_cofinite(const json& j, const std::string& at) {
  const std::string at_finite = child(at, "finite");
  const auto& finite = require_array(require(j, "finite", at), at_finite);
  std::vector<std::uint64_t> points;
  for (std::size_t i = 0; i < finite.size(); ++i) points.push_back(read_uint(finite[i], child(at_finite, i)));
  bool cofinite = false;
  if (auto it = j.find("cofinite"); it != j.end()) {
    if (!it->is_boolean()) throw ValidationError(child(at, "cofinite"), "expected a boolean");
    cofinite = it->get<bool>();
  }
  return FiniteCofinite::of(std::move(points), cofinite);
}

json element(const Element& e) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteElement>) {
          return to_bitstring(x);
        } else if constexpr (std::is_same_v<T, CantorClopen>) {
          return cantor(x);
        } else {
          return finite_cofinite(x);
        }
      },
      e);
}

Element read_element(const json& j, AlgebraKind kind, unsigned atom_count, const std::string& at) {
  switch (kind) {
    case AlgebraKind::finite: {
      FiniteElement e;
      try {
        e = parse_bitstring(require_string(j, at));
      } catch (const ValidationError& err) {
        throw ValidationError(at, err.message());
      }
      if (e.atom_count != atom_count) {
        throw ValidationError(at, "bitstring has " + std::to_string(e.atom_count) + " positions, algebra has " +
                                      std::to_string(atom_count) + " atoms");
      }
      return e;
    }
    case AlgebraKind::cantor:
      return read_cantor(j, at);
    case AlgebraKind::finite_cofinite:
      return read_finite_cofinite(j, at);
  }
  throw ValidationError(at, "unknown presentation");
}

json homomorphism(const Homomorphism& phi) {
  json domain;
  json images = json::object();
  switch (phi.domain_kind()) {
    case AlgebraKind::finite:
      domain = {{"kind", "finite"}, {"atoms", phi.algebra().labels()}};
      for (unsigned i = 0; i < phi.algebra().atom_count(); ++i) {
        images[phi.algebra().labels()[i]] = clopen(phi.atom_image(i));
      }
      break;
    case AlgebraKind::cantor:
    case AlgebraKind::finite_cofinite:
      domain = {{"kind", to_string(phi.domain_kind())}};
      for (const auto& [k, img] : phi.images()) images[std::to_string(k)] = clopen(img);
      break;
  }
  json out = {{"domain", domain}, {"images", images}};
  if (phi.domain_kind() == AlgebraKind::cantor) out["tail"] = to_string(phi.tail());
  return out;
}

Homomorphism read_homomorphism(const json& j, const std::string& at) {
  const std::string at_domain = child(at, "domain");
  const json& domain = require(j, "domain", at);
  const std::string& kind = require_string(require(domain, "kind", at_domain), child(at_domain, "kind"));
  const std::string at_images = child(at, "images");
  json images = json::object();
  if (auto it = j.find("images"); it != j.end()) {
    if (!it->is_object()) throw ValidationError(at_images, "expected an object");
    images = *it;
  }

  if (kind == "finite") {
    const FiniteSetAlgebra algebra = read_algebra(domain, at_domain);
    std::vector<ClopenSet> atom_images(algebra.atom_count());
    for (const auto& [label, value] : images.items()) {
      const auto idx = algebra.atom_index(label);
      if (!idx) throw ValidationError(child(at_images, label), "no atom labelled '" + label + "'");
      atom_images[*idx] = read_clopen(value, child(at_images, label));
    }
    for (unsigned i = 0; i < algebra.atom_count(); ++i) {
      if (!images.contains(algebra.labels()[i])) {
        throw ValidationError(child(at_images, algebra.labels()[i]), "missing atom image");
      }
    }
    try {
      return Homomorphism::on_finite(algebra, std::move(atom_images));
    } catch (const ValidationError& e) {
      throw ValidationError(at_images, e.message());
    }
  }

  std::map<std::uint64_t, ClopenSet> indexed;
  for (const auto& [key, value] : images.items()) {
    std::uint64_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoull(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ValidationError(child(at_images, key), "image keys must be generator indices");
    }
    indexed.emplace(k, read_clopen(value, child(at_images, key)));
  }
  if (kind == "cantor") {
    TailRule tail = TailRule::digit_identity;
    if (auto it = j.find("tail"); it != j.end()) {
      try {
        tail = parse_tail_rule(require_string(*it, child(at, "tail")));
      } catch (const ValidationError& e) {
        throw ValidationError(child(at, "tail"), e.message());
      }
    }
    return Homomorphism::on_cantor(std::move(indexed), tail);
  }
  if (kind == "finite-cofinite") {
    try {
      return Homomorphism::on_finite_cofinite(std::move(indexed));
    } catch (const ValidationError& e) {
      throw ValidationError(at_images, e.message());
    }
  }
  throw ValidationError(child(at_domain, "kind"), "unknown domain kind '" + kind + "'");
}

json measure(const Measure& mu) {
  if (mu.kind() == Measure::Kind::induced) return {{"kind", "induced"}, {"hom", homomorphism(mu.hom())}};
  json weights = json::array();
  for (unsigned i = 0; i < mu.algebra().atom_count(); ++i) {
    const auto& w = mu.weights()[i];
    weights.push_back({mu.algebra().labels()[i], integer(numerator(w)), integer(denominator(w))});
  }
  return {{"kind", "atoms"}, {"weights", weights}};
}

Measure read_measure(const json& j, const std::string& at) {
  const std::string& kind = require_string(require(j, "kind", at), child(at, "kind"));
  if (kind == "induced") return Measure::induced(read_homomorphism(require(j, "hom", at), child(at, "hom")));
  if (kind != "atoms") throw ValidationError(child(at, "kind"), "unknown measure kind '" + kind + "'");
  const std::string at_weights = child(at, "weights");
  const auto& weights = require_array(require(j, "weights", at), at_weights);
  std::vector<std::string> labels;
  std::vector<Rational> values;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const std::string here = child(at_weights, i);
    const auto& w = weights[i];
    if (!w.is_array() || w.size() != 3) throw ValidationError(here, "expected [label, num, den]");
    labels.push_back(require_string(w[0], child(here, 0)));
    values.push_back(ratio(w[1], w[2], child(here, 1), child(here, 2)));
  }
  try {
    return Measure::atoms(FiniteSetAlgebra(std::move(labels)), std::move(values));
  } catch (const ValidationError& e) {
    throw ValidationError(at_weights, e.message());
  }
}

json sample_point(const SamplePoint& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return {{"rational", rational(*r)}};
  return {{"seed", std::get<BitStreamPoint>(x).seed}, {"generator", "splitmix64"}};
}

SamplePoint read_sample_point(const json& j, const std::string& at) {
  if (!j.is_object()) throw ValidationError(at, "expected an object");
  if (auto it = j.find("rational"); it != j.end()) {
    const Rational r = read_rational(*it, child(at, "rational"));
    if (r < 0 || r >= 1) throw ValidationError(child(at, "rational"), "point must lie in [0,1)");
    return r;
  }
  if (auto it = j.find("seed"); it != j.end()) {
    if (auto g = j.find("generator"); g != j.end() && *g != "splitmix64") {
      throw ValidationError(child(at, "generator"), "only splitmix64 is supported");
    }
    return BitStreamPoint{read_uint(*it, child(at, "seed"))};
  }
  throw ValidationError(at, "expected {rational: [num, den]} or {seed: n}");
}

KelleyInstance read_kelley_instance(const json& j, const std::string& at) {
  KelleyInstance instance{read_algebra(j, at), {}};
  const std::string at_family = child(at, "family");
  const auto& family = require_array(require(j, "family", at), at_family);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Element e = read_element(family[i], AlgebraKind::finite, instance.algebra.atom_count(),
                                   child(at_family, i));
    instance.family.push_back(std::get<FiniteElement>(e));
  }
  try {
    instance.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(child(at, e.where()), e.message());
  }
  return instance;
}

namespace {

json certificate(const MultisetCertificate& c) {
  return {{"multiplicity", c.multiplicity},
          {"size", c.size},
          {"max_intersecting", c.max_intersecting},
          {"ratio", rational(c.ratio())}};
}

}  // namespace

json kelley_result(const KelleyInstance& instance, const SupportsVerdict& v) {
  json witness = json::array();
  for (unsigned i = 0; i < instance.algebra.atom_count(); ++i) {
    const auto& w = v.lp.witness[i];
    witness.push_back({instance.algebra.labels()[i], integer(numerator(w)), integer(denominator(w))});
  }
  return {{"value", rational(v.lp.value)},
          {"witness", witness},
          {"certificate", certificate(v.lp.certificate)},
          {"bruteforce", {{"N", v.brute_size}, {"value", rational(v.brute.value)}, {"best", certificate(v.brute.best)}}},
          {"agrees", v.agrees}};
}

json mixing(const std::vector<Rational>& table) {
  json rows = json::array();
  for (std::size_t n = 0; n < table.size(); ++n) {
    rows.push_back({{"n", n}, {"value", rational(table[n])}});
  }
  return rows;
}

json cover_report(const FiniteSetAlgebra& algebra, const CoverReport& r) {
  json rows = json::array();
  for (const auto& e : r.entries) {
    rows.push_back({{"atom", algebra.labels()[e.atom]},
                    {"cylinder", {e.cylinder.depth, e.cylinder.index}},
                    {"witness", e.witness}});
  }
  return {{"depth", r.depth}, {"max_witness", r.max_witness}, {"entries", rows}};
}

json symmetry_report(const SymmetryReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"A", {{"positive", v.a.positive}, {"negative", v.a.negative}, {"name", v.a.describe()}}},
                          {"B", {{"positive", v.b.positive}, {"negative", v.b.negative}, {"name", v.b.describe()}}},
                          {"side", v.side}});
  }
  return {{"symmetric", r.symmetric},
          {"support_bound", r.support_bound},
          {"pairs_checked", r.pairs_checked},
          {"violations", violations}};
}

json swap_result(const SwapResult& r) {
  json out = {{"symmetry", symmetry_report(r.report)}};
  if (r.automorphism) {
    json atoms = json::array();
    for (std::size_t i = 0; i < r.automorphism->atoms().size(); ++i) {
      atoms.push_back({{"atom", clopen(r.automorphism->atoms()[i])}, {"image", r.automorphism->atom_image()[i]}});
    }
    out["automorphism"] = {{"atoms", atoms}};
  } else {
    out["automorphism"] = nullptr;
  }
  return out;
}

HomSequence read_sequence(const json& j, const std::string& at) {
  const std::string& kind = require_string(require(j, "kind", at), child(at, "kind"));
  if (kind == "bit-flip") {
    Homomorphism base = Homomorphism::digit_identity();
    if (auto it = j.find("base"); it != j.end()) base = read_homomorphism(*it, child(at, "base"));
    if (base.domain_kind() != AlgebraKind::cantor) {
      throw ValidationError(child(at, "base"), "bit-flip base must be on the Cantor algebra");
    }
    return HomSequence::bit_flip(std::move(base));
  }
  if (kind == "principal") return HomSequence::principal();
  if (kind == "constant") return HomSequence::constant(read_homomorphism(require(j, "hom", at), child(at, "hom")));
  throw ValidationError(child(at, "kind"), "unknown sequence kind '" + kind + "'");
}

json nontriviality(const HomSequence& seq, const NontrivialityReport& r) {
  json stabilization = json::object();
  for (const auto& s : r.stabilization) {
    stabilization[describe(s.element)] = s.index ? json(*s.index) : json(nullptr);
  }
  json defects = json::array();
  for (std::size_t n = 0; n < r.defects.size(); ++n) {
    defects.push_back({{"n", n}, {"defect", rational(r.defects[n].sup)}, {"witness", describe(r.defects[n].witness)}});
  }
  return {{"sequence", to_string(seq.kind())},
          {"support_bound", r.support_bound},
          {"horizon", r.horizon},
          {"pointwise", r.pointwise},
          {"uniform", r.uniform},
          {"nontrivial", r.nontrivial()},
          {"stabilization", stabilization},
          {"defect_witnesses", defects}};
}

}  // namespace boolmeas::json
