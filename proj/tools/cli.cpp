#include "boolmeas/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "boolmeas/convergence.hpp"
#include "boolmeas/dynamics.hpp"
#include "boolmeas/error.hpp"
#include "boolmeas/kelley.hpp"
#include "boolmeas/names.hpp"
#include "boolmeas/serialize.hpp"

namespace boolmeas::cli {

namespace js = boolmeas::json;
using nlohmann::json;

std::vector<std::string> commands() { return {"kelley", "mix", "center", "swap", "name", "converge", "density"}; }

StreamMode parse_stream_mode(const std::string& s) {
  if (s == "splitmix64") return StreamMode::splitmix64;
  if (s == "ones") return StreamMode::ones;
  if (s == "alternating") return StreamMode::alternating;
  throw ValidationError("stream", "unknown stream '" + s + "' (splitmix64|ones|alternating)");
}

namespace {

std::string stream_name(StreamMode m) {
  switch (m) {
    case StreamMode::splitmix64:
      return "splitmix64";
    case StreamMode::ones:
      return "ones";
    case StreamMode::alternating:
      return "alternating";
  }
  return "?";
}

}  // namespace

DensityReport density_demo(std::uint64_t seed, std::uint64_t n_bits, StreamMode mode) {
  if (n_bits == 0) throw ValidationError("bits", "n_bits must be at least 1");
  DensityReport report;
  report.seed = seed;
  report.mode = mode;

  std::vector<std::uint64_t> schedule;
  for (std::uint64_t decade = 1; decade <= n_bits; decade *= 10) {
    for (std::uint64_t m : {1, 2, 5}) {
      if (decade * m < n_bits) schedule.push_back(decade * m);
    }
    if (decade > n_bits / 10) break;
  }
  schedule.push_back(n_bits);

  SplitMix64 gen(seed);
  std::uint64_t word = 0, ones = 0;
  std::size_t next = 0;
  for (std::uint64_t k = 1; k <= n_bits; ++k) {
    unsigned bit = 0;
    switch (mode) {
      case StreamMode::splitmix64:
        if ((k - 1) % 64 == 0) word = gen.next();
        bit = (word >> (63 - (k - 1) % 64)) & 1U;
        break;
      case StreamMode::ones:
        bit = 1;
        break;
      case StreamMode::alternating:
        bit = (k % 2 == 0) ? 1 : 0;  // 0101...
        break;
    }
    ones += bit;
    if (next < schedule.size() && schedule[next] == k) {
      report.rows.push_back({k, ones, make_rational(Integer(ones), Integer(k))});
      ++next;
    }
  }
  report.final_density = report.rows.back().density;
  return report;
}

namespace {

// ---------------------------------------------------------------------------
// Rendering helpers. Rationals are always printed as num/den.

using Row = std::vector<std::string>;

void print_table(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << (c ? "  " : "");
      if (c + 1 < r.size()) {
        out << std::left << std::setw(static_cast<int>(width[c])) << r[c];
      } else {
        out << r[c];
      }
    }
    out << '\n';
  };
  line(header);
  Row rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
}

void print_csv(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  auto line = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string num(const Rational& r) { return numerator(r).str(); }
std::string den(const Rational& r) { return denominator(r).str(); }

struct Output {
  json document;
  Row header;
  std::vector<Row> rows;
  std::vector<std::string> summary;  // extra lines printed after the table
};

void emit(const Output& o, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      json doc = {{"schema", js::kSchema}};
      doc.update(o.document);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      print_csv(out, o.header, o.rows);
      break;
    case Format::table:
      print_table(out, o.header, o.rows);
      for (const auto& s : o.summary) out << s << '\n';
      break;
  }
}

// ---------------------------------------------------------------------------
// Input

json load_input(const CommandSpec& spec) {
  std::string text;
  if (spec.inline_json) {
    text = *spec.inline_json;
  } else if (spec.input_path) {
    std::ifstream in(*spec.input_path);
    if (!in) throw ValidationError("--in", "cannot open '" + *spec.input_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    throw ValidationError("--in", "command '" + spec.command + "' needs an input document");
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!doc.is_object()) throw ValidationError("/", "input must be a JSON object");
  const auto it = doc.find("schema");
  if (it == doc.end()) throw ValidationError("/schema", std::string("missing; expected \"") + js::kSchema + "\"");
  if (*it != js::kSchema) throw ValidationError("/schema", std::string("expected \"") + js::kSchema + "\"");
  return doc;
}

unsigned read_small(const json& doc, const std::string& key, std::optional<unsigned> fallback, unsigned max) {
  if (auto it = doc.find(key); it != doc.end()) {
    return static_cast<unsigned>(js::read_uint(*it, "/" + key, max));
  }
  if (!fallback) throw ValidationError("/" + key, "missing field");
  return *fallback;
}

// ---------------------------------------------------------------------------
// Commands

Output cmd_kelley(const CommandSpec& spec) {
  const json doc = load_input(spec);
  const KelleyInstance instance = js::read_kelley_instance(doc, "");
  unsigned n = read_small(doc, "N", kMaxBruteForceSize, 1000);
  if (spec.cap) n = *spec.cap;
  const auto v = supports_decision(instance.algebra, instance.family, n);

  Output o;
  o.document = js::kelley_result(instance, v);
  o.header = {"field", "key", "num", "den"};
  o.rows.push_back({"value", "", num(v.lp.value), den(v.lp.value)});
  for (unsigned i = 0; i < instance.algebra.atom_count(); ++i) {
    o.rows.push_back({"witness", instance.algebra.labels()[i], num(v.lp.witness[i]), den(v.lp.witness[i])});
  }
  for (std::size_t i = 0; i < instance.family.size(); ++i) {
    o.rows.push_back({"certificate", to_bitstring(instance.family[i]),
                      std::to_string(v.lp.certificate.multiplicity[i]), ""});
  }
  const Rational ratio = v.lp.certificate.ratio();
  o.rows.push_back({"certificate-ratio", std::to_string(v.lp.certificate.max_intersecting) + "/" +
                                             std::to_string(v.lp.certificate.size),
                    num(ratio), den(ratio)});
  o.rows.push_back({"bruteforce", "N=" + std::to_string(n), num(v.brute.value), den(v.brute.value)});
  o.summary.push_back("intersection number " + to_string(v.lp.value) + (v.agrees ? " (LP and brute force agree)"
                                                                                  : " (brute force differs at this N)"));
  return o;
}

Output cmd_mix(const CommandSpec& spec) {
  const json doc = load_input(spec);
  const ClopenSet a = js::read_clopen(js::require(doc, "a", ""), "/a");
  const ClopenSet b = js::read_clopen(js::require(doc, "b", ""), "/b");
  unsigned n = read_small(doc, "N", std::nullopt, kMaxCylinderDepth);
  if (spec.cap) n = std::min(n, *spec.cap);
  const auto table = mixing_table(a, b, n);

  Output o;
  o.document = {{"product", js::rational(lambda_measure(a) * lambda_measure(b))}, {"rows", js::mixing(table)}};
  o.header = {"n", "num", "den"};
  for (std::size_t i = 0; i < table.size(); ++i) o.rows.push_back({std::to_string(i), num(table[i]), den(table[i])});
  o.summary.push_back("lambda(a) lambda(b) = " + to_string(lambda_measure(a) * lambda_measure(b)));
  return o;
}

Output cmd_center(const CommandSpec& spec) {
  const json doc = load_input(spec);
  const Measure mu = js::read_measure({{"kind", "atoms"}, {"weights", js::require(doc, "weights", "")}}, "");
  const unsigned g = read_small(doc, "g", std::nullopt, kMaxShiftMaterialize);
  unsigned cap = read_small(doc, "N", g, kMaxCylinderDepth);
  if (spec.cap) cap = *spec.cap;
  const auto report = centering_cover_report(mu.algebra(), mu, g, cap);

  Output o;
  o.document = js::cover_report(mu.algebra(), report);
  o.header = {"atom", "depth", "index", "witness"};
  for (const auto& e : report.entries) {
    o.rows.push_back({mu.algebra().labels()[e.atom], std::to_string(e.cylinder.depth),
                      std::to_string(e.cylinder.index), std::to_string(e.witness)});
  }
  o.summary.push_back("max witness " + std::to_string(report.max_witness) + " over " +
                      std::to_string(report.entries.size()) + " cells");
  return o;
}

Output cmd_swap(const CommandSpec& spec) {
  const json doc = load_input(spec);
  const Homomorphism a = js::read_homomorphism(js::require(doc, "phiA", ""), "/phiA");
  const Homomorphism b = js::read_homomorphism(js::require(doc, "phiB", ""), "/phiB");
  unsigned m = read_small(doc, "m", std::nullopt, 8);
  if (spec.cap) m = std::min(m, *spec.cap);
  const auto result = swap_automorphism(a, b, m);

  Output o;
  o.document = js::swap_result(result);
  o.header = {"A", "B", "side"};
  for (const auto& v : result.report.violations) o.rows.push_back({v.a.describe(), v.b.describe(), std::to_string(v.side)});
  o.summary.push_back(std::string(result.report.symmetric ? "symmetric" : "not symmetric") + " over " +
                      std::to_string(result.report.pairs_checked) + " chunk pairs with support < " +
                      std::to_string(m));
  if (result.automorphism) {
    o.summary.push_back("swap automorphism on " + std::to_string(result.automorphism->atoms().size()) +
                        " atoms of the generated subalgebra");
  }
  return o;
}

Output cmd_name(const CommandSpec& spec) {
  const json doc = load_input(spec);
  const Homomorphism phi = js::read_homomorphism(js::require(doc, "hom", ""), "/hom");
  SamplePoint x = BitStreamPoint{spec.seed.value_or(0)};
  if (auto it = doc.find("point"); it != doc.end()) {
    x = js::read_sample_point(*it, "/point");
  } else if (!spec.seed) {
    throw ValidationError("/point", "missing field (or pass --seed)");
  }
  const auto& queries = js::require(doc, "queries", "");
  if (!queries.is_array()) throw ValidationError("/queries", "expected an array");
  const unsigned atoms = phi.domain_kind() == AlgebraKind::finite ? phi.algebra().atom_count() : 0;
  const auto oracle = name_at_point(phi, x);

  Output o;
  json rows = json::array();
  o.header = {"query", "accepted", "lambda-num", "lambda-den"};
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const Element e = js::read_element(queries[i], phi.domain_kind(), atoms, "/queries/" + std::to_string(i));
    const bool accepted = oracle.accepts(e);
    const Rational mass = lambda_measure(evaluate_hom(phi, e));
    rows.push_back({{"query", js::element(e)}, {"accepted", accepted}, {"measure", js::rational(mass)}});
    o.rows.push_back({describe(e), accepted ? "true" : "false", num(mass), den(mass)});
  }
  o.document = {{"point", js::sample_point(x)}, {"results", rows}};
  return o;
}

Output cmd_converge(const CommandSpec& spec) {
  const json doc = load_input(spec);
  const HomSequence seq = js::read_sequence(js::require(doc, "sequence", ""), "/sequence");
  const unsigned s = read_small(doc, "s", std::nullopt, kMaxShiftMaterialize);
  unsigned n = read_small(doc, "N", std::nullopt, kMaxShiftMaterialize);
  if (spec.cap) n = std::min(n, *spec.cap);
  const auto report = nontriviality_verdict(seq, s, n);

  Output o;
  o.document = js::nontriviality(seq, report);
  o.header = {"n", "element", "num", "den"};
  for (const auto& st : report.stabilization) {
    const auto d = pointwise_report(seq, st.element, n);
    for (std::size_t k = 0; k < d.size(); ++k) {
      o.rows.push_back({std::to_string(k), describe(st.element), num(d[k]), den(d[k])});
    }
  }
  o.summary.push_back(std::string("pointwise: ") + (report.pointwise ? "true" : "false") +
                      ", uniform: " + (report.uniform ? "true" : "false") + " => " +
                      (report.nontrivial() ? "converges nontrivially" : "trivial or divergent"));
  return o;
}

Output cmd_density(const CommandSpec& spec) {
  std::uint64_t seed = spec.seed.value_or(0);
  std::optional<std::uint64_t> bits = spec.bits;
  StreamMode mode = spec.stream ? parse_stream_mode(*spec.stream) : StreamMode::splitmix64;
  if (spec.input_path || spec.inline_json) {
    const json doc = load_input(spec);
    if (auto it = doc.find("seed"); it != doc.end() && !spec.seed) seed = js::read_uint(*it, "/seed");
    if (auto it = doc.find("n_bits"); it != doc.end() && !bits) bits = js::read_uint(*it, "/n_bits");
    if (auto it = doc.find("stream"); it != doc.end() && !spec.stream) {
      if (!it->is_string()) throw ValidationError("/stream", "expected a string");
      mode = parse_stream_mode(it->get<std::string>());
    }
  }
  if (!bits) throw ValidationError("bits", "number of bits required (--bits)");
  if (*bits > 100'000'000) throw CapExceeded("density: more than 10^8 bits requested");
  const auto report = density_demo(seed, *bits, mode);

  Output o;
  json rows = json::array();
  o.header = {"k", "ones", "num", "den"};
  for (const auto& r : report.rows) {
    rows.push_back({{"k", r.k}, {"ones", r.ones}, {"density", js::rational(r.density)}});
    o.rows.push_back({std::to_string(r.k), std::to_string(r.ones), num(r.density), den(r.density)});
  }
  o.document = {{"seed", seed}, {"stream", stream_name(mode)}, {"rows", rows}, {"final", js::rational(report.final_density)}};
  o.summary.push_back("final density " + to_string(report.final_density));
  return o;
}

}  // namespace

int run(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    Output o;
    if (spec.command == "kelley") {
      o = cmd_kelley(spec);
    } else if (spec.command == "mix") {
      o = cmd_mix(spec);
    } else if (spec.command == "center") {
      o = cmd_center(spec);
    } else if (spec.command == "swap") {
      o = cmd_swap(spec);
    } else if (spec.command == "name") {
      o = cmd_name(spec);
    } else if (spec.command == "converge") {
      o = cmd_converge(spec);
    } else if (spec.command == "density") {
      o = cmd_density(spec);
    } else {
      err << "error: unknown command '" << spec.command << "'\n";
      return kValidationError;
    }
    emit(o, spec.format, out);
    return kOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace boolmeas::cli
