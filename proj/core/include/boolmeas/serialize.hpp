#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "boolmeas/algebras.hpp"
#include "boolmeas/clopen.hpp"
#include "boolmeas/convergence.hpp"
#include "boolmeas/dynamics.hpp"
#include "boolmeas/kelley.hpp"
#include "boolmeas/measures.hpp"
#include "boolmeas/names.hpp"

// JSON wire formats. Every reader takes the JSON pointer of the value it is
// reading and throws ValidationError(pointer, message) on bad input.
namespace boolmeas::json {

using nlohmann::json;

inline constexpr const char* kSchema = "boolmeas/1";

// Rationals are [num, den]; integers too wide for int64 are strings.
json rational(const Rational& r);
Rational read_rational(const json& j, const std::string& at);
// A bare integer that must fit the given range.
std::uint64_t read_uint(const json& j, const std::string& at, std::uint64_t max = UINT64_MAX);

// [[num-lo, den-lo, num-hi, den-hi], ...] in canonical order.
json clopen(const ClopenSet& a);
ClopenSet read_clopen(const json& j, const std::string& at);

json algebra(const FiniteSetAlgebra& a);  // {"atoms": [...]}
FiniteSetAlgebra read_algebra(const json& j, const std::string& at);

json cantor(const CantorClopen& c);  // {"support": [...], "patterns": ["01", ...]}
CantorClopen read_cantor(const json& j, const std::string& at);

json finite_cofinite(const FiniteCofinite& f);  // {"finite": [...], "cofinite": bool}
FiniteCofinite read_finite_cofinite(const json& j, const std::string& at);

// Elements: bitstring, Cantor object, or finite-cofinite object.
json element(const Element& e);
Element read_element(const json& j, AlgebraKind kind, unsigned atom_count, const std::string& at);

// {"domain": {"kind": "finite", "atoms": [...]} | {"kind": "cantor"} |
//  {"kind": "finite-cofinite"}, "images": {key: clopen}, "tail": ...}
// Finite images are keyed by atom label, the others by index.
json homomorphism(const Homomorphism& phi);
Homomorphism read_homomorphism(const json& j, const std::string& at);

// {"kind": "atoms", "weights": [[label, num, den], ...]} or
// {"kind": "induced", "hom": <homomorphism>}
json measure(const Measure& mu);
Measure read_measure(const json& j, const std::string& at);

// {"rational": [num, den]} or {"seed": n, "generator": "splitmix64"}
json sample_point(const SamplePoint& x);
SamplePoint read_sample_point(const json& j, const std::string& at);

// {"atoms": [...], "family": ["110", ...]}
KelleyInstance read_kelley_instance(const json& j, const std::string& at);
json kelley_result(const KelleyInstance& instance, const SupportsVerdict& v);

json mixing(const std::vector<Rational>& table);
json cover_report(const FiniteSetAlgebra& algebra, const CoverReport& r);
json symmetry_report(const SymmetryReport& r);
json swap_result(const SwapResult& r);

// {"kind": "bit-flip", "base": hom} | {"kind": "principal"} |
// {"kind": "constant", "hom": hom}
HomSequence read_sequence(const json& j, const std::string& at);
json nontriviality(const HomSequence& seq, const NontrivialityReport& r);

// Pointer helpers.
std::string child(const std::string& at, const std::string& key);
std::string child(const std::string& at, std::size_t index);
const json& require(const json& j, const std::string& key, const std::string& at);

}  // namespace boolmeas::json
