#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "boolmeas/rational.hpp"

namespace boolmeas::cli {

enum class Format { table, csv, json };

enum ExitStatus : int {
  kOk = 0,
  kInternalError = 1,
  kValidationError = 2,
  kCapExceeded = 3,
};

struct CommandSpec {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_json;
  Format format = Format::table;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> cap;
  // density only
  std::optional<std::uint64_t> bits;
  std::optional<std::string> stream;
};

std::vector<std::string> commands();

// Runs one command; the report goes to `out`, diagnostics to `err`.
int run(const CommandSpec& spec, std::ostream& out, std::ostream& err);

enum class StreamMode { splitmix64, ones, alternating };
StreamMode parse_stream_mode(const std::string& s);

struct DensityRow {
  std::uint64_t k = 0;
  std::uint64_t ones = 0;
  Rational density;
};

struct DensityReport {
  std::uint64_t seed = 0;
  StreamMode mode = StreamMode::splitmix64;
  std::vector<DensityRow> rows;  // k = 1, 2, 5, 10, 20, 50, ... and n_bits
  Rational final_density;
};

// Running density of ones among the first binary digits of a sampled
// point. The splitmix64 stream consumes the same digits as BitStreamPoint.
DensityReport density_demo(std::uint64_t seed, std::uint64_t n_bits, StreamMode mode = StreamMode::splitmix64);

}  // namespace boolmeas::cli
