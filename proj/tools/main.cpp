#include <iostream>

#include "CLI11.hpp"
#include "boolmeas/cli.hpp"

int main(int argc, char** argv) {
  using boolmeas::cli::Format;

  CLI::App app{"boolmeas: exact measures and homomorphisms on Boolean algebras"};
  app.require_subcommand(1);

  boolmeas::cli::CommandSpec spec;
  std::string format = "table";
  const std::map<std::string, std::string> help = {
      {"kelley", "intersection number by exact LP and brute force"},
      {"mix", "mixing table lambda(T^-n a & b) of the doubling map"},
      {"center", "centering witnesses for every atom and cylinder"},
      {"swap", "chunk symmetry check and swap automorphism"},
      {"name", "evaluate the ultrafilter named by a homomorphism at a point"},
      {"converge", "pointwise vs uniform convergence verdict"},
      {"density", "running density of ones in a sampled point"},
  };
  for (const auto& name : boolmeas::cli::commands()) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--in", spec.input_path, "input JSON file");
    sub->add_option("--json", spec.inline_json, "inline input JSON");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--seed", spec.seed, "seed for sampled points");
    sub->add_option("--cap", spec.cap, "enumeration cap / horizon override");
    if (name == "density") {
      sub->add_option("--bits", spec.bits, "number of binary digits");
      sub->add_option("--stream", spec.stream, "splitmix64 | ones | alternating");
    }
    sub->callback([&spec, name] { spec.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : boolmeas::cli::kValidationError;
  }
  spec.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::table;
  return boolmeas::cli::run(spec, std::cout, std::cerr);
}
