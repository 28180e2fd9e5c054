#include <iostream>

#include <CLI11.hpp>

#include "wha/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant computations with finite-dimensional weak Hopf algebras"};
  app.require_subcommand(1);
  wha::CommandConfig cfg;
  std::string field;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"verify", "Run the weak bialgebra and antipode axiom suites"},
      {"analyze", "Counital maps, H_s/H_t bases, antipode order and bijectivity"},
      {"integrals", "Left/right integrals, unimodularity, invertibility of integrals"},
      {"nakayama", "Nakayama bimodule U and its description by left integrals"},
      {"decompose", "Split into weak Hopf algebra summands and write them as files"},
      {"check", "Full regression over the builtin catalog"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (name == "check")
      sub->add_option("input", cfg.input, "Ignored; the builtin catalog is always used");
    else
      sub->add_option("input", cfg.input, "Path to a .wha.json file or a builtin name (k, kc2, fun-c2, sweedler, pairgpd2, pairgpd3, sum:<a>,<b>)")
          ->required();
    sub->add_option("--field", field, "Q or Fp:<p>; defaults to the file's field, or Q");
    sub->add_option("--max-dim", cfg.max_dim, "Largest dimension for the Nakayama computation")->check(CLI::PositiveNumber);
    sub->add_option("--power-n", cfg.power_n, "Check U^{⊗n} for n = 1..N")->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "Emit a machine-readable report");
    sub->add_option("--out", cfg.out_dir, "Output directory for decompose");
    sub->add_flag("--witness", cfg.witness, "Include witness matrices");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!field.empty()) cfg.field = field;
  return wha::run(cfg, std::cout, std::cerr);
}
