// ovdiam: generate OV instances, build the 4-OV diameter gadget, compute
// diameters and verify the 4-vs-7 gap on concrete instances.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ovdiam/cli.hpp"

int main(int argc, char** argv) {
  using ovdiam::cli::Command;
  ovdiam::cli::RunConfig cfg;
  std::string mode = "no-quad";

  CLI::App app{"4-OV to Diameter gadget toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a certified OV instance");
  gen->add_option("--n", cfg.n, "number of vectors N")->required()->check(CLI::PositiveNumber);
  gen->add_option("--len", cfg.ell, "vector dimension ell")->required()->check(CLI::PositiveNumber);
  gen->add_option("--mode", mode, "no-quad | planted")->check(CLI::IsMember({"no-quad", "planted"}));
  gen->add_option("--density", cfg.density, "probability of a 1 in a free coordinate");
  gen->add_option("--seed", cfg.seed, "RNG seed");
  gen->add_option("--attempts", cfg.max_attempts, "rejection-sampling budget");
  gen->add_option("-o,--output", cfg.output, "instance file (default: standard output)");
  gen->add_option("--witness", cfg.witness_output, "witness file (default: <output>.witness)");

  auto* solve = app.add_subcommand("solve", "brute-force k-OV");
  solve->add_option("input", cfg.input, "instance file")->required();
  solve->add_option("--k", cfg.k, "tuple arity")->check(CLI::Range(2, 4));

  auto* reduce = app.add_subcommand("reduce", "build the gadget graph");
  reduce->add_option("input", cfg.input, "instance file")->required();
  reduce->add_option("--graph", cfg.graph_output, "DIMACS graph output");
  reduce->add_option("--labels", cfg.labels_output, "TSV label map output");
  reduce->add_option("--max-bytes", cfg.max_bytes, "refuse builds predicted above this size");

  auto* diameter = app.add_subcommand("diameter", "diameter of a DIMACS graph");
  diameter->add_option("input", cfg.input, "graph file")->required();
  auto* exact = diameter->add_flag("--exact", "exact diameter (default)");
  auto* approx = diameter->add_flag("--approx2", cfg.approx2, "folklore 2-approximation");
  exact->excludes(approx);
  diameter->add_option("--pivot", cfg.pivot, "1-based pivot vertex for --approx2")->needs(approx);

  auto* verify = app.add_subcommand("verify", "check completeness and soundness on an instance");
  verify->add_option("input", cfg.input, "instance file")->required();
  verify->add_option("--seed", cfg.seed, "sampling seed for large certificate suites");
  verify->add_option("--max-bytes", cfg.max_bytes, "refuse builds predicted above this size");

  auto* bench = app.add_subcommand("bench", "timing table over an (N, ell) grid");
  bench->add_option("--n", cfg.bench_n, "N values")->delimiter(',');
  bench->add_option("--len", cfg.bench_ell, "ell values")->delimiter(',');
  bench->add_option("--mode", mode, "no-quad | planted")->check(CLI::IsMember({"no-quad", "planted"}));
  bench->add_option("--density", cfg.density, "generator density");
  bench->add_option("--seed", cfg.seed, "RNG seed");
  bench->add_option("--reps", cfg.repetitions, "repetitions per cell");
  bench->add_option("--max-bytes", cfg.max_bytes, "refuse builds predicted above this size");

  CLI11_PARSE(app, argc, argv);

  const std::map<CLI::App*, Command> commands = {
      {gen, Command::Gen},           {solve, Command::Solve},   {reduce, Command::Reduce},
      {diameter, Command::Diameter}, {verify, Command::Verify}, {bench, Command::Bench}};
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) cfg.command = cmd;
  }
  cfg.mode = ovdiam::parse_gen_mode(mode);
  return ovdiam::cli::run(cfg, std::cout, std::cerr);
}
