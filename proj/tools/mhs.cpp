// Command-line front end: enumeration engines, generators and the analysis
// toolbox. Run `mhs --help` for the command list.

#include <iostream>

#include "CLI11.hpp"
#include "mhs/cli.hpp"

namespace {

using mhs::cli::Algorithm;
using mhs::cli::Command;
using mhs::cli::RunConfig;

void add_engine_options(CLI::App* sub, RunConfig& cfg, std::string& algorithm) {
  sub->add_option("input", cfg.input, "Hypergraph file (default: standard input)");
  sub->add_option("--algorithm", algorithm, "auto, rank3, rankk, compression or oracle")
      ->check(CLI::IsMember({"auto", "rank3", "rankk", "compression", "oracle"}));
  sub->add_option("--alpha", cfg.alpha, "Compression set fraction in [0.5, 1]")
      ->check(CLI::Range(0.5, 1.0));
  sub->add_flag("--stats", cfg.stats, "Print search statistics to standard error");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate minimal transversals of bounded-rank hypergraphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string algorithm = "auto";
  std::string kind = "random";

  auto* enumerate = app.add_subcommand("enumerate", "Print every minimal transversal");
  add_engine_options(enumerate, cfg, algorithm);
  enumerate->add_flag("--canonical", cfg.canonical, "Sort the output lexicographically");

  auto* count = app.add_subcommand("count", "Print the number of minimal transversals");
  add_engine_options(count, cfg, algorithm);

  auto* minimum = app.add_subcommand("minimum", "Print one minimum-cardinality transversal");
  add_engine_options(minimum, cfg, algorithm);

  auto* count_minimum =
      app.add_subcommand("count-minimum", "Print the number of minimum-cardinality transversals");
  add_engine_options(count_minimum, cfg, algorithm);

  auto* bench = app.add_subcommand("bench", "Enumerate and report search statistics");
  add_engine_options(bench, cfg, algorithm);

  auto* generate = app.add_subcommand("generate", "Write a generated hypergraph");
  generate->add_option("--kind", kind, "lb, triangles or random")
      ->check(CLI::IsMember({"lb", "lower_bound", "triangles", "random"}));
  generate->add_option("--k", cfg.generator.k, "Rank");
  generate->add_option("--n", cfg.generator.n, "Vertex count")->required();
  generate->add_option("--m", cfg.generator.m, "Edge count (random)");
  generate->add_option("--seed", cfg.generator.seed, "Seed (random)");

  auto* verify = app.add_subcommand("verify-measure", "Check the rank-3 measure constraints");
  verify->add_option("--weights", cfg.weights_path, "File of omega_<i>/psi_<i> lines");
  verify->add_option("--tolerance", cfg.tolerance, "Allowed excess per constraint");

  auto* table = app.add_subcommand("bounds-table", "Print lower/upper growth bases per rank");
  table->add_option("--kmax", cfg.kmax, "Largest rank")->check(CLI::Range(2, 1000));

  CLI11_PARSE(app, argc, argv);

  const std::pair<CLI::App*, Command> commands[] = {
      {enumerate, Command::enumerate},   {count, Command::count},
      {minimum, Command::minimum},       {count_minimum, Command::count_minimum},
      {bench, Command::bench},           {generate, Command::generate},
      {verify, Command::verify_measure}, {table, Command::bounds_table},
  };
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }
  cfg.algorithm = *mhs::cli::parse_algorithm(algorithm);
  cfg.generator.kind = *mhs::cli::parse_generator_kind(kind);

  std::ios::sync_with_stdio(false);
  return mhs::cli::run(cfg, std::cin, std::cout, std::cerr);
}
