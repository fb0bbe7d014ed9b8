#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pathgraph/commands.hpp"

using namespace pathgraph;

int main(int argc, char** argv) {
  CLI::App app{"Generate, anonymize and reconstruct path graphs of convex point sets"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::Config config;
  app.add_option("--seed", config.seed, "Seed for anonymization and suite round trips")
      ->envname("PATHGRAPH_SEED");
  app.add_option("--diameter-cap", config.diameter_cap, "Largest N for exact diameter")
      ->envname("PATHGRAPH_DIAMETER_CAP");
  app.add_option("--automorphism-cap", config.automorphism_cap, "Largest N for automorphism search")
      ->envname("PATHGRAPH_AUTOMORPHISM_CAP");
  app.add_flag("--cross-check", config.cross_check,
               "Also recover boundary sets by n breadth-first searches and compare")
      ->envname("PATHGRAPH_CROSS_CHECK");

  int n = 0;
  std::string graph_path, labels_path, in_path, out_path, recovered_path;
  std::optional<std::string> secret_path, report_path;

  auto* generate = app.add_subcommand("generate", "Write G(P) and its path labels");
  generate->add_option("-n,--n", n, "Number of points")->required();
  generate->add_option("--graph", graph_path, "Output graph file")->required();
  generate->add_option("--labels", labels_path, "Output label file")->required();

  auto* anonymize = app.add_subcommand("anonymize", "Relabel vertices by a seeded permutation");
  anonymize->add_option("--in", in_path, "Input graph file")->required()->check(CLI::ExistingFile);
  anonymize->add_option("--out", out_path, "Output graph file")->required();
  anonymize->add_option("--secret", secret_path, "Write the permutation here");

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover every vertex's path");
  reconstruct->add_option("--in", in_path, "Input graph file")->required()->check(CLI::ExistingFile);
  reconstruct->add_option("--out", out_path, "Output label file")->required();

  auto* verify = app.add_subcommand("verify", "Match recovered labels to ground truth up to symmetry");
  verify->add_option("--graph", graph_path, "Original graph file")->required()->check(CLI::ExistingFile);
  verify->add_option("--labels", labels_path, "Original label file")->required()->check(CLI::ExistingFile);
  verify->add_option("--recovered", recovered_path, "Recovered label file")->required()->check(CLI::ExistingFile);
  verify->add_option("--secret", secret_path, "Secret permutation file")->check(CLI::ExistingFile);

  cli::StatsRequest stats_request;
  auto* stats = app.add_subcommand("stats", "Vertex, edge, degree and diameter statistics");
  auto* stats_n = stats->add_option("-n,--n", stats_request.n, "Build G(P) for n points");
  stats->add_option("--graph", stats_request.graph_path, "Read a graph file instead")
      ->excludes(stats_n)
      ->check(CLI::ExistingFile);
  stats->add_flag("--diameter", stats_request.require_diameter, "Require the exact diameter");

  auto* invariants = app.add_subcommand("invariants", "Run the invariant suite for n points");
  invariants->add_option("-n,--n", n, "Number of points")->required();
  invariants->add_option("--report", report_path, "Write a key=value report here");

  int n_min = 8;
  int n_max = 16;
  auto* bench = app.add_subcommand("bench", "Time build and reconstruction over a range of n");
  bench->add_option("--n-min", n_min, "Smallest n");
  bench->add_option("--n-max", n_max, "Largest n");
  bench->add_option("--out", out_path, "CSV output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kBadInput;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (generate->parsed()) return cli::cmd_generate(n, graph_path, labels_path, out, err);
  if (anonymize->parsed()) return cli::cmd_anonymize(in_path, config.seed, out_path, secret_path, out, err);
  if (reconstruct->parsed()) return cli::cmd_reconstruct(in_path, out_path, config, out, err);
  if (verify->parsed()) return cli::cmd_verify(graph_path, labels_path, recovered_path, secret_path, out, err);
  if (stats->parsed()) return cli::cmd_stats(stats_request, config, out, err);
  if (invariants->parsed()) return cli::cmd_invariants(n, config, report_path, out, err);
  if (bench->parsed()) return cli::cmd_bench(n_min, n_max, out_path, config, out, err);
  return cli::kBadInput;
}
