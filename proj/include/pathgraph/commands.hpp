#pragma once

// Command implementations behind the `pathgraph` executable. Each returns
// the process exit code:
//   0 ok, 1 I/O failure, 2 bad input, 3 not a path graph,
//   4 verification mismatch, 5 invariant failure

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace pathgraph::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kBadInput = 2,
  kNotAPathGraph = 3,
  kMismatch = 4,
  kInvariantFailure = 5,
};

struct Config {
  std::uint64_t seed = 0;
  std::size_t diameter_cap = 10000;
  std::size_t automorphism_cap = 48;
  bool cross_check = false;
};

int cmd_generate(int n, const std::string& graph_path, const std::string& labels_path,
                 std::ostream& out, std::ostream& err);

int cmd_anonymize(const std::string& in_graph, std::uint64_t seed, const std::string& out_graph,
                  const std::optional<std::string>& out_secret, std::ostream& out, std::ostream& err);

int cmd_reconstruct(const std::string& in_graph, const std::string& out_labels, const Config& config,
                    std::ostream& out, std::ostream& err);

/// `secret` may be empty for an identity relabeling.
int cmd_verify(const std::string& graph_path, const std::string& labels_path,
               const std::string& recovered_path, const std::optional<std::string>& secret_path,
               std::ostream& out, std::ostream& err);

struct StatsRequest {
  std::optional<int> n;
  std::optional<std::string> graph_path;
  // Force the diameter; fails above the cap instead of reporting GATED.
  bool require_diameter = false;
};

int cmd_stats(const StatsRequest& request, const Config& config, std::ostream& out, std::ostream& err);

int cmd_invariants(int n, const Config& config, const std::optional<std::string>& report_path,
                   std::ostream& out, std::ostream& err);

/// CSV columns n,N,E,build_ms,reconstruct_ms. Rows are flushed as they are
/// produced.
int cmd_bench(int n_min, int n_max, const std::string& out_csv, const Config& config,
              std::ostream& out, std::ostream& err);

}  // namespace pathgraph::cli
