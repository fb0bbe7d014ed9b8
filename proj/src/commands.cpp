#include "pathgraph/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "pathgraph/error.hpp"
#include "pathgraph/io.hpp"
#include "pathgraph/pathgraph.hpp"
#include "pathgraph/random.hpp"
#include "pathgraph/reconstruct.hpp"
#include "pathgraph/verify.hpp"

namespace pathgraph::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io:
      return kIoError;
    case ErrorCode::NotAPathGraphOrder:
    case ErrorCode::BoundaryCountMismatch:
    case ErrorCode::NotACycle:
    case ErrorCode::Disconnected:
    case ErrorCode::LevelOutOfRange:
    case ErrorCode::BoundarySetMismatch:
    case ErrorCode::EmptyLowerNeighborhood:
    case ErrorCode::ArcStructureInvalid:
    case ErrorCode::NoLeafFound:
    case ErrorCode::AmbiguousCompletion:
    case ErrorCode::NoCompletion:
    case ErrorCode::InconsistentOutput:
      return kNotAPathGraph;
    case ErrorCode::NoDihedralMatch:
      return kMismatch;
    default:
      return kBadInput;
  }
}

// Runs body and converts library errors into exit codes and a diagnostic.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ReconstructError& e) {
    err << "error: stage=" << e.stage() << " code=" << to_string(e.code()) << ": " << e.what() << '\n';
    return kNotAPathGraph;
  } catch (const VerificationError& e) {
    err << "error: code=" << to_string(e.code()) << " witness=" << e.witness() << ": " << e.what() << '\n';
    return kMismatch;
  } catch (const Error& e) {
    err << "error: code=" << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kIoError;
  }
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int cmd_generate(int n, const std::string& graph_path, const std::string& labels_path,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto pg = PathGraph::build(n);
    io::write_file_atomic(graph_path, [&](std::ostream& os) { io::write_graph(os, pg.graph()); });
    io::write_file_atomic(labels_path, [&](std::ostream& os) { io::write_labels(os, pg.labels()); });
    out << "generated n=" << n << " N=" << pg.vertex_count() << " E=" << pg.graph().edge_count() << '\n';
    return int{kOk};
  });
}

int cmd_anonymize(const std::string& in_graph, std::uint64_t seed, const std::string& out_graph,
                  const std::optional<std::string>& out_secret, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto g = io::load_graph(in_graph);
    const auto anon = anonymize(g, seed);
    const std::vector<std::string> comments{"anonymized seed=" + std::to_string(seed) +
                                            " prng=" + std::string(kPermutationAlgorithm)};
    io::write_file_atomic(out_graph, [&](std::ostream& os) { io::write_graph(os, anon.graph, comments); });
    if (out_secret) {
      io::write_file_atomic(*out_secret, [&](std::ostream& os) { io::write_secret(os, anon.secret); });
    }
    out << "anonymized N=" << anon.graph.vertex_count() << " seed=" << seed << '\n';
    return int{kOk};
  });
}

int cmd_reconstruct(const std::string& in_graph, const std::string& out_labels, const Config& config,
                    std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto g = io::load_graph(in_graph);
    ReconOptions options;
    options.cross_check_boundary_sets = config.cross_check;
    const auto result = reconstruct_all(g, options);
    io::write_file_atomic(out_labels, [&](std::ostream& os) { io::write_labels(os, result.paths); });
    out << "reconstructed n=" << result.n << " N=" << result.paths.size() << '\n';
    return int{kOk};
  });
}

int cmd_verify(const std::string& graph_path, const std::string& labels_path,
               const std::string& recovered_path, const std::optional<std::string>& secret_path,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto g = io::load_graph(graph_path);
    auto labels = io::load_labels(labels_path);
    const auto recovered = io::load_labels(recovered_path);
    std::vector<VertexId> secret;
    if (secret_path) secret = io::load_secret(*secret_path);
    if (labels.empty()) throw Error(ErrorCode::MalformedLabels, "empty label file");
    const int n = labels.front().points();
    const auto original = PathGraph::from_parts(n, std::move(labels), std::move(g));
    const Dihedral match = check_reconstruction(original, secret, recovered);
    out << "rot=" << match.rotation() << ", refl=" << (match.reflected() ? 1 : 0) << '\n';
    return int{kOk};
  });
}

int cmd_stats(const StatsRequest& request, const Config& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    AbstractGraph g;
    if (request.graph_path) {
      g = io::load_graph(*request.graph_path);
    } else if (request.n) {
      g = PathGraph::build(*request.n).graph();
    } else {
      throw Error(ErrorCode::UnsupportedN, "stats needs either n or a graph file");
    }
    StatsOptions options;
    options.diameter_cap = config.diameter_cap;
    options.diameter = request.require_diameter || g.vertex_count() <= config.diameter_cap;
    const auto report = stats(g, options);
    out << "vertices=" << report.vertices << '\n';
    out << "edges=" << report.edges << '\n';
    out << "max_degree=" << report.max_degree << '\n';
    for (const auto& [degree, count] : report.degree_histogram) {
      out << "degree[" << degree << "]=" << count << '\n';
    }
    if (report.diameter) {
      out << "diameter=" << *report.diameter << '\n';
    } else {
      out << "diameter=GATED\n";
    }
    return int{kOk};
  });
}

int cmd_invariants(int n, const Config& config, const std::optional<std::string>& report_path,
                   std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SuiteConfig suite;
    suite.seed = config.seed;
    suite.diameter_cap = config.diameter_cap;
    suite.automorphism_cap = config.automorphism_cap;
    suite.cross_check_boundary_sets = config.cross_check;
    const auto report = invariant_suite(n, suite);
    write_report_text(out, report);
    if (report_path) {
      io::write_file_atomic(*report_path, [&](std::ostream& os) { write_report_keyvalue(os, report); });
    }
    return report.passed() ? int{kOk} : int{kInvariantFailure};
  });
}

int cmd_bench(int n_min, int n_max, const std::string& out_csv, const Config& config,
              std::ostream& out, std::ostream& err) {
  std::ofstream csv(out_csv, std::ios::trunc);
  if (!csv) {
    err << "error: cannot write " << out_csv << '\n';
    return kIoError;
  }
  csv << "n,N,E,build_ms,reconstruct_ms\n" << std::flush;
  return guarded(err, [&] {
    for (int n = n_min; n <= n_max; ++n) {
      auto t0 = std::chrono::steady_clock::now();
      const auto pg = PathGraph::build(n);
      const double build_ms = millis_since(t0);

      const auto anon = anonymize(pg.graph(), config.seed);
      t0 = std::chrono::steady_clock::now();
      const auto result = reconstruct_all(anon.graph);
      const double reconstruct_ms = millis_since(t0);
      check_reconstruction(pg, anon.secret, result.paths);

      csv << n << ',' << pg.vertex_count() << ',' << pg.graph().edge_count() << ',' << std::fixed
          << std::setprecision(3) << build_ms << ',' << reconstruct_ms << '\n'
          << std::flush;
      out << "n=" << n << " N=" << pg.vertex_count() << " reconstruct_ms=" << std::fixed
          << std::setprecision(3) << reconstruct_ms << '\n';
    }
    return int{kOk};
  });
}

}  // namespace pathgraph::cli
