#include "pathgraph/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pathgraph/error.hpp"

namespace pathgraph::io {

namespace {

// Yields the next non-blank, non-comment line and its 1-based number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

[[noreturn]] void malformed(ErrorCode code, const LineReader& reader, const std::string& what) {
  throw Error(code, "line " + std::to_string(reader.number()) + ": " + what);
}

// Parses exactly `count` unsigned integers from `line`; false otherwise.
bool parse_uints(const std::string& line, std::vector<std::uint64_t>& out, std::size_t count) {
  std::istringstream ss(line);
  out.clear();
  std::string token;
  while (ss >> token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return false;
    }
    try {
      out.push_back(std::stoull(token));
    } catch (const std::exception&) {
      return false;
    }
  }
  return count == 0 || out.size() == count;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return in;
}

}  // namespace

std::string format_path(const SpanningPath& p) {
  std::string out;
  for (int i = 0; i < p.points(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(p.at(i));
  }
  return out;
}

SpanningPath parse_path(const std::string& text, int n) {
  std::vector<std::uint64_t> values;
  if (!parse_uints(text, values, 0)) throw Error(ErrorCode::MalformedLabels, "bad path text '" + text + "'");
  std::vector<PointId> seq;
  for (const auto x : values) {
    if (x >= static_cast<std::uint64_t>(kMaxPoints)) throw Error(ErrorCode::MalformedLabels, "point out of range");
    seq.push_back(static_cast<PointId>(x));
  }
  return SpanningPath::from_sequence(seq, n);
}

void write_graph(std::ostream& out, const AbstractGraph& g, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (const VertexId v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

AbstractGraph read_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  std::vector<std::uint64_t> values;
  if (!reader.next(line)) throw Error(ErrorCode::MalformedGraph, "missing header line");
  if (!parse_uints(line, values, 2)) malformed(ErrorCode::MalformedGraph, reader, "header must be 'N M'");
  const std::uint64_t vertex_count = values[0];
  const std::uint64_t edge_count = values[1];
  if (vertex_count > (std::uint64_t{1} << 31)) malformed(ErrorCode::MalformedGraph, reader, "N too large");

  std::vector<std::pair<VertexId, VertexId>> edges;
  while (reader.next(line)) {
    if (!parse_uints(line, values, 2)) malformed(ErrorCode::MalformedGraph, reader, "edge line must be 'u v'");
    const auto u = values[0];
    const auto v = values[1];
    if (!(u < v && v < vertex_count)) malformed(ErrorCode::MalformedGraph, reader, "need 0 <= u < v < N");
    const std::pair<VertexId, VertexId> e(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (!edges.empty() && !(edges.back() < e)) {
      malformed(ErrorCode::MalformedGraph, reader, "edges not strictly sorted");
    }
    edges.push_back(e);
  }
  if (edges.size() != edge_count) {
    throw Error(ErrorCode::MalformedGraph, "header declares " + std::to_string(edge_count) +
                                               " edges, found " + std::to_string(edges.size()));
  }
  return AbstractGraph::from_edges(static_cast<std::size_t>(vertex_count), edges);
}

void write_labels(std::ostream& out, std::span<const SpanningPath> labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << v << ": " << format_path(labels[v]) << '\n';
}

std::vector<SpanningPath> read_labels(std::istream& in) {
  LineReader reader(in);
  std::string line;
  std::vector<SpanningPath> labels;
  int n = 0;
  while (reader.next(line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) malformed(ErrorCode::MalformedLabels, reader, "expected '<id>: <path>'");
    std::vector<std::uint64_t> id;
    if (!parse_uints(line.substr(0, colon), id, 1)) malformed(ErrorCode::MalformedLabels, reader, "bad vertex id");
    if (id[0] != labels.size()) {
      malformed(ErrorCode::MalformedLabels, reader,
                "expected vertex id " + std::to_string(labels.size()) + ", found " + std::to_string(id[0]));
    }
    const std::string body = line.substr(colon + 1);
    if (n == 0) {
      std::vector<std::uint64_t> probe;
      parse_uints(body, probe, 0);
      n = static_cast<int>(probe.size());
    }
    try {
      labels.push_back(parse_path(body, n));
    } catch (const Error& e) {
      malformed(ErrorCode::MalformedLabels, reader, e.what());
    }
  }
  return labels;
}

void write_secret(std::ostream& out, std::span<const VertexId> secret) {
  for (std::size_t v = 0; v < secret.size(); ++v) out << v << ' ' << secret[v] << '\n';
}

std::vector<VertexId> read_secret(std::istream& in) {
  LineReader reader(in);
  std::string line;
  std::vector<std::uint64_t> values;
  std::vector<VertexId> secret;
  while (reader.next(line)) {
    if (!parse_uints(line, values, 2)) malformed(ErrorCode::MalformedLabels, reader, "secret line must be 'v original'");
    if (values[0] != secret.size()) malformed(ErrorCode::MalformedLabels, reader, "secret ids out of order");
    secret.push_back(static_cast<VertexId>(values[1]));
  }
  std::vector<bool> seen(secret.size(), false);
  for (const VertexId x : secret) {
    if (x >= secret.size() || seen[x]) throw Error(ErrorCode::NotPermutation, "secret is not a permutation");
    seen[x] = true;
  }
  return secret;
}

void write_file_atomic(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  const std::string tmp = path + ".tmp";
  std::error_code ec;
  try {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
    writer(out);
    out.flush();
    if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp);
  } catch (...) {
    std::filesystem::remove(tmp, ec);
    throw;
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::Io, "cannot rename " + tmp + " to " + path);
  }
}

AbstractGraph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

std::vector<SpanningPath> load_labels(const std::string& path) {
  auto in = open_input(path);
  return read_labels(in);
}

std::vector<VertexId> load_secret(const std::string& path) {
  auto in = open_input(path);
  return read_secret(in);
}

}  // namespace pathgraph::io
