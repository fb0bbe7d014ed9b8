#pragma once

// Text formats. All readers skip blank lines and lines starting with '#'.
//
//   graph file    "N M", then M lines "u v" with u < v, sorted
//   label file    "<id>: p0 p1 ... p(n-1)" per vertex, sorted by id
//   secret file   "<abstract id> <original id>" per vertex, sorted by
//                 abstract id

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pathgraph/graph.hpp"
#include "pathgraph/paths.hpp"

namespace pathgraph::io {

/// Space-separated point sequence in canonical orientation.
std::string format_path(const SpanningPath& p);
SpanningPath parse_path(const std::string& text, int n);

void write_graph(std::ostream& out, const AbstractGraph& g,
                 std::span<const std::string> comments = {});
AbstractGraph read_graph(std::istream& in);

void write_labels(std::ostream& out, std::span<const SpanningPath> labels);
std::vector<SpanningPath> read_labels(std::istream& in);

void write_secret(std::ostream& out, std::span<const VertexId> secret);
std::vector<VertexId> read_secret(std::istream& in);

/// Writes through a temporary file in the same directory and renames it
/// over `path`. Throws Error(Io).
void write_file_atomic(const std::string& path, const std::function<void(std::ostream&)>& writer);

AbstractGraph load_graph(const std::string& path);
std::vector<SpanningPath> load_labels(const std::string& path);
std::vector<VertexId> load_secret(const std::string& path);

}  // namespace pathgraph::io
