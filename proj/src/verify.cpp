#include "pathgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pathgraph/error.hpp"

namespace pathgraph {

namespace {

constexpr VertexId kUnassigned = ~VertexId{0};

std::vector<int> refine_colors(const AbstractGraph& g) {
  const std::size_t count = g.vertex_count();
  std::vector<int> color(count);
  for (VertexId v = 0; v < count; ++v) color[v] = static_cast<int>(g.degree(v));
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> signature(count);
    for (VertexId v = 0; v < count; ++v) {
      auto& sig = signature[v];
      sig.push_back(color[v]);
      for (const VertexId w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin() + 1, sig.end());
      ids.emplace(sig, 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (VertexId v = 0; v < count; ++v) color[v] = ids[signature[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const AbstractGraph& g)
      : g_(g), color_(refine_colors(g)), image_(g.vertex_count(), kUnassigned),
        used_(g.vertex_count(), false), parent_(g.vertex_count(), kUnassigned) {
    // BFS order so every vertex after a component root has an assigned
    // neighbour, which restricts its candidates to that neighbour's image
    std::vector<bool> seen(g.vertex_count(), false);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      const std::size_t head_start = order_.size();
      order_.push_back(root);
      for (std::size_t head = head_start; head < order_.size(); ++head) {
        const VertexId v = order_[head];
        for (const VertexId w : g.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = true;
            parent_[w] = v;
            order_.push_back(w);
          }
        }
      }
    }
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  bool consistent(std::size_t depth, VertexId v, VertexId c) const {
    for (std::size_t j = 0; j < depth; ++j) {
      const VertexId w = order_[j];
      if (g_.adjacent(v, w) != g_.adjacent(c, image_[w])) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      found_.push_back(image_);
      return;
    }
    const VertexId v = order_[depth];
    const auto attempt = [&](VertexId c) {
      if (used_[c] || color_[c] != color_[v] || !consistent(depth, v, c)) return;
      image_[v] = c;
      used_[c] = true;
      extend(depth + 1);
      used_[c] = false;
      image_[v] = kUnassigned;
    };
    if (parent_[v] != kUnassigned) {
      for (const VertexId c : g_.neighbors(image_[parent_[v]])) attempt(c);
    } else {
      for (VertexId c = 0; c < g_.vertex_count(); ++c) attempt(c);
    }
  }

  const AbstractGraph& g_;
  std::vector<int> color_;
  std::vector<VertexId> order_;
  Permutation image_;
  std::vector<bool> used_;
  std::vector<VertexId> parent_;
  std::vector<Permutation> found_;
};

VertexId original_of(std::span<const VertexId> secret, VertexId v) {
  return secret.empty() ? v : secret[v];
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << x;
  return os.str();
}

}  // namespace

Dihedral check_reconstruction(const PathGraph& original, std::span<const VertexId> secret,
                              std::span<const SpanningPath> recovered) {
  const std::size_t count = original.vertex_count();
  if (recovered.size() != count || (!secret.empty() && secret.size() != count)) {
    throw Error(ErrorCode::MalformedLabels, "recovered labels, secret and graph differ in size");
  }
  VertexId witness = 0;
  for (const Dihedral& g : dihedral_elements(original.points())) {
    VertexId v = 0;
    for (; v < count; ++v) {
      if (recovered[v].points() != original.points() ||
          !(apply(g, recovered[v]) == original.label(original_of(secret, v)))) {
        break;
      }
    }
    if (v == count) return g;
    witness = std::max(witness, v);
  }
  throw VerificationError(ErrorCode::NoDihedralMatch, witness,
                          "no symmetry of the " + std::to_string(original.points()) +
                              "-gon maps the recovered labels onto ground truth; first mismatch at vertex " +
                              std::to_string(witness));
}

BoundaryMask apply(const Dihedral& g, BoundaryMask mask) {
  const int n = g.points();
  BoundaryMask out = 0;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) out |= BoundaryMask{1} << boundary_index(g.apply(boundary_edge(i, n)), n);
  }
  return out;
}

Dihedral gauge_alignment(const PathGraph& original, std::span<const VertexId> secret,
                         const Gauge& gauge) {
  const int n = original.points();
  std::vector<BoundaryMask> omitted;
  for (const VertexId v : gauge.cycle) {
    const SpanningPath& truth = original.label(original_of(secret, v));
    if (truth.level() != 0) {
      throw VerificationError(ErrorCode::NoDihedralMatch, v, "gauge vertex is not a boundary path");
    }
    omitted.push_back(full_boundary(n) & ~truth.boundary_mask());
  }
  for (const Dihedral& g : dihedral_elements(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = apply(g, BoundaryMask{1} << i) == omitted[static_cast<std::size_t>(i)];
    if (ok) return g;
  }
  throw VerificationError(ErrorCode::NoDihedralMatch, gauge.cycle.front(),
                          "gauge is not a dihedral image of the boundary");
}

std::vector<Permutation> automorphism_group(const AbstractGraph& g, std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw Error(ErrorCode::TooLarge, "automorphism search limited to " + std::to_string(vertex_cap) +
                                         " vertices, got " + std::to_string(g.vertex_count()));
  }
  return AutomorphismSearch(g).run();
}

bool acts_dihedrally(const Permutation& sigma, std::span<const VertexId> cycle) {
  const std::size_t n = cycle.size();
  std::map<VertexId, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position[cycle[i]] = i;
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = position.find(sigma[cycle[i]]);
    if (it == position.end()) return false;
    image[i] = it->second;
  }
  bool rotation = true;
  bool reflection = true;
  for (std::size_t i = 0; i < n; ++i) {
    rotation = rotation && image[i] == (image[0] + i) % n;
    reflection = reflection && image[i] == (image[0] + n - i) % n;
  }
  return rotation || reflection;
}

std::vector<SpanningPath> corrupt_label(std::span<const SpanningPath> paths, VertexId v) {
  std::vector<SpanningPath> out(paths.begin(), paths.end());
  out[v] = out[(v + 1) % out.size()];
  return out;
}

AbstractGraph delete_edge(const AbstractGraph& g, VertexId u, VertexId v) {
  auto edges = g.edge_list();
  const auto key = std::minmax(u, v);
  const auto it = std::find(edges.begin(), edges.end(), std::pair<VertexId, VertexId>(key.first, key.second));
  if (it == edges.end()) throw Error(ErrorCode::NotAnEdge, "cannot delete a non-edge");
  edges.erase(it);
  return AbstractGraph::from_edges(g.vertex_count(), edges);
}

AbstractGraph add_edge(const AbstractGraph& g, VertexId u, VertexId v) {
  auto edges = g.edge_list();
  edges.emplace_back(u, v);
  return AbstractGraph::from_edges(g.vertex_count(), edges);
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Gated: return "GATED";
  }
  return "?";
}

VerificationReport invariant_suite(int n, const SuiteConfig& config) {
  check_supported(n);
  VerificationReport report;
  report.n = n;

  const auto run = [&](const std::string& name, bool gated, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    if (gated) {
      r.status = CheckStatus::Gated;
      report.checks.push_back(r);
      return;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      if (r.witness.empty()) r.witness = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (r.status == CheckStatus::Fail && r.witness.empty()) r.witness = "unspecified";
    report.checks.push_back(std::move(r));
  };
  const auto fail_with = [](CheckResult& r, std::string witness) {
    r.status = CheckStatus::Fail;
    r.witness = std::move(witness);
  };

  const PathGraph pg = PathGraph::build(n, config.policy);
  const AbstractGraph& g = pg.graph();
  const std::size_t count = pg.vertex_count();
  const std::size_t top = static_cast<std::size_t>(3 * n - 7);

  run("vertices", false, [&](CheckResult& r) {
    r.value = std::to_string(count);
    if (count != path_count(n)) fail_with(r, "expected " + std::to_string(path_count(n)));
  });

  run("degree_law", false, [&](CheckResult& r) {
    std::size_t at_top = 0;
    std::size_t max_degree = 0;
    for (VertexId v = 0; v < count; ++v) {
      const auto d = g.degree(v);
      max_degree = std::max(max_degree, d);
      if (d > top) return fail_with(r, "vertex " + std::to_string(v) + " degree " + std::to_string(d));
      if (d == top) {
        ++at_top;
        if (pg.label(v).level() != 0) {
          return fail_with(r, "vertex " + std::to_string(v) + " has degree 3n-7 but is not a boundary path");
        }
      }
    }
    r.value = std::to_string(max_degree);
    if (at_top != static_cast<std::size_t>(n)) {
      fail_with(r, std::to_string(at_top) + " vertices of degree " + std::to_string(top));
    }
  });

  run("diameter", count > config.diameter_cap, [&](CheckResult& r) {
    const int d = diameter(g, config.policy);
    r.value = std::to_string(d);
    if (d != 2 * n - 6) fail_with(r, "expected " + std::to_string(2 * n - 6));
  });

  run("clique_law", n > config.clique_max_n, [&](CheckResult& r) {
    std::size_t union_n = 0;
    for (const auto& [u, v] : g.edge_list()) {
      const auto c = classify_edge_cliques(pg, u, v);
      const std::string where = "edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
      if (c.intersection_size != 2 && c.intersection_size != 4) {
        return fail_with(r, where + " intersection clique size " + std::to_string(c.intersection_size));
      }
      if (c.union_size != 2 && c.union_size != n) {
        return fail_with(r, where + " union clique size " + std::to_string(c.union_size));
      }
      const bool both_boundary = pg.label(u).level() == 0 && pg.label(v).level() == 0;
      if ((c.union_size == n) != both_boundary) {
        return fail_with(r, where + " union clique of size n outside the boundary paths");
      }
      if (c.union_size == n) ++union_n;
    }
    // the n boundary paths are pairwise adjacent, so a single size-n union
    // clique accounts for all C(n,2) of its edges
    if (union_n != static_cast<std::size_t>(n * (n - 1) / 2)) {
      return fail_with(r, std::to_string(union_n) + " edges in size-n union cliques");
    }
    r.value = std::to_string(g.edge_count());
  });

  run("edge_ratio", false, [&](CheckResult& r) {
    const double ratio = static_cast<double>(g.edge_count()) / static_cast<double>(count);
    r.value = fmt_double(ratio);
    if (ratio > kEdgeRatioBound) fail_with(r, "exceeds bound " + fmt_double(kEdgeRatioBound));
  });

  run("type_bound", n > config.exhaustive_max_n, [&](CheckResult& r) {
    std::size_t checked = 0;
    for (VertexId v = 0; v < count; ++v) {
      const auto t = path_type(pg.label(v));
      if (!t) continue;
      ++checked;
      if (g.degree(v) > static_cast<std::size_t>(3 * *t)) {
        return fail_with(r, "vertex " + std::to_string(v) + " degree " + std::to_string(g.degree(v)) +
                                " > 3*" + std::to_string(*t));
      }
    }
    r.value = std::to_string(checked);
  });

  run("levels", false, [&](CheckResult& r) {
    const auto boundary = find_boundary_vertices(g, n);
    const auto level = compute_levels(g, boundary, n);
    int top_level = 0;
    for (VertexId v = 0; v < count; ++v) {
      top_level = std::max(top_level, level[v]);
      if (level[v] != pg.label(v).level()) {
        return fail_with(r, "vertex " + std::to_string(v) + " distance " + std::to_string(level[v]) +
                                " vs diagonals " + std::to_string(pg.label(v).level()));
      }
    }
    r.value = std::to_string(top_level);
  });

  run("boundary_sets", n > config.exhaustive_max_n, [&](CheckResult& r) {
    const auto boundary = find_boundary_vertices(g, n);
    const Gauge gauge = fix_gauge(build_boundary_cycle(g, boundary));
    const auto level = compute_levels(g, boundary, n);
    const auto fast = recover_boundary_sets_fast(g, level, gauge, config.policy);
    const auto reference = recover_boundary_sets_reference(g, level, gauge, config.policy);
    const Dihedral align = gauge_alignment(pg, {}, gauge);
    for (VertexId v = 0; v < count; ++v) {
      if (fast[v] != reference[v] || apply(align, fast[v]) != pg.label(v).boundary_mask()) {
        return fail_with(r, "vertex " + std::to_string(v));
      }
    }
    r.value = std::to_string(count);
  });

  run("reconstruction", false, [&](CheckResult& r) {
    const auto anon = anonymize(g, config.seed);
    ReconOptions options;
    options.policy = config.policy;
    options.cross_check_boundary_sets = config.cross_check_boundary_sets && n <= config.exhaustive_max_n;
    const auto result = reconstruct_all(anon.graph, options);
    try {
      const Dihedral match = check_reconstruction(pg, anon.secret, result.paths);
      r.value = "rot=" + std::to_string(match.rotation()) + ",refl=" + (match.reflected() ? "1" : "0");
    } catch (const VerificationError& e) {
      fail_with(r, "vertex " + std::to_string(e.witness()));
    }
  });

  run("automorphisms", count > config.automorphism_cap, [&](CheckResult& r) {
    const auto group = automorphism_group(g, config.automorphism_cap);
    r.value = std::to_string(group.size());
    const auto boundary = find_boundary_vertices(g, n);
    const auto cycle = build_boundary_cycle(g, boundary);
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (!acts_dihedrally(group[i], cycle)) {
        return fail_with(r, "automorphism " + std::to_string(i) + " is not dihedral on the boundary cycle");
      }
    }
    if (group.size() != static_cast<std::size_t>(2 * n)) fail_with(r, "expected " + std::to_string(2 * n));
  });

  return report;
}

void write_report_text(std::ostream& out, const VerificationReport& report) {
  out << "# invariants n=" << report.n << '\n';
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::Gated) {
      out << c.name << "=GATED\n";
      continue;
    }
    out << c.name << '=' << c.value << ' ' << to_string(c.status);
    if (c.status == CheckStatus::Fail) out << " (" << c.witness << ')';
    out << '\n';
  }
}

void write_report_keyvalue(std::ostream& out, const VerificationReport& report) {
  out << "n=" << report.n << '\n';
  for (const auto& c : report.checks) {
    out << c.name << ".status=" << to_string(c.status) << '\n';
    if (c.status == CheckStatus::Gated) continue;
    out << c.name << ".value=" << c.value << '\n';
    if (!c.witness.empty()) out << c.name << ".witness=" << c.witness << '\n';
    out << c.name << ".ms=" << fmt_double(c.millis) << '\n';
  }
  out << "passed=" << (report.passed() ? 1 : 0) << '\n';
}

}  // namespace pathgraph
