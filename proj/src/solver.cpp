#include "pcol/solver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pcol {

PackingSpec::PackingSpec(std::vector<int> radii) : radii_(std::move(radii)) {
  if (radii_.empty()) throw std::invalid_argument("packing spec must be non-empty");
  for (std::size_t i = 0; i < radii_.size(); i++) {
    if (radii_[i] < 1) throw std::invalid_argument("packing radii must be positive");
    if (i > 0 && radii_[i] < radii_[i - 1]) {
      throw std::invalid_argument("packing radii must be non-decreasing");
    }
  }
}

PackingSpec PackingSpec::parse(const std::string& text) {
  std::vector<int> radii;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    int value = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad spec entry '" + item + "'");
    radii.push_back(value);
  }
  return PackingSpec(std::move(radii));
}

ConflictGraphs::ConflictGraphs(const Graph& g, const PackingSpec& spec) : spec_(spec) {
  std::map<int, int> by_radius;
  for (int c = 1; c <= spec.color_count(); c++) {
    int r = spec.radius(c);
    auto it = by_radius.find(r);
    if (it == by_radius.end()) {
      it = by_radius.emplace(r, static_cast<int>(powers_.size())).first;
      powers_.push_back(power_graph(g, r));
    }
    power_index_.push_back(it->second);
  }
}

ValidationReport verify(const Graph& g, const PackingSpec& spec, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.vertex_count()) {
    throw std::invalid_argument("coloring length " + std::to_string(c.size()) +
                                " does not match vertex count " +
                                std::to_string(g.vertex_count()));
  }
  for (int value : c) {
    if (value < 0 || value > spec.color_count()) {
      throw std::invalid_argument("coloring value " + std::to_string(value) +
                                  " outside {0.." + std::to_string(spec.color_count()) +
                                  "}");
    }
  }
  DistanceOracle oracle(g);
  ValidationReport report;
  for (int u = 0; u < g.vertex_count(); u++) {
    if (c[u] == 0) continue;
    for (int v = u + 1; v < g.vertex_count(); v++) {
      if (c[v] != c[u]) continue;
      int d = oracle.dist(u, v);
      if (d != DistanceOracle::kUnreachable && d <= spec.radius(c[u])) {
        report.violations.push_back({c[u], u, v, d});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

namespace {

// The appendix loop: fill uncolored vertices in increasing id, colors
// 1..k ascending, conflicts checked against the color's power graph.
bool extend_from(const ConflictGraphs& conflicts, Coloring& coloring, int x,
                 std::uint64_t& nodes) {
  int n = static_cast<int>(coloring.size());
  nodes++;
  while (x < n && coloring[x] != 0) x++;
  if (x >= n) return true;
  int k = conflicts.spec().color_count();
  for (int c = 1; c <= k; c++) {
    bool conflict = false;
    for (int w : conflicts.for_color(c).neighbors(x)) {
      if (coloring[w] == c) {
        conflict = true;
        break;
      }
    }
    if (conflict) continue;
    coloring[x] = c;
    if (extend_from(conflicts, coloring, x + 1, nodes)) return true;
    coloring[x] = 0;
  }
  coloring[x] = 0;
  return false;
}

}  // namespace

std::optional<Coloring> extend(const ConflictGraphs& conflicts, const Coloring& partial,
                               ExtendStats* stats) {
  Coloring work = partial;
  std::uint64_t nodes = 0;
  bool ok = extend_from(conflicts, work, 0, nodes);
  if (stats) stats->nodes = nodes;
  if (!ok) return std::nullopt;
  return work;
}

std::optional<Coloring> extend(const Graph& g, const PackingSpec& spec,
                               const Coloring& partial, ExtendStats* stats) {
  ValidationReport report = verify(g, spec, partial);
  if (!report.valid) {
    std::string msg = "partial coloring is not violation-free:";
    for (const auto& viol : report.violations) {
      msg += " (color " + std::to_string(viol.color) + ", " + std::to_string(viol.u) +
             ", " + std::to_string(viol.v) + ", dist " + std::to_string(viol.dist) + ")";
    }
    throw std::invalid_argument(msg);
  }
  return extend(ConflictGraphs(g, spec), partial, stats);
}

RefutationCertificate prove_uncolorable(const Graph& g, const PackingSpec& spec) {
  ExtendStats stats;
  Coloring empty(g.vertex_count(), 0);
  auto found = extend(ConflictGraphs(g, spec), empty, &stats);
  RefutationCertificate cert;
  cert.node_count = stats.nodes;
  if (found) {
    cert.witness = std::move(found);
    cert.exhaustive = false;
  } else {
    cert.exhaustive = true;
  }
  return cert;
}

namespace {

bool sdr_augment(int demand, const std::vector<std::vector<int>>& options,
                 std::vector<char>& visited, std::vector<int>& owner) {
  for (int color : options[demand]) {
    if (visited[color]) continue;
    visited[color] = 1;
    if (owner[color] == -1 || sdr_augment(owner[color], options, visited, owner)) {
      owner[color] = demand;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> sdr_assign(const std::vector<std::vector<int>>& demands) {
  int max_color = -1;
  for (const auto& set : demands) {
    for (int color : set) {
      if (color < 0) throw std::invalid_argument("negative color id");
      max_color = std::max(max_color, color);
    }
  }
  std::vector<int> owner(max_color + 1, -1);
  for (int demand = 0; demand < static_cast<int>(demands.size()); demand++) {
    std::vector<char> visited(max_color + 1, 0);
    if (!sdr_augment(demand, demands, visited, owner)) return std::nullopt;
  }
  std::vector<int> assignment(demands.size(), -1);
  for (int color = 0; color <= max_color; color++) {
    if (owner[color] != -1) assignment[owner[color]] = color;
  }
  return assignment;
}

SharpnessReport validate_sharpness_gadget(const Graph& g1, int v1) {
  SharpnessReport report;
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };

  if (g1.vertex_count() != 7) {
    fail("vertex count is " + std::to_string(g1.vertex_count()) + ", expected 7");
    report.ok = false;
    return report;
  }
  if (v1 < 0 || v1 >= 7) {
    fail("v1 out of range");
    report.ok = false;
    return report;
  }
  if (g1.max_degree() > 3) fail("maximum degree exceeds 3");
  if (g1.degree(v1) != 2) fail("deg(v1) is " + std::to_string(g1.degree(v1)) + ", expected 2");
  if (DistanceOracle(g1).max_finite_distance() != 2 || !g1.connected()) {
    fail("diameter is not 2");
  }

  // The six non-v1 vertices must be covered by two vertex-disjoint triangles.
  std::vector<int> rest;
  for (int u = 0; u < 7; u++) {
    if (u != v1) rest.push_back(u);
  }
  auto is_triangle = [&](int a, int b, int c) {
    return g1.has_edge(a, b) && g1.has_edge(b, c) && g1.has_edge(a, c);
  };
  bool covered = false;
  // Partitions of the six vertices into two unordered triples.
  for (int i = 1; i < 5 && !covered; i++) {
    for (int j = i + 1; j < 6 && !covered; j++) {
      std::vector<int> t1 = {rest[0], rest[i], rest[j]};
      std::vector<int> t2;
      for (int u : rest) {
        if (u != t1[0] && u != t1[1] && u != t1[2]) t2.push_back(u);
      }
      if (is_triangle(t1[0], t1[1], t1[2]) && is_triangle(t2[0], t2[1], t2[2])) {
        covered = true;
      }
    }
  }
  if (!covered) fail("non-v1 vertices are not covered by two vertex-disjoint triangles");

  // Doubled graph: two copies joined by an edge at the two v1 copies.
  Graph doubled = Graph::disjoint_union(g1, g1);
  doubled.add_edge(v1, v1 + 7);

  auto five = extend(doubled, PackingSpec({1, 2, 2, 2, 2, 2}),
                     Coloring(doubled.vertex_count(), 0));
  if (!five) {
    fail("doubled graph is not (1,2^5)-colorable");
  } else {
    report.doubled_coloring = *five;
  }
  auto refute = prove_uncolorable(doubled, PackingSpec({1, 2, 2, 2, 2}));
  if (!refute.uncolorable()) fail("doubled graph is (1,2^4)-colorable");

  report.ok = report.failures.empty();
  return report;
}

}  // namespace pcol
