#include "pcol/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace pcol {

Graph::Graph(int n) : n_(n), adj_(n), adj_matrix_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw std::out_of_range("vertex id " + std::to_string(u) + " out of range [0," +
                            std::to_string(n_) + ")");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (has_edge(u, v)) {
    throw std::invalid_argument("parallel edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  adj_matrix_[idx(u, v)] = adj_matrix_[idx(v, u)] = 1;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v)),
                {u, v});
}

Graph Graph::without_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) {
    throw std::invalid_argument("no edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  Graph out(n_);
  for (auto [a, b] : edges_) {
    if (a == u && b == v) continue;
    out.add_edge(a, b);
  }
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (int u = 0; u < n_; u++) d = std::max(d, degree(u));
  return d;
}

bool Graph::is_cubic() const {
  if (n_ == 0) return false;
  for (int u = 0; u < n_; u++) {
    if (degree(u) != 3) return false;
  }
  return true;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n_, 0);
  for (int s = 0; s < n_; s++) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int w : adj_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  int shift = a.vertex_count();
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

DistanceOracle::DistanceOracle(const Graph& g)
    : n_(g.vertex_count()), dist_(static_cast<std::size_t>(n_) * n_, kUnreachable) {
  std::vector<int> queue;
  queue.reserve(n_);
  for (int s = 0; s < n_; s++) {
    int* row = dist_.data() + static_cast<std::size_t>(s) * n_;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); head++) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
}

int DistanceOracle::max_finite_distance() const {
  int best = 0;
  for (int d : dist_) best = std::max(best, d);
  return best;
}

Graph power_graph(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("power_graph requires d >= 1");
  if (d == 1) return g;
  DistanceOracle oracle(g);
  Graph out(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); u++) {
    for (int v = u + 1; v < g.vertex_count(); v++) {
      int duv = oracle.dist(u, v);
      if (duv >= 1 && duv <= d) out.add_edge(u, v);
    }
  }
  return out;
}

namespace {

// Max independent set size by branching on a highest-degree vertex.
int mis_size(std::uint64_t candidates, const std::vector<std::uint64_t>& nbr_mask) {
  if (candidates == 0) return 0;
  // Pick the candidate with most candidate-neighbors; if all are isolated
  // within the candidate set, they can all be taken.
  int pick = -1, pick_deg = -1;
  for (std::uint64_t rest = candidates; rest;) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    int deg = std::popcount(nbr_mask[u] & candidates);
    if (deg > pick_deg) {
      pick_deg = deg;
      pick = u;
    }
  }
  if (pick_deg == 0) return std::popcount(candidates);
  std::uint64_t bit = std::uint64_t{1} << pick;
  int with = 1 + mis_size(candidates & ~(nbr_mask[pick] | bit), nbr_mask);
  int without = mis_size(candidates & ~bit, nbr_mask);
  return std::max(with, without);
}

int girth(const Graph& g) {
  // Shortest cycle through each start vertex via BFS with parent edges.
  int best = 0;
  int n = g.vertex_count();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; s++) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace

StructureReport structure_report(const Graph& g) {
  int n = g.vertex_count();
  if (n > 32) {
    throw std::invalid_argument(
        "independence number is computed exhaustively; vertex count " +
        std::to_string(n) + " exceeds the limit of 32");
  }
  StructureReport report;
  report.max_degree = g.max_degree();
  report.is_cubic = g.is_cubic();
  report.diameter = DistanceOracle(g).max_finite_distance();
  std::vector<std::uint64_t> nbr_mask(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr_mask[u] |= std::uint64_t{1} << v;
    nbr_mask[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  report.independence_number = mis_size(all, nbr_mask);
  report.girth = girth(g);
  return report;
}

std::vector<std::vector<std::pair<int, int>>> find_edge_cuts(const Graph& g,
                                                             int max_size) {
  if (max_size != 1 && max_size != 2) {
    throw std::invalid_argument("find_edge_cuts supports max_size 1 or 2");
  }
  if (!g.connected()) {
    auto comps = g.components();
    std::string msg = "find_edge_cuts requires a connected graph; components:";
    for (const auto& comp : comps) {
      msg += " {";
      for (std::size_t i = 0; i < comp.size(); i++) {
        if (i) msg += ",";
        msg += std::to_string(comp[i]);
      }
      msg += "}";
    }
    throw std::invalid_argument(msg);
  }

  std::vector<std::vector<std::pair<int, int>>> cuts;
  // Bridges: single-edge cuts.
  std::vector<std::pair<int, int>> bridges;
  for (auto e : g.edges()) {
    if (!g.without_edge(e.first, e.second).connected()) bridges.push_back(e);
  }
  for (auto e : bridges) cuts.push_back({e});
  if (max_size == 1) {
    std::sort(cuts.begin(), cuts.end());
    return cuts;
  }

  // Minimal 2-cuts: pairs of non-bridge edges whose joint removal disconnects.
  auto is_bridge = [&](std::pair<int, int> e) {
    return std::find(bridges.begin(), bridges.end(), e) != bridges.end();
  };
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); i++) {
    if (is_bridge(edges[i])) continue;
    Graph g1 = g.without_edge(edges[i].first, edges[i].second);
    for (std::size_t j = i + 1; j < edges.size(); j++) {
      if (is_bridge(edges[j])) continue;
      if (!g1.without_edge(edges[j].first, edges[j].second).connected()) {
        cuts.push_back({edges[i], edges[j]});
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace pcol
