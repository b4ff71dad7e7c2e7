#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pcol {

/// Simple undirected graph over dense 0-based vertex ids.
/// Adjacency is kept both as neighbor lists and as a boolean matrix;
/// loops and parallel edges are rejected at construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const { return adj_matrix_[idx(u, v)]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }

  /// Edges as sorted (u,v) pairs with u < v, lexicographic order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  void add_edge(int u, int v);

  Graph without_edge(int u, int v) const;

  int max_degree() const;
  bool is_cubic() const;
  bool is_subcubic() const { return max_degree() <= 3; }

  /// Connected components as sorted vertex lists, smallest vertex first.
  std::vector<std::vector<int>> components() const;
  bool connected() const;

  /// Disjoint union; the right operand's ids are shifted by vertex_count().
  static Graph disjoint_union(const Graph& a, const Graph& b);

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  void check_vertex(int u) const;

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<char> adj_matrix_;
  std::vector<std::pair<int, int>> edges_;
};

/// All-pairs hop distances, computed by BFS from every vertex.
class DistanceOracle {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceOracle(const Graph& g);

  int vertex_count() const { return n_; }

  /// Hop distance, or kUnreachable for disconnected pairs.
  int dist(int u, int v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool reachable(int u, int v) const { return dist(u, v) != kUnreachable; }

  /// Largest finite entry (0 for the empty graph).
  int max_finite_distance() const;

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

/// Graph with edge {u,v} iff 1 <= dist(u,v) <= d. Requires d >= 1.
Graph power_graph(const Graph& g, int d);

struct StructureReport {
  int max_degree = 0;
  bool is_cubic = false;
  int diameter = 0;  // max finite hop distance
  int independence_number = 0;
  int girth = 0;  // 0 if acyclic
};

/// Exact structural parameters. The independence number is computed
/// exhaustively and only allowed for n <= 32.
StructureReport structure_report(const Graph& g);

/// All minimal edge cuts of size <= max_size (1 or 2), each a sorted list
/// of edges, in lexicographic order. Requires a connected input.
std::vector<std::vector<std::pair<int, int>>> find_edge_cuts(const Graph& g,
                                                             int max_size);

}  // namespace pcol
