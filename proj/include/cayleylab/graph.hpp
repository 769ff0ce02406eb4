#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cayleylab {

// Undirected simple graph on vertices {0..V-1}; adjacency lists kept sorted.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count);

  // Rejects loops, duplicate edges and out-of-range endpoints.
  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;
  // All edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

// Girth value with a distinguished infinite element (acyclic graphs) that
// compares above every finite value.
class Girth {
 public:
  static Girth infinite() { return Girth(); }
  static Girth finite(int value);

  bool is_infinite() const { return value_ < 0; }
  // Throws std::logic_error when infinite.
  int value() const;
  bool at_least(int bound) const { return is_infinite() || value_ >= bound; }
  std::string to_string() const;

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  int value_ = -1;
};

bool is_connected(const SimpleGraph& g);
// Connected and acyclic.
bool is_tree(const SimpleGraph& g);
Girth girth(const SimpleGraph& g);
bool has_triangle(const SimpleGraph& g);
// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const SimpleGraph& g, int source);
// Throws std::invalid_argument on disconnected input.
int diameter(const SimpleGraph& g);

}  // namespace cayleylab
