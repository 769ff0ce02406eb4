#include "cayleylab/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace cayleylab {

SimpleGraph::SimpleGraph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be >= 0");
  adj_.resize(static_cast<std::size_t>(vertex_count));
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v)) throw std::invalid_argument("duplicate edge");
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

bool SimpleGraph::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Girth Girth::finite(int value) {
  if (value < 3) throw std::invalid_argument("finite girth must be >= 3");
  Girth g;
  g.value_ = value;
  return g;
}

int Girth::value() const {
  if (is_infinite()) throw std::logic_error("girth is infinite");
  return value_;
}

std::string Girth::to_string() const {
  return is_infinite() ? "infinite" : std::to_string(value_);
}

std::vector<int> bfs_distances(const SimpleGraph& g, int source) {
  if (source < 0 || source >= g.vertex_count())
    throw std::invalid_argument("bfs source out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const SimpleGraph& g) {
  return is_connected(g) &&
         g.edge_count() + 1 == static_cast<std::size_t>(std::max(g.vertex_count(), 1));
}

Girth girth(const SimpleGraph& g) {
  // One BFS per start vertex; every non-tree edge (u, w) seen while expanding
  // u yields a closed walk of length dist[u] + dist[w] + 1 through the start,
  // which always contains a cycle no longer than itself, so the minimum over
  // all starts is exact.  BFS is cut off once it can no longer improve.
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (best < std::numeric_limits<int>::max() && 2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? Girth::infinite() : Girth::finite(best);
}

bool has_triangle(const SimpleGraph& g) {
  const Girth gg = girth(g);
  return !gg.is_infinite() && gg.value() == 3;
}

int diameter(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("diameter of empty graph");
  int diam = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) throw std::invalid_argument("diameter of disconnected graph");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

}  // namespace cayleylab
