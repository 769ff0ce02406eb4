#include "cayleylab/autosearch.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cayleylab {

ColoredGraph::ColoredGraph(SimpleGraph g, std::vector<int> c)
    : graph(std::move(g)), colors(std::move(c)) {
  if (colors.size() != static_cast<std::size_t>(graph.vertex_count()))
    throw std::invalid_argument("color table size mismatch");
}

OrderedPartition OrderedPartition::unit(int vertex_count) {
  return from_colors(std::vector<int>(static_cast<std::size_t>(vertex_count), 0));
}

OrderedPartition OrderedPartition::from_colors(const std::vector<int>& colors) {
  std::map<int, std::vector<int>> by_color;
  for (std::size_t v = 0; v < colors.size(); ++v)
    by_color[colors[v]].push_back(static_cast<int>(v));
  OrderedPartition p;
  p.vertex_count_ = static_cast<int>(colors.size());
  for (auto& [color, cell] : by_color) p.cells_.push_back(std::move(cell));
  return p;
}

OrderedPartition OrderedPartition::from_cells(std::vector<std::vector<int>> cells,
                                              int vertex_count) {
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  for (auto& cell : cells) {
    if (cell.empty()) throw std::invalid_argument("empty partition cell");
    std::sort(cell.begin(), cell.end());
    for (int v : cell) {
      if (v < 0 || v >= vertex_count || seen[v])
        throw std::invalid_argument("cells do not form a partition");
      seen[v] = 1;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }))
    throw std::invalid_argument("cells do not cover the vertex set");
  OrderedPartition p;
  p.vertex_count_ = vertex_count;
  p.cells_ = std::move(cells);
  return p;
}

bool OrderedPartition::is_discrete() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const std::vector<int>& c) { return c.size() == 1; });
}

std::vector<int> OrderedPartition::cell_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(cells_.size());
  for (const auto& c : cells_) sizes.push_back(static_cast<int>(c.size()));
  return sizes;
}

int OrderedPartition::target_cell() const {
  int best = -1;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].size() < 2) continue;
    if (best < 0 || cells_[i].size() < cells_[static_cast<std::size_t>(best)].size())
      best = static_cast<int>(i);
  }
  return best;
}

OrderedPartition OrderedPartition::individualized(int v) const {
  OrderedPartition out;
  out.vertex_count_ = vertex_count_;
  for (const auto& cell : cells_) {
    if (cell.size() > 1 && std::binary_search(cell.begin(), cell.end(), v)) {
      std::vector<int> rest;
      rest.reserve(cell.size() - 1);
      for (int w : cell)
        if (w != v) rest.push_back(w);
      out.cells_.push_back({v});
      out.cells_.push_back(std::move(rest));
    } else {
      out.cells_.push_back(cell);
    }
  }
  return out;
}

OrderedPartition refine(const ColoredGraph& g, const OrderedPartition& p) {
  const int n = g.graph.vertex_count();
  if (p.vertex_count() != n) throw std::invalid_argument("refine: partition size mismatch");
  for (const auto& cell : p.cells())
    for (int v : cell)
      if (g.colors[v] != g.colors[cell.front()])
        throw std::invalid_argument("refine: cell mixes colors");

  std::vector<std::vector<int>> cells = p.cells();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  for (;;) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (int v : cells[i]) cell_of[v] = static_cast<int>(i);

    bool changed = false;
    std::vector<std::vector<int>> next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      // Signature: sorted multiset of the cell indices of a vertex's
      // neighbors.  Map order gives the deterministic fragment order.
      std::map<std::vector<int>, std::vector<int>> fragments;
      for (int v : cell) {
        std::vector<int> sig;
        sig.reserve(g.graph.neighbors(v).size());
        for (int w : g.graph.neighbors(v)) sig.push_back(cell_of[w]);
        std::sort(sig.begin(), sig.end());
        fragments[std::move(sig)].push_back(v);
      }
      if (fragments.size() == 1) {
        next.push_back(cell);
      } else {
        changed = true;
        for (auto& [sig, members] : fragments) next.push_back(std::move(members));
      }
    }
    cells = std::move(next);
    if (!changed) break;
  }
  return OrderedPartition::from_cells(std::move(cells), n);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  void absorb(const Permutation& g) {
    for (int x = 0; x < g.degree(); ++x) unite(x, g(x));
  }
};

// Individualize-refine automorphism search.
//
// The leftmost path of the tree records the first discrete labeling reached
// and the cell-size shape of every node along the way.  Every other leaf is
// compared against that first leaf; a verified match is an automorphism.  At
// each node of the leftmost path the search recurses fully into the first
// branch (yielding the stabilizer of that choice) and then looks for a single
// coset representative per remaining orbit of the target cell — the
// orbit-stabilizer structure of the group guarantees these generate it.
// Branches whose refined shape disagrees with the leftmost path cannot
// contain a matching leaf and are cut.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const ColoredGraph& g)
      : g_(g), edges_(g.graph.edges()) {}

  std::vector<Permutation> run(const OrderedPartition& initial) {
    return search(refine(g_, initial), 0);
  }

 private:
  std::vector<int> labeling(const OrderedPartition& p) const {
    std::vector<int> lab;
    lab.reserve(p.cells().size());
    for (const auto& cell : p.cells()) lab.push_back(cell.front());
    return lab;
  }

  bool preserves_structure(const Permutation& sigma) const {
    for (int v = 0; v < sigma.degree(); ++v)
      if (g_.colors[sigma(v)] != g_.colors[v]) return false;
    for (const auto& [u, w] : edges_)
      if (!g_.graph.adjacent(sigma(u), sigma(w))) return false;
    return true;
  }

  std::optional<Permutation> leaf_match(const OrderedPartition& p) const {
    const std::vector<int> lab = labeling(p);
    std::vector<int> img(first_leaf_.size());
    for (std::size_t i = 0; i < lab.size(); ++i) img[first_leaf_[i]] = lab[i];
    Permutation sigma = Permutation::from_images(std::move(img));
    if (!preserves_structure(sigma)) return std::nullopt;
    return sigma;
  }

  // p must already be refined.
  std::vector<Permutation> search(const OrderedPartition& p, std::size_t depth) {
    if (depth == first_shapes_.size()) first_shapes_.push_back(p.cell_sizes());
    if (p.is_discrete()) {
      first_leaf_ = labeling(p);
      return {};
    }
    const std::vector<int> cell = p.cells()[static_cast<std::size_t>(p.target_cell())];
    std::vector<Permutation> gens = search(refine(g_, p.individualized(cell[0])), depth + 1);
    UnionFind uf(g_.graph.vertex_count());
    for (const Permutation& g : gens) uf.absorb(g);
    for (std::size_t i = 1; i < cell.size(); ++i) {
      const int v = cell[i];
      if (uf.find(v) == uf.find(cell[0])) continue;  // coset already covered
      auto match = seek_match(refine(g_, p.individualized(v)), depth + 1);
      if (match) {
        uf.absorb(*match);
        gens.push_back(std::move(*match));
      }
    }
    return gens;
  }

  std::optional<Permutation> seek_match(const OrderedPartition& p, std::size_t depth) {
    if (depth >= first_shapes_.size() || p.cell_sizes() != first_shapes_[depth])
      return std::nullopt;
    if (p.is_discrete()) return leaf_match(p);
    for (int v : p.cells()[static_cast<std::size_t>(p.target_cell())]) {
      auto match = seek_match(refine(g_, p.individualized(v)), depth + 1);
      if (match) return match;
    }
    return std::nullopt;
  }

  const ColoredGraph& g_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> first_leaf_;
  std::vector<std::vector<int>> first_shapes_;
};

GeneratedGroup search_with_partition(const ColoredGraph& g, const OrderedPartition& initial,
                                     const Limits& limits) {
  const int n = g.graph.vertex_count();
  if (static_cast<std::size_t>(n) > limits.autosearch_vertex_cap)
    throw std::runtime_error("automorphism search vertex cap exceeded (" + std::to_string(n) +
                             " > " + std::to_string(limits.autosearch_vertex_cap) + ")");
  AutomorphismSearch searcher(g);
  std::vector<Permutation> gens = searcher.run(initial);
  for (const Permutation& sigma : gens) {
    for (int v = 0; v < n; ++v)
      if (g.colors[sigma(v)] != g.colors[v])
        throw std::logic_error("automorphism search produced a color-breaking map");
    for (const auto& [u, w] : g.graph.edges())
      if (!g.graph.adjacent(sigma(u), sigma(w)))
        throw std::logic_error("automorphism search produced an edge-breaking map");
  }
  return GeneratedGroup(n, std::move(gens));
}

std::vector<int> ordinals_of_keys(std::vector<std::vector<int>> keys) {
  std::vector<std::vector<int>> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> colors;
  colors.reserve(keys.size());
  for (const auto& key : keys)
    colors.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), key) - sorted.begin()));
  return colors;
}

}  // namespace

GeneratedGroup automorphism_group(const ColoredGraph& g, const Limits& limits) {
  if (g.colors.size() != static_cast<std::size_t>(g.graph.vertex_count()))
    throw std::invalid_argument("color table size mismatch");
  return search_with_partition(g, OrderedPartition::from_colors(g.colors), limits);
}

GeneratedGroup vertex_stabilizer(const ColoredGraph& g, int v, const Limits& limits) {
  const int n = g.graph.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex_stabilizer: vertex out of range");
  // Seed with distance-from-v classes: automorphisms fixing v preserve them,
  // so this only sharpens the initial partition.
  const std::vector<int> dist = bfs_distances(g.graph, v);
  std::vector<std::vector<int>> keys;
  keys.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    keys.push_back({x == v ? 0 : 1, g.colors[x], dist[x]});
  ColoredGraph seeded{g.graph, ordinals_of_keys(std::move(keys))};
  GeneratedGroup result =
      search_with_partition(seeded, OrderedPartition::from_colors(seeded.colors), limits);
  for (const Permutation& gen : result.generators())
    if (gen(v) != v) throw std::logic_error("vertex stabilizer moved its pinned vertex");
  return result;
}

GeneratedGroup pointwise_neighborhood_stabilizer(const ColoredGraph& g, int v,
                                                 const Limits& limits) {
  const int n = g.graph.vertex_count();
  if (v < 0 || v >= n)
    throw std::invalid_argument("pointwise_neighborhood_stabilizer: vertex out of range");
  const std::vector<int> dist = bfs_distances(g.graph, v);
  std::vector<std::vector<int>> keys;
  keys.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    if (x == v)
      keys.push_back({0, 0, 0});
    else if (g.graph.adjacent(v, x))
      keys.push_back({1, x, 0});  // one singleton color per neighbor
    else
      keys.push_back({2, g.colors[x], dist[x]});
  }
  ColoredGraph seeded{g.graph, ordinals_of_keys(std::move(keys))};
  GeneratedGroup result =
      search_with_partition(seeded, OrderedPartition::from_colors(seeded.colors), limits);
  for (const Permutation& gen : result.generators()) {
    if (gen(v) != v) throw std::logic_error("neighborhood stabilizer moved its pinned vertex");
    for (int w : g.graph.neighbors(v))
      if (gen(w) != w)
        throw std::logic_error("neighborhood stabilizer moved a pinned neighbor");
  }
  return result;
}

}  // namespace cayleylab
