#pragma once

#include <vector>

#include "cayleylab/graph.hpp"
#include "cayleylab/limits.hpp"
#include "cayleylab/permgroup.hpp"

namespace cayleylab {

// Vertex-colored graph; automorphisms must preserve both adjacency and color.
struct ColoredGraph {
  SimpleGraph graph;
  std::vector<int> colors;

  ColoredGraph() = default;
  explicit ColoredGraph(SimpleGraph g)
      : graph(std::move(g)), colors(static_cast<std::size_t>(graph.vertex_count()), 0) {}
  ColoredGraph(SimpleGraph g, std::vector<int> c);
};

// Ordered partition of the vertex set.  Cell order is significant: refinement
// replaces a cell by its fragments in place, so positions are stable, which
// keeps the search deterministic.  Cell contents are kept sorted.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  static OrderedPartition unit(int vertex_count);
  // Cells grouped by color value, ascending.
  static OrderedPartition from_colors(const std::vector<int>& colors);
  // Validates that cells form a partition of {0..vertex_count-1}.
  static OrderedPartition from_cells(std::vector<std::vector<int>> cells, int vertex_count);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  bool is_discrete() const;
  std::vector<int> cell_sizes() const;
  // Index of the first smallest non-singleton cell, or -1 when discrete.
  int target_cell() const;
  // Splits v's cell into [{v}, rest], keeping the pair at the cell's position.
  OrderedPartition individualized(int v) const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  std::vector<std::vector<int>> cells_;
  int vertex_count_ = 0;
};

// Coarsest equitable refinement of p: repeatedly splits cells by the multiset
// of neighbor cell indices until stable.  Fragments inherit the split cell's
// position and are ordered by their splitting signature, so the result does
// not depend on vertex numbering beyond the structure of p itself (the
// equivariance the search relies on).  Requires p's cells to be
// color-homogeneous.
OrderedPartition refine(const ColoredGraph& g, const OrderedPartition& p);

// Full automorphism group via individualize-refine backtracking on the first
// smallest non-singleton cell.  Discovered automorphisms prune sibling
// branches through orbit merging; every returned generator is re-verified to
// preserve edges and colors.  Deterministic and single-threaded.
GeneratedGroup automorphism_group(const ColoredGraph& g, const Limits& limits = {});

// Stabilizer of vertex v: v receives a unique color and the partition is
// seeded with distance-from-v classes before searching.
GeneratedGroup vertex_stabilizer(const ColoredGraph& g, int v, const Limits& limits = {});

// Pointwise stabilizer of v and each of its neighbors (each individualized
// with its own color).
GeneratedGroup pointwise_neighborhood_stabilizer(const ColoredGraph& g, int v,
                                                 const Limits& limits = {});

}  // namespace cayleylab
