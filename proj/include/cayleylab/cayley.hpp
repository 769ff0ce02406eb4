#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cayleylab/graph.hpp"
#include "cayleylab/limits.hpp"
#include "cayleylab/perm.hpp"
#include "cayleylab/tgraph.hpp"

namespace cayleylab {

// Cayley graph of S_n with connection set S (a set of transpositions).
// Vertex v is the permutation of lexicographic rank v, so the identity is
// vertex 0.  Vertex h is adjacent to the products "s then h" for s in S; the
// right translations h -> h*g then act as automorphisms.
class CayleyGraph {
 public:
  CayleyGraph(TranspositionSet s, SimpleGraph graph)
      : s_(std::move(s)), graph_(std::move(graph)) {}

  const TranspositionSet& generators() const { return s_; }
  int degree_n() const { return s_.n; }
  const SimpleGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  static constexpr int e_vertex() { return 0; }

  Permutation permutation_of(int vertex) const;
  int vertex_of(const Permutation& p) const;

 private:
  TranspositionSet s_;
  SimpleGraph graph_;
};

// Requires T(S) connected (so that S generates S_n) and n within the
// construction cap.
CayleyGraph build_cayley(const TranspositionSet& s, const Limits& limits = {});

std::vector<int> bfs_distances(const CayleyGraph& g, int source);

// Even/odd permutation ranks.  Verifies that every edge joins the two
// classes; a violation is an internal error.
std::pair<std::vector<int>, std::vector<int>> bipartition_by_parity(const CayleyGraph& g);

// A cycle stored as its canonical vertex sequence: smallest vertex first,
// smaller-neighbor direction, so equal cycles compare equal.
struct CyclePath {
  std::vector<int> vertices;

  static CyclePath canonical(std::vector<int> cycle);
  std::size_t length() const { return vertices.size(); }
  bool contains(int v) const;
  friend bool operator==(const CyclePath&, const CyclePath&) = default;
  friend auto operator<=>(const CyclePath&, const CyclePath&) = default;
};

// All distinct 4-cycles containing the vertices e, rank(t) and rank(k).
// Requires t, k in S, t != k (commuting pairs allowed).
std::vector<CyclePath> four_cycles_through(const CayleyGraph& g, const Transposition& t,
                                           const Transposition& k);

// All distinct 6-cycles containing e, rank(t), rank(k) and at least one
// vertex at BFS distance exactly 3 from e.  Requires t, k in S and tk != kt.
std::vector<CyclePath> six_cycles_through_distance3(const CayleyGraph& g,
                                                    const Transposition& t,
                                                    const Transposition& k);

// Distinct distance-3 vertices (from e) lying on the given cycles.
std::vector<int> distance3_vertices_on(const CayleyGraph& g,
                                       const std::vector<CyclePath>& cycles);

Girth girth_cayley(const CayleyGraph& g);

// Cycle rendered through permutation cycle notation: "e -> (1,2) -> ...".
std::string render_cycle(const CayleyGraph& g, const CyclePath& cycle);

}  // namespace cayleylab
