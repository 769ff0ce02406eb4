#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayleylab/autosearch.hpp"
#include "cayleylab/graph.hpp"
#include "cayleylab/limits.hpp"
#include "cayleylab/perm.hpp"
#include "cayleylab/permgroup.hpp"

namespace cayleylab {

// A set S of transpositions of {0..n-1}, i.e. an edge set on n labelled
// vertices.  Kept sorted and duplicate-free.
struct TranspositionSet {
  int n = 0;
  std::vector<Transposition> edges;

  TranspositionSet() = default;
  TranspositionSet(int n, std::vector<Transposition> edges);

  bool contains(const Transposition& t) const;
  std::vector<Permutation> generator_permutations() const;
};

// The transposition graph T(S): vertex i is point i, edges are the
// transpositions of S.
SimpleGraph build_tgraph(const TranspositionSet& s);

// Automorphism group of a small graph (delegates to the search engine).
GeneratedGroup graph_automorphisms(const SimpleGraph& g, const Limits& limits = {});

// The group Aut(S_n, S) of automorphisms of S_n fixing S setwise, realised on
// Cayley-graph vertices: for each generator sigma of Aut(T(S)) the induced
// degree-n! map sends rank(x) to rank(conjugate of x by sigma).  Each induced
// map is checked to fix S setwise; a violation would contradict the
// conjugation action and aborts loudly.
GeneratedGroup aut_sn_s(const TranspositionSet& s, const Limits& limits = {});

// Parses whitespace-separated 1-based edge tokens "a-b"; the vertex count is
// the maximum endpoint unless n is given.  Errors carry the token position.
TranspositionSet parse_edge_list(std::string_view text, std::optional<int> n = std::nullopt);

// "1-2 2-3 3-4" style rendering (1-based).
std::string to_edge_list(const TranspositionSet& s);
// "(1,2) (2,3) (3,4)" style rendering (1-based).
std::string to_string(const TranspositionSet& s);

}  // namespace cayleylab
