#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayleylab/limits.hpp"
#include "cayleylab/perm.hpp"

namespace cayleylab {

// Finite permutation group given by generators, with a base and strong
// generating set built eagerly by a deterministic Schreier–Sims run.
//
// Base points are chosen greedily as the first point moved by the generator
// being inserted.  Transversals are stored as Schreier vectors; small orbits
// additionally cache explicit coset representatives.  The object is immutable
// once constructed, so concurrent readers are safe.
class GeneratedGroup {
 public:
  GeneratedGroup(int degree, std::vector<Permutation> generators);
  static GeneratedGroup trivial(int degree) { return GeneratedGroup(degree, {}); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  // Exact order: product of fundamental orbit lengths.
  std::uint64_t order() const;
  // Membership by sifting; degree mismatch throws std::invalid_argument.
  bool contains(const Permutation& p) const;
  std::vector<int> base() const;
  // Explicit element list (transversal products).  Throws std::runtime_error
  // when order() exceeds cap.
  std::vector<Permutation> elements(std::uint64_t cap) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;        // strong generators active here
    std::vector<Permutation> edge_perms;  // gens plus inverses for orbit BFS
    std::vector<int> orbit;               // BFS order, orbit[0] == base
    std::vector<int> orbit_pos;           // point -> orbit index or -1
    std::vector<int> parent_point;        // Schreier vector
    std::vector<int> parent_edge;
    std::vector<Permutation> cache;       // explicit transversal if small
    bool materialized = false;
  };

  void insert_strong_generator(const Permutation& h);
  void rebuild_orbit(Level& level) const;
  Permutation transversal(const Level& level, int point) const;
  std::pair<Permutation, std::size_t> sift_from(Permutation p, std::size_t from) const;
  bool scan_schreier_generators();

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

struct GroupFacts {
  std::uint64_t order = 1;
  // The flags below require enumerating the group; they are left unset
  // ("unavailable") when the order exceeds the enumeration cap.
  std::optional<bool> is_abelian;
  std::optional<std::uint64_t> exponent;
  std::optional<bool> is_klein_four;  // order 4 and exponent 2
};

GroupFacts group_facts(const GeneratedGroup& g, std::uint64_t enumeration_cap = 10000);

// Whether sub is normal in g, by conjugating sub's generators with g's
// generators and sifting.  Throws std::invalid_argument when sub is not
// contained in g.
bool is_normal_in(const GeneratedGroup& sub, const GeneratedGroup& g);

// Whether the intersection of a and b is the trivial group, decided by
// enumerating the smaller group and sifting into the other.  Throws
// std::runtime_error("undecided...") when both orders exceed cap.
bool intersection_is_trivial(const GeneratedGroup& a, const GeneratedGroup& b,
                             std::uint64_t enumeration_cap = 10000);

// Degree-n! permutation of lexicographic ranks induced by right
// multiplication: rank(h) -> rank(compose(h, g)).
Permutation right_translation(const Permutation& g);

// The right regular representation R(S_n) acting on the n! lexicographic
// ranks, generated by the right translations of the adjacent transpositions.
GeneratedGroup right_regular_representation(int n, const Limits& limits = {});

}  // namespace cayleylab
