#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cayleylab {

enum class Parity { even, odd };

// Permutation of {0, ..., degree-1}, stored as an image table.
//
// Composition convention used throughout the library: compose(p, q) applies
// p first and q second, i.e. compose(p, q)(x) == q(p(x)).  Products written
// left to right therefore act left to right, which matches the convention
// used for Cayley-graph edges and the right regular action below.
class Permutation {
 public:
  Permutation() = default;
  // Identity on {0..degree-1}.
  explicit Permutation(int degree);
  // Validates that images is a bijection; throws std::invalid_argument.
  static Permutation from_images(std::vector<int> images);
  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  // Smallest point moved, or -1 for the identity.
  int first_moved_point() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// A transposition (a b) with endpoints normalised so that a < b.
struct Transposition {
  int a = 0;
  int b = 1;

  Transposition() = default;
  Transposition(int x, int y);

  Permutation as_permutation(int degree) const;
  bool moves(int point) const { return point == a || point == b; }

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

// Whether two transpositions commute as permutations (disjoint or equal).
bool commute(const Transposition& s, const Transposition& t);

// Disjoint cycle decomposition; fixed points omitted.  Each cycle starts at
// its smallest point and cycles are sorted by that point.
struct CycleStructure {
  std::vector<std::vector<int>> cycles;

  bool empty() const { return cycles.empty(); }
  bool is_single_cycle_of_length(std::size_t len) const {
    return cycles.size() == 1 && cycles.front().size() == len;
  }
  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

// compose(p, q)(x) == q(p(x)); degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// g^{-1} p g: relabels p's cycles through g, i.e. the result maps
// g(x) -> g(p(x)).
Permutation conjugate_by(const Permutation& p, const Permutation& g);

Parity parity(const Permutation& p);
CycleStructure cycle_structure(const Permutation& p);
// Points moved by p, ascending.
std::vector<int> support(const Permutation& p);
// Multiplicative order of p (lcm of cycle lengths).
std::uint64_t element_order(const Permutation& p);

// Lexicographic rank of p among all permutations of its degree; the identity
// has rank 0.  unrank is the inverse.
std::uint64_t rank_of(const Permutation& p);
Permutation unrank(std::uint64_t rank, int degree);

std::uint64_t factorial(int n);

// Renders in disjoint cycle notation with 1-based points: "(1,2)(3,4)".
// The identity renders as "e".
std::string to_cycle_string(const Permutation& p);
// "(1,2)" with 1-based points.
std::string to_string(const Transposition& t);

}  // namespace cayleylab
