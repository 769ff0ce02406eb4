#include "cayleylab/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace cayleylab {

namespace {
// Explicit transversal caching budget, in ints (~64 MB).
constexpr std::uint64_t kCacheIntBudget = 16u * 1024u * 1024u;
}  // namespace

GeneratedGroup::GeneratedGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 0) throw std::invalid_argument("group degree must be >= 0");
  for (const Permutation& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");

  for (const Permutation& g : generators_) {
    auto [residue, drop] = sift_from(g, 0);
    (void)drop;
    if (!residue.is_identity()) insert_strong_generator(residue);
  }
  while (!scan_schreier_generators()) {
  }
  for (const Permutation& g : generators_)
    if (!contains(g)) throw std::logic_error("generator fails to sift through its own chain");
}

void GeneratedGroup::insert_strong_generator(const Permutation& h) {
  std::size_t l = 0;
  while (l < levels_.size() && h(levels_[l].base) == levels_[l].base) ++l;
  if (l == levels_.size()) {
    Level level;
    level.base = h.first_moved_point();
    levels_.push_back(std::move(level));
  }
  // h fixes the bases of all levels before l, so it is a generator of each of
  // those stabilizers as well.
  for (std::size_t i = 0; i <= l; ++i) {
    levels_[i].gens.push_back(h);
    rebuild_orbit(levels_[i]);
  }
}

void GeneratedGroup::rebuild_orbit(Level& level) const {
  level.edge_perms = level.gens;
  for (const Permutation& g : level.gens) {
    Permutation inv = inverse(g);
    if (inv != g) level.edge_perms.push_back(std::move(inv));
  }
  level.orbit.clear();
  level.orbit_pos.assign(static_cast<std::size_t>(degree_), -1);
  level.parent_point.assign(static_cast<std::size_t>(degree_), -1);
  level.parent_edge.assign(static_cast<std::size_t>(degree_), -1);
  level.orbit.push_back(level.base);
  level.orbit_pos[level.base] = 0;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int p = level.orbit[head];
    for (std::size_t e = 0; e < level.edge_perms.size(); ++e) {
      const int q = level.edge_perms[e](p);
      if (level.orbit_pos[q] >= 0) continue;
      level.orbit_pos[q] = static_cast<int>(level.orbit.size());
      level.parent_point[q] = p;
      level.parent_edge[q] = static_cast<int>(e);
      level.orbit.push_back(q);
    }
  }
  level.materialized = static_cast<std::uint64_t>(level.orbit.size()) *
                           static_cast<std::uint64_t>(degree_) <=
                       kCacheIntBudget;
  level.cache.clear();
  if (level.materialized) {
    level.cache.reserve(level.orbit.size());
    level.cache.push_back(Permutation::identity(degree_));
    for (std::size_t i = 1; i < level.orbit.size(); ++i) {
      const int point = level.orbit[i];
      const Permutation& parent = level.cache[static_cast<std::size_t>(
          level.orbit_pos[level.parent_point[point]])];
      level.cache.push_back(compose(parent, level.edge_perms[static_cast<std::size_t>(
                                                level.parent_edge[point])]));
    }
  }
}

Permutation GeneratedGroup::transversal(const Level& level, int point) const {
  if (level.materialized)
    return level.cache[static_cast<std::size_t>(level.orbit_pos[point])];
  std::vector<int> path;  // edge indices from point back to base
  for (int p = point; p != level.base; p = level.parent_point[p])
    path.push_back(level.parent_edge[p]);
  Permutation u = Permutation::identity(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = compose(u, level.edge_perms[static_cast<std::size_t>(*it)]);
  return u;
}

std::pair<Permutation, std::size_t> GeneratedGroup::sift_from(Permutation p,
                                                              std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    const int image = p(level.base);
    if (level.orbit_pos[image] < 0) return {std::move(p), i};
    p = compose(p, inverse(transversal(level, image)));
  }
  return {std::move(p), levels_.size()};
}

// One full pass over all Schreier generators.  Returns true when every one of
// them sifts to the identity, which certifies the strong generating property;
// otherwise inserts the offending residue and returns false.
bool GeneratedGroup::scan_schreier_generators() {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
      const int p = level.orbit[idx];
      const Permutation u_p = transversal(level, p);
      for (const Permutation& g : level.gens) {
        const int q = g(p);
        const Permutation schreier =
            compose(compose(u_p, g), inverse(transversal(level, q)));
        if (schreier.is_identity()) continue;
        auto [residue, drop] = sift_from(schreier, i + 1);
        (void)drop;
        if (!residue.is_identity()) {
          insert_strong_generator(residue);
          return false;
        }
      }
    }
  }
  return true;
}

std::uint64_t GeneratedGroup::order() const {
  std::uint64_t ord = 1;
  for (const Level& level : levels_) ord *= static_cast<std::uint64_t>(level.orbit.size());
  return ord;
}

bool GeneratedGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
  return sift_from(p, 0).first.is_identity();
}

std::vector<int> GeneratedGroup::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const Level& level : levels_) b.push_back(level.base);
  return b;
}

std::vector<Permutation> GeneratedGroup::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw std::runtime_error("element enumeration cap exceeded (order " +
                             std::to_string(order()) + " > " + std::to_string(cap) + ")");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->orbit.size());
    for (int point : it->orbit) {
      const Permutation u = transversal(*it, point);
      for (const Permutation& h : out) next.push_back(compose(h, u));
    }
    out = std::move(next);
  }
  return out;
}

GroupFacts group_facts(const GeneratedGroup& g, std::uint64_t enumeration_cap) {
  GroupFacts facts;
  facts.order = g.order();
  if (facts.order > enumeration_cap) return facts;  // flags stay unavailable

  bool abelian = true;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && abelian; ++j)
      abelian = compose(gens[i], gens[j]) == compose(gens[j], gens[i]);
  facts.is_abelian = abelian;

  std::uint64_t exponent = 1;
  for (const Permutation& x : g.elements(enumeration_cap))
    exponent = std::lcm(exponent, element_order(x));
  facts.exponent = exponent;
  facts.is_klein_four = (facts.order == 4 && exponent == 2);
  return facts;
}

bool is_normal_in(const GeneratedGroup& sub, const GeneratedGroup& g) {
  if (sub.degree() != g.degree()) throw std::invalid_argument("is_normal_in: degree mismatch");
  for (const Permutation& x : sub.generators())
    if (!g.contains(x))
      throw std::invalid_argument("is_normal_in: first group is not a subgroup of the second");
  // N^a = N for every generator a of G iff every conjugate of a generator of
  // N lands back in N (finiteness turns containment into equality).
  for (const Permutation& a : g.generators())
    for (const Permutation& x : sub.generators())
      if (!sub.contains(conjugate_by(x, a))) return false;
  return true;
}

bool intersection_is_trivial(const GeneratedGroup& a, const GeneratedGroup& b,
                             std::uint64_t enumeration_cap) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("intersection_is_trivial: degree mismatch");
  const GeneratedGroup& small = a.order() <= b.order() ? a : b;
  const GeneratedGroup& large = a.order() <= b.order() ? b : a;
  if (small.order() > enumeration_cap)
    throw std::runtime_error("intersection test undecided: both groups exceed enumeration cap");
  for (const Permutation& x : small.elements(enumeration_cap))
    if (!x.is_identity() && large.contains(x)) return false;
  return true;
}

Permutation right_translation(const Permutation& g) {
  const int n = g.degree();
  const std::uint64_t size = factorial(n);
  std::vector<int> img(static_cast<std::size_t>(size));
  for (std::uint64_t r = 0; r < size; ++r)
    img[r] = static_cast<int>(rank_of(compose(unrank(r, n), g)));
  return Permutation::from_images(std::move(img));
}

GeneratedGroup right_regular_representation(int n, const Limits& limits) {
  const int cap = std::min(limits.max_degree, kHardMaxDegree);
  if (n < 2 || n > cap)
    throw std::invalid_argument("right_regular_representation: n must be in [2, " +
                                std::to_string(cap) + "]");
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < n; ++i)
    gens.push_back(right_translation(Transposition(i, i + 1).as_permutation(n)));
  return GeneratedGroup(static_cast<int>(factorial(n)), std::move(gens));
}

}  // namespace cayleylab
