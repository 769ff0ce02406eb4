#include "cayleylab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cayleylab {

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be >= 0");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int img : images) {
    if (img < 0 || img >= static_cast<int>(images.size()) || seen[img])
      throw std::invalid_argument("image table is not a bijection");
    seen[img] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::first_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return -1;
}

Transposition::Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (x == y) throw std::invalid_argument("transposition endpoints must differ");
  if (a < 0) throw std::invalid_argument("transposition endpoints must be >= 0");
}

Permutation Transposition::as_permutation(int degree) const {
  if (b >= degree) throw std::invalid_argument("transposition endpoint exceeds degree");
  Permutation p(degree);
  std::vector<int> img = p.images();
  std::swap(img[a], img[b]);
  return Permutation::from_images(std::move(img));
}

bool commute(const Transposition& s, const Transposition& t) {
  if (s == t) return true;
  return s.a != t.a && s.a != t.b && s.b != t.a && s.b != t.b;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q(p(i));
  return Permutation::from_images(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[p(i)] = i;
  return Permutation::from_images(std::move(img));
}

Permutation conjugate_by(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree()) throw std::invalid_argument("conjugate_by: degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[g(i)] = g(p(i));
  return Permutation::from_images(std::move(img));
}

Parity parity(const Permutation& p) {
  std::vector<char> seen(p.degree(), 0);
  int orbits = 0;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    for (int j = i; !seen[j]; j = p(j)) seen[j] = 1;
  }
  return (p.degree() - orbits) % 2 == 0 ? Parity::even : Parity::odd;
}

CycleStructure cycle_structure(const Permutation& p) {
  CycleStructure cs;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      cycle.push_back(j);
    }
    cs.cycles.push_back(std::move(cycle));
  }
  return cs;
}

std::vector<int> support(const Permutation& p) {
  std::vector<int> pts;
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i) pts.push_back(i);
  return pts;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t ord = 1;
  for (const auto& cycle : cycle_structure(p).cycles)
    ord = std::lcm(ord, static_cast<std::uint64_t>(cycle.size()));
  return ord;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank_of(const Permutation& p) {
  const int n = p.degree();
  std::uint64_t rank = 0;
  // Lehmer code: count smaller images to the right.
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p(j) < p(i)) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return rank;
}

Permutation unrank(std::uint64_t rank, int degree) {
  if (degree < 0) throw std::invalid_argument("unrank: degree must be >= 0");
  if (rank >= factorial(degree)) throw std::invalid_argument("unrank: rank out of range");
  std::vector<int> pool(degree);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> img;
  img.reserve(degree);
  for (int i = 0; i < degree; ++i) {
    const std::uint64_t f = factorial(degree - 1 - i);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    img.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation::from_images(std::move(img));
}

std::string to_cycle_string(const Permutation& p) {
  const CycleStructure cs = cycle_structure(p);
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& cycle : cs.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::string to_string(const Transposition& t) {
  return "(" + std::to_string(t.a + 1) + "," + std::to_string(t.b + 1) + ")";
}

}  // namespace cayleylab
