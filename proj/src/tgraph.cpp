#include "cayleylab/tgraph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cayleylab {

TranspositionSet::TranspositionSet(int n_, std::vector<Transposition> edges_)
    : n(n_), edges(std::move(edges_)) {
  if (n < 1) throw std::invalid_argument("transposition set needs n >= 1");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate transposition");
  for (const Transposition& t : edges)
    if (t.b >= n) throw std::invalid_argument("transposition endpoint exceeds n");
}

bool TranspositionSet::contains(const Transposition& t) const {
  return std::binary_search(edges.begin(), edges.end(), t);
}

std::vector<Permutation> TranspositionSet::generator_permutations() const {
  std::vector<Permutation> gens;
  gens.reserve(edges.size());
  for (const Transposition& t : edges) gens.push_back(t.as_permutation(n));
  return gens;
}

SimpleGraph build_tgraph(const TranspositionSet& s) {
  SimpleGraph g(s.n);
  for (const Transposition& t : s.edges) g.add_edge(t.a, t.b);
  return g;
}

GeneratedGroup graph_automorphisms(const SimpleGraph& g, const Limits& limits) {
  if (g.vertex_count() > limits.tgraph_vertex_cap)
    throw std::runtime_error("graph_automorphisms: vertex cap exceeded (" +
                             std::to_string(g.vertex_count()) + " > " +
                             std::to_string(limits.tgraph_vertex_cap) + ")");
  return automorphism_group(ColoredGraph(g), limits);
}

GeneratedGroup aut_sn_s(const TranspositionSet& s, const Limits& limits) {
  const SimpleGraph t = build_tgraph(s);
  if (!is_connected(t))
    throw std::invalid_argument("aut_sn_s: transposition graph is not connected");
  if (s.n > std::min(limits.max_degree, kHardMaxDegree))
    throw std::runtime_error("aut_sn_s: degree exceeds construction cap");
  const GeneratedGroup aut_t = graph_automorphisms(t, limits);

  const std::uint64_t size = factorial(s.n);
  std::vector<Permutation> induced;
  for (const Permutation& sigma : aut_t.generators()) {
    // Conjugation by sigma maps the transposition (a b) to (sigma a, sigma b),
    // so a graph automorphism of T(S) must fix S setwise.
    for (const Transposition& tr : s.edges)
      if (!s.contains(Transposition(sigma(tr.a), sigma(tr.b))))
        throw std::logic_error("aut_sn_s: induced map does not fix S setwise");
    std::vector<int> img(static_cast<std::size_t>(size));
    for (std::uint64_t r = 0; r < size; ++r)
      img[r] = static_cast<int>(rank_of(conjugate_by(unrank(r, s.n), sigma)));
    induced.push_back(Permutation::from_images(std::move(img)));
  }
  return GeneratedGroup(static_cast<int>(size), std::move(induced));
}

namespace {

[[noreturn]] void parse_fail(std::string_view token, std::size_t pos, const std::string& why) {
  throw std::invalid_argument("edge list parse error at character " + std::to_string(pos + 1) +
                              " ('" + std::string(token) + "'): " + why);
}

}  // namespace

TranspositionSet parse_edge_list(std::string_view text, std::optional<int> n) {
  std::vector<Transposition> edges;
  int max_endpoint = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view token = text.substr(start, i - start);
    const std::size_t dash = token.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 == token.size())
      parse_fail(token, start, "expected 'a-b'");
    int a = 0, b = 0;
    try {
      std::size_t used = 0;
      a = std::stoi(std::string(token.substr(0, dash)), &used);
      if (used != dash) parse_fail(token, start, "endpoint is not a number");
      const std::string rhs(token.substr(dash + 1));
      b = std::stoi(rhs, &used);
      if (used != rhs.size()) parse_fail(token, start, "endpoint is not a number");
    } catch (const std::invalid_argument&) {
      parse_fail(token, start, "endpoint is not a number");
    } catch (const std::out_of_range&) {
      parse_fail(token, start, "endpoint out of range");
    }
    if (a < 1 || b < 1) parse_fail(token, start, "endpoints are 1-based");
    if (a == b) parse_fail(token, start, "endpoints must differ");
    max_endpoint = std::max({max_endpoint, a, b});
    const Transposition t(a - 1, b - 1);
    for (const Transposition& prev : edges)
      if (prev == t) parse_fail(token, start, "duplicate edge");
    edges.push_back(t);
  }
  if (edges.empty()) throw std::invalid_argument("edge list is empty");
  const int vertex_count = n.value_or(max_endpoint);
  if (vertex_count < max_endpoint)
    throw std::invalid_argument("explicit n smaller than largest endpoint");
  return TranspositionSet(vertex_count, std::move(edges));
}

std::string to_edge_list(const TranspositionSet& s) {
  std::string out;
  for (const Transposition& t : s.edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(t.a + 1) + "-" + std::to_string(t.b + 1);
  }
  return out;
}

std::string to_string(const TranspositionSet& s) {
  std::string out;
  for (const Transposition& t : s.edges) {
    if (!out.empty()) out += ' ';
    out += to_string(t);
  }
  return out;
}

}  // namespace cayleylab
