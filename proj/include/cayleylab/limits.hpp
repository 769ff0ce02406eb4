#pragma once

#include <cstddef>
#include <cstdint>

namespace cayleylab {

// Resource ceilings. All of these are configuration, not hidden constants:
// callers may raise or lower them, and every operation that consumes one
// reports loudly when it is exceeded instead of silently truncating.
struct Limits {
  // Largest symmetric-group degree n for which Cayley graphs (n! vertices)
  // are constructed.  A hard ceiling of 12 keeps vertex ids inside int.
  int max_degree = 8;

  // Vertex count beyond which the automorphism search refuses to run.
  std::size_t autosearch_vertex_cap = 1000;

  // Whole-group element enumeration cap (group facts, intersections).
  std::uint64_t enumeration_cap = 10000;

  // Cap for automorphism groups of transposition graphs themselves.
  int tgraph_vertex_cap = 12;
};

inline constexpr int kHardMaxDegree = 12;

// Applies environment overrides (CAYLEYLAB_MAX_N) on top of the given limits.
Limits with_env_overrides(Limits limits);

}  // namespace cayleylab
