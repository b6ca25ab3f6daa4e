#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mhs/hypergraph.hpp"

namespace mhs {

inline constexpr std::size_t kBruteForceLimit = 25;

/// Every minimal transversal of h by testing all subsets of V(h), sorted
/// lexicographically. Throws std::invalid_argument when |V(h)| exceeds
/// kBruteForceLimit.
std::vector<VertexSet> brute_force_enumerate(const Hypergraph& h);

/// floor(n / (2k-1)) disjoint copies of the hypergraph on 2k-1 vertices whose
/// edges are all k-subsets, followed by isolated vertices up to n. It has
/// binom(2k-1, k)^floor(n/(2k-1)) minimal transversals.
Hypergraph gen_lower_bound(int k, std::size_t n);

/// floor(n/3) disjoint triangles plus isolated vertices.
Hypergraph gen_triangles(std::size_t n);

enum class GeneratorKind { lower_bound, triangles, random };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random;
  int k = 3;
  std::size_t n = 0;
  std::size_t m = 0;        // random only
  std::uint64_t seed = 0;   // random only
};

/// `m` distinct edges; each edge draws a size uniformly from [1, min(k, n)]
/// and then a uniform subset of that size. The stream is std::mt19937_64
/// seeded with `seed`; see uniform_below for the integer mapping. Throws
/// std::invalid_argument when fewer than m distinct edges exist.
Hypergraph gen_random(const GeneratorSpec& spec);

Hypergraph generate(const GeneratorSpec& spec);

/// Uniform integer in [0, bound) from raw 64-bit draws: draws at or above the
/// largest multiple of `bound` are rejected, the rest are reduced mod bound.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Number of distinct nonempty edges of size <= k on n vertices, saturating.
std::uint64_t count_candidate_edges(int k, std::size_t n);

}  // namespace mhs
