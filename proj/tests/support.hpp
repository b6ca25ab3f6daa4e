#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mhs/hypergraph.hpp"
#include "mhs/instances.hpp"

namespace mhs::test {

/// Runs an enumerator and returns its output in emission order.
template <class Engine>
std::vector<VertexSet> collect(Engine&& engine) {
  std::vector<VertexSet> out;
  engine([&](std::span<const Vertex> t) { out.emplace_back(t.begin(), t.end()); });
  return out;
}

inline std::vector<VertexSet> sorted(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

inline bool has_duplicates(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  return std::adjacent_find(sets.begin(), sets.end()) != sets.end();
}

inline std::string show(const std::vector<VertexSet>& sets) {
  std::ostringstream out;
  out << '[';
  for (const auto& s : sets) {
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << '}';
  }
  out << ']';
  return out.str();
}

/// Random hypergraph with edge sizes in [1, k] and at most `max_m` edges.
inline Hypergraph random_instance(std::uint64_t seed, int k, std::size_t n, std::size_t max_m) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::random;
  spec.k = k;
  spec.n = n;
  spec.seed = seed;
  const auto cap = count_candidate_edges(k, n);
  spec.m = std::min<std::uint64_t>(max_m, cap);
  if (spec.m > 0) spec.m = 1 + seed % spec.m;
  return gen_random(spec);
}

}  // namespace mhs::test
