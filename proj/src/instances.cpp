#include "mhs/instances.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace mhs {

std::vector<VertexSet> brute_force_enumerate(const Hypergraph& h) {
  const VertexSet& vertices = h.vertices();
  const std::size_t n = vertices.size();
  if (n > kBruteForceLimit) {
    throw std::invalid_argument("brute force is limited to " + std::to_string(kBruteForceLimit) +
                                " vertices, got " + std::to_string(n));
  }
  // Edges as bitmasks over positions in `vertices`.
  std::vector<std::uint32_t> masks;
  masks.reserve(h.num_edges());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    std::uint32_t mask = 0;
    for (Vertex v : h.edge(i)) {
      auto pos = std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin();
      mask |= std::uint32_t{1} << pos;
    }
    masks.push_back(mask);
  }

  std::vector<VertexSet> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s64 = 0; s64 < total; ++s64) {
    const auto s = static_cast<std::uint32_t>(s64);
    std::uint32_t has_private = 0;
    bool hits_all = true;
    for (std::uint32_t e : masks) {
      const std::uint32_t hit = e & s;
      if (hit == 0) {
        hits_all = false;
        break;
      }
      if ((hit & (hit - 1)) == 0) has_private |= hit;
    }
    if (!hits_all || has_private != s) continue;
    VertexSet t;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1U) t.push_back(vertices[i]);
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// All k-subsets of {first, ..., first + size - 1}.
void add_complete_block(std::vector<Edge>& edges, Vertex first, std::size_t size, std::size_t k) {
  std::vector<bool> pick(size, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Edge e;
    for (std::size_t i = 0; i < size; ++i) {
      if (pick[i]) e.push_back(first + static_cast<Vertex>(i));
    }
    edges.push_back(std::move(e));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

Hypergraph gen_lower_bound(int k, std::size_t n) {
  if (k < 1) throw std::invalid_argument("lower-bound family needs k >= 1");
  const auto block = static_cast<std::size_t>(2 * k - 1);
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < n / block; ++b) {
    add_complete_block(edges, static_cast<Vertex>(b * block + 1), block, static_cast<std::size_t>(k));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph gen_triangles(std::size_t n) { return gen_lower_bound(2, n); }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t excess = (std::uint64_t{0} - bound) % bound;  // 2^64 mod bound
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (excess != 0 && x > kMax - excess);
  return x % bound;
}

std::uint64_t count_candidate_edges(int k, std::size_t n) {
  constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max();
  const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), n);
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, s), exact while it fits
  bool saturated = false;
  for (std::size_t s = 1; s <= top; ++s) {
    // binom * (n - s + 1) / s, guarding overflow
    const std::uint64_t factor = n - s + 1;
    if (saturated || binom > kCap / factor) {
      saturated = true;
    } else {
      binom = binom * factor / s;
    }
    if (saturated || total > kCap - binom) return kCap;
    total += binom;
  }
  return total;
}

Hypergraph gen_random(const GeneratorSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("random hypergraphs need k >= 1");
  const std::uint64_t available = count_candidate_edges(spec.k, spec.n);
  if (spec.m > available) {
    throw std::invalid_argument("cannot draw " + std::to_string(spec.m) + " distinct edges: only " +
                                std::to_string(available) + " edges of size 1.." +
                                std::to_string(spec.k) + " exist on " + std::to_string(spec.n) +
                                " vertices");
  }
  std::mt19937_64 rng(spec.seed);
  const std::size_t max_size = std::min<std::size_t>(static_cast<std::size_t>(spec.k), spec.n);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  std::vector<Vertex> pool(spec.n);
  while (edges.size() < spec.m) {
    const std::size_t size = 1 + static_cast<std::size_t>(uniform_below(rng, max_size));
    std::iota(pool.begin(), pool.end(), Vertex{1});
    // partial Fisher-Yates: the first `size` slots become the subset
    for (std::size_t i = 0; i < size; ++i) {
      const auto j = i + static_cast<std::size_t>(uniform_below(rng, spec.n - i));
      std::swap(pool[i], pool[j]);
    }
    Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph(spec.n, std::move(edges));
}

Hypergraph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::lower_bound: return gen_lower_bound(spec.k, spec.n);
    case GeneratorKind::triangles: return gen_triangles(spec.n);
    case GeneratorKind::random: return gen_random(spec);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace mhs
