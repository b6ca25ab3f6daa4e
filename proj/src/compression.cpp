#include "mhs/compression.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mhs/rank3.hpp"

namespace mhs {

InnerEngine rank3_inner() {
  return [](const Hypergraph& h, const TransversalSink& sink) { return enumerate_rank3(h, sink); };
}

InnerEngine stacked_inner(double alpha) {
  return [alpha](const Hypergraph& h, const TransversalSink& sink) {
    if (h.rank() <= 3) return enumerate_rank3(h, sink);
    CompressionConfig config;
    config.alpha = alpha;
    config.inner = stacked_inner(alpha);
    return enumerate_compression(h, config, sink);
  };
}

Hypergraph project(const Hypergraph& h, const VertexSet& x, const VertexSet& n) {
  if (!std::is_sorted(x.begin(), x.end()) || !std::is_sorted(n.begin(), n.end())) {
    throw std::invalid_argument("project expects ascending vertex sets");
  }
  if (!std::includes(x.begin(), x.end(), n.begin(), n.end())) {
    throw std::invalid_argument("project requires N ⊆ X");
  }
  if (!std::includes(h.vertices().begin(), h.vertices().end(), x.begin(), x.end())) {
    throw std::invalid_argument("project requires X ⊆ V");
  }
  VertexSet rest;
  std::set_difference(h.vertices().begin(), h.vertices().end(), x.begin(), x.end(),
                      std::back_inserter(rest));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    const bool hit = std::any_of(e.begin(), e.end(), [&](Vertex v) {
      return std::binary_search(n.begin(), n.end(), v);
    });
    if (hit) continue;
    Edge shrunk;
    std::set_difference(e.begin(), e.end(), x.begin(), x.end(), std::back_inserter(shrunk));
    edges.push_back(std::move(shrunk));
  }
  return Hypergraph(h.universe_size(), std::move(rest), std::move(edges));
}

namespace {

// Visits the size-k subsets of `pool` in lexicographic order until `visit`
// returns true. Returns whether it stopped early.
template <class Visit>
bool for_each_subset(const VertexSet& pool, std::size_t k, SearchStats& stats, Visit&& visit) {
  const std::size_t n = pool.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  VertexSet subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    ++stats.nodes;
    ++stats.leaves;
    if (visit(subset)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SearchStats enumerate_compression(const Hypergraph& h, const CompressionConfig& config,
                                  const TransversalSink& sink) {
  if (!(config.alpha >= 0.5 && config.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0.5, 1]");
  }
  if (!config.inner) throw std::invalid_argument("compression needs an inner engine");

  SearchStats stats;
  const VertexSet& vertices = h.vertices();
  const std::size_t n = vertices.size();
  const auto target = static_cast<std::size_t>(std::floor(config.alpha * static_cast<double>(n) + 1e-9));

  VertexSet x;
  const bool found = for_each_subset(vertices, target, stats, [&](const VertexSet& s) {
    if (!is_transversal(h, s)) return false;
    x = s;
    return true;
  });

  if (!found) {
    // No transversal of size <= target, so all minimal ones are larger.
    for (std::size_t size = n; size > target; --size) {
      for_each_subset(vertices, size, stats, [&](const VertexSet& s) {
        if (is_minimal_transversal(h, s)) {
          ++stats.outputs;
          sink(s);
        }
        return false;
      });
    }
    return stats;
  }

  if (x.size() >= 64) throw std::invalid_argument("compression set too large to split");
  const std::uint64_t splits = std::uint64_t{1} << x.size();
  VertexSet n_set;
  VertexSet combined;
  for (std::uint64_t mask = 0; mask < splits; ++mask) {
    n_set.clear();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((mask >> i) & 1U) n_set.push_back(x[i]);
    }
    const Hypergraph projected = project(h, x, n_set);
    if (config.on_projection) config.on_projection(x, n_set, projected);

    const TransversalSink inner_sink = [&](std::span<const Vertex> y) {
      combined.clear();
      std::merge(n_set.begin(), n_set.end(), y.begin(), y.end(), std::back_inserter(combined));
      if (is_minimal_transversal(h, combined)) {
        ++stats.outputs;
        sink(combined);
      }
    };
    SearchStats inner;
    try {
      inner = config.inner(projected, inner_sink);
    } catch (const RankError& e) {
      throw InvariantError(std::string("inner engine rejected a projected instance: ") + e.what());
    }
    stats.nodes += inner.nodes;
    stats.leaves += inner.leaves;
    stats.max_depth = std::max(stats.max_depth, inner.max_depth + 1);
  }
  return stats;
}

}  // namespace mhs
