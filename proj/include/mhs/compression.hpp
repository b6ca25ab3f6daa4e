#pragma once

#include <functional>

#include "mhs/hypergraph.hpp"

namespace mhs {

/// Enumerator for the projected, lower-rank subproblems.
using InnerEngine = std::function<SearchStats(const Hypergraph&, const TransversalSink&)>;

/// Called for every (X, N, projected hypergraph) triple that Phase 2 visits.
using ProjectionObserver =
    std::function<void(const VertexSet& x, const VertexSet& n, const Hypergraph& projected)>;

inline constexpr double kDefaultAlpha = 0.66938;

/// The rank-3 engine; handles rank-4 inputs.
InnerEngine rank3_inner();
/// Rank 3 engine for rank <= 3, otherwise another compression layer.
InnerEngine stacked_inner(double alpha = kDefaultAlpha);

struct CompressionConfig {
  double alpha = kDefaultAlpha;  // in [0.5, 1]
  InnerEngine inner = rank3_inner();
  ProjectionObserver on_projection;
};

/// Removes the edges hit by N, deletes X \ N from the remaining edges and
/// drops X from the vertex set. Throws std::invalid_argument unless
/// N ⊆ X ⊆ V(h).
Hypergraph project(const Hypergraph& h, const VertexSet& x, const VertexSet& n);

/// Iterative-compression enumeration. Phase 1 looks for a transversal X of
/// size floor(alpha * |V|) (the lexicographically first one); if none exists
/// every minimal transversal is larger and Phase 1's scan of the larger
/// subsets outputs them. Otherwise, for each N ⊆ X in binary-counter order,
/// the inner engine enumerates project(h, X, N) and N ∪ Y is output when it is
/// a minimal transversal of h.
///
/// Throws std::invalid_argument for alpha outside [0.5, 1] and
/// InvariantError if the inner engine rejects a projected instance.
SearchStats enumerate_compression(const Hypergraph& h, const CompressionConfig& config,
                                  const TransversalSink& sink);

}  // namespace mhs
