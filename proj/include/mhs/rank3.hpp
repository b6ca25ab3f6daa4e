#pragma once

#include <string_view>
#include <vector>

#include "mhs/analysis.hpp"
#include "mhs/hypergraph.hpp"

namespace mhs {

enum class Rank3Rule {
  R0_0,  // empty edge: backtrack
  R0_1,  // no edges: output S if minimal
  R1_0,  // degree-0 vertex: discard
  R1_1,  // size-3 edge with a proper subset edge: remove it
  R1_2,  // size-1 edge: select its vertex
  R2_1,  // degree-1 vertex in a size-2 edge
  R2_2,  // size-3 edge of three degree-1 vertices
  R2_3,  // degree-1 vertex in a size-3 edge with a higher-degree vertex
  R3_1,  // size-2 edges present, pivot has one of them
  R3_2,  // ... two of them
  R3_3,  // ... three or more
  R4_1,  // 3-uniform, max degree >= 3
  R4_2,  // 3-uniform, 2-regular, pivot shares both edges with u
  R4_3,  // 3-uniform, 2-regular, pivot edges meet only in the pivot
};

std::string_view rule_name(Rank3Rule r);

/// The first applicable rule at a search node with its pivots.
struct Rank3Step {
  Rank3Rule rule = Rank3Rule::R0_0;
  Vertex v = 0;
  Edge edge;         // e; R1_1: the removed superset; R4_3: e1
  Edge other_edge;   // R1_1: the contained edge; R4_3: e2
  Vertex u = 0;      // R2_1, R2_3, R4_2
  Vertex w = 0;      // R2_3
  VertexSet partners;  // R3_x: every vertex sharing a size-2 edge with v, ascending
  Vertex u1 = 0, w1 = 0, u2 = 0, w2 = 0;  // R4_3
};

/// Picks the first applicable rule. Pivot ties go to the smallest vertex id,
/// then to canonical edge order. Throws RankError if the working hypergraph
/// has rank > 3.
Rank3Step next_rule(const Instance& inst);

/// Per-node check of sum_i 2^mu(child_i) <= 2^mu(parent) + tolerance.
struct MeasureAudit {
  Weights weights = Weights::rank3_table();
  double tolerance = 1e-9;
  std::uint64_t checked = 0;        // nodes with at least two children
  std::uint64_t violations = 0;
  double worst_ratio = 0.0;         // max of sum_i 2^(mu_i - mu)
};

struct Rank3Options {
  /// Discard the companions that could never be in a minimal transversal
  /// with the selected pivot (R2_1, R2_3, R4_2, R4_3). Disabling it yields a
  /// slower engine with the same output.
  bool prune_companions = true;
  MeasureAudit* audit = nullptr;
};

/// Child instances produced by `step`, in branch order.
std::vector<Instance> rank3_branches(const Instance& inst, const Rank3Step& step,
                                     const Rank3Options& options = {});

/// Calls `sink` once per minimal transversal of h, in DFS order.
/// Throws RankError if rank(h) > 3.
SearchStats enumerate_rank3(const Hypergraph& h, const TransversalSink& sink,
                            const Rank3Options& options = {});

/// Enumerates every minimal transversal T of inst.original() with
/// T \ S a minimal transversal of inst.working().
SearchStats enumerate_rank3(const Instance& inst, const TransversalSink& sink,
                            const Rank3Options& options = {});

}  // namespace mhs
