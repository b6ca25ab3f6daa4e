#pragma once

#include <string_view>
#include <vector>

#include "mhs/hypergraph.hpp"

namespace mhs {

enum class RankkRule {
  H1,  // no edges: output S if minimal
  H2,  // empty edge: backtrack
  R1,  // degree-0 vertex: discard
  R2,  // subsumed edge: remove the superset
  R3,  // size-1 edge: select
  B1,  // degree-1 vertex
  B2,  // smallest edge, ordered by its overlap with a partner edge
};

std::string_view rule_name(RankkRule r);

/// Branching data for B2: `e` is the canonically first edge of minimum size,
/// `e_prime` the edge with the largest overlap with `e` (first in canonical
/// order on ties), and `ordering` lists e ∩ e_prime ascending followed by
/// e \ e_prime ascending.
struct B2Choice {
  Edge e;
  Edge e_prime;
  VertexSet ordering;
};

/// Throws std::invalid_argument if one of H1..B1 applies to `inst`.
B2Choice choose_b2(const Instance& inst);

struct RankkStep {
  RankkRule rule = RankkRule::H1;
  Vertex v = 0;
  Edge edge;  // R2: removed superset; R3, B1: the edge of v
  B2Choice b2;
};

RankkStep next_rankk_rule(const Instance& inst);

struct RankkOptions {
  /// In B1's select branch, discard e \ {v}. Disabling it yields the same
  /// output through more search.
  bool prune_companions = true;
};

std::vector<Instance> rankk_branches(const Instance& inst, const RankkStep& step,
                                     const RankkOptions& options = {});

/// Calls `sink` once per minimal transversal of h, any rank.
SearchStats enumerate_rankk(const Hypergraph& h, const TransversalSink& sink,
                            const RankkOptions& options = {});
SearchStats enumerate_rankk(const Instance& inst, const TransversalSink& sink,
                            const RankkOptions& options = {});

}  // namespace mhs
