#include "mhs/rank3.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mhs {

std::string_view rule_name(Rank3Rule r) {
  switch (r) {
    case Rank3Rule::R0_0: return "R0_0";
    case Rank3Rule::R0_1: return "R0_1";
    case Rank3Rule::R1_0: return "R1_0";
    case Rank3Rule::R1_1: return "R1_1";
    case Rank3Rule::R1_2: return "R1_2";
    case Rank3Rule::R2_1: return "R2_1";
    case Rank3Rule::R2_2: return "R2_2";
    case Rank3Rule::R2_3: return "R2_3";
    case Rank3Rule::R3_1: return "R3_1";
    case Rank3Rule::R3_2: return "R3_2";
    case Rank3Rule::R3_3: return "R3_3";
    case Rank3Rule::R4_1: return "R4_1";
    case Rank3Rule::R4_2: return "R4_2";
    case Rank3Rule::R4_3: return "R4_3";
  }
  return "?";
}

namespace {

Edge to_edge(std::span<const Vertex> e) { return Edge(e.begin(), e.end()); }

// First size-3 edge (canonical order) that strictly contains another edge.
bool find_subsumed(const Hypergraph& h, Rank3Step& step) {
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (h.edge_size(i) != 3) continue;
    auto e = h.edge(i);
    const Vertex subsets[6][2] = {{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]},
                                  {e[0], 0},    {e[1], 0},    {e[2], 0}};
    for (int s = 0; s < 6; ++s) {
      std::span<const Vertex> sub(subsets[s], s < 3 ? 2 : 1);
      if (h.find_edge(sub)) {
        step.rule = Rank3Rule::R1_1;
        step.edge = to_edge(e);
        step.other_edge = to_edge(sub);
        return true;
      }
    }
  }
  return false;
}

std::size_t edge_containing(const Hypergraph& h, Vertex v, std::size_t from = 0) {
  for (std::size_t i = from; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    if (std::binary_search(e.begin(), e.end(), v)) return i;
  }
  throw InvariantError("vertex " + std::to_string(v) + " lies in no edge");
}

}  // namespace

Rank3Step next_rule(const Instance& inst) {
  const Hypergraph& h = inst.working();
  if (h.rank() > 3) throw RankError("rank3 engine needs rank <= 3, got " + std::to_string(h.rank()));

  Rank3Step step;
  if (h.has_empty_edge()) {
    step.rule = Rank3Rule::R0_0;
    return step;
  }
  if (h.num_edges() == 0) {
    step.rule = Rank3Rule::R0_1;
    return step;
  }

  const auto deg = h.degrees();
  for (Vertex v : h.vertices()) {
    if (deg[v] == 0) {
      step.rule = Rank3Rule::R1_0;
      step.v = v;
      return step;
    }
  }

  if (find_subsumed(h, step)) return step;

  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (h.edge_size(i) == 1) {
      step.rule = Rank3Rule::R1_2;
      step.v = h.edge(i)[0];
      step.edge = to_edge(h.edge(i));
      return step;
    }
  }

  for (Vertex v : h.vertices()) {
    if (deg[v] != 1) continue;
    auto e = h.edge(edge_containing(h, v));
    step.v = v;
    step.edge = to_edge(e);
    Vertex others[2] = {0, 0};
    std::size_t k = 0;
    for (Vertex x : e) {
      if (x != v) others[k++] = x;
    }
    if (e.size() == 2) {
      step.rule = Rank3Rule::R2_1;
      step.u = others[0];
    } else if (deg[others[0]] == 1 && deg[others[1]] == 1) {
      step.rule = Rank3Rule::R2_2;
    } else {
      step.rule = Rank3Rule::R2_3;
      const bool first_high = deg[others[0]] >= 2;
      step.u = first_high ? others[0] : others[1];
      step.w = first_high ? others[1] : others[0];
    }
    return step;
  }

  const auto deg2 = h.degrees_of_size(2);
  bool any_size2 = false;
  Vertex best = 0;
  for (Vertex v : h.vertices()) {
    if (deg2[v] == 0) continue;
    any_size2 = true;
    if (best == 0 || deg2[v] > deg2[best] || (deg2[v] == deg2[best] && deg[v] > deg[best])) best = v;
  }
  if (any_size2) {
    step.v = best;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      auto e = h.edge(i);
      if (e.size() != 2) continue;
      if (e[0] == best) step.partners.push_back(e[1]);
      if (e[1] == best) step.partners.push_back(e[0]);
    }
    std::sort(step.partners.begin(), step.partners.end());
    step.edge = {std::min(best, step.partners[0]), std::max(best, step.partners[0])};
    const auto d2 = step.partners.size();
    step.rule = d2 == 1 ? Rank3Rule::R3_1 : d2 == 2 ? Rank3Rule::R3_2 : Rank3Rule::R3_3;
    return step;
  }

  // Every edge has size 3 and every degree is at least 2.
  Vertex v = 0;
  for (Vertex x : h.vertices()) {
    if (v == 0 || deg[x] > deg[v]) v = x;
  }
  step.v = v;
  if (deg[v] >= 3) {
    step.rule = Rank3Rule::R4_1;
    return step;
  }
  if (deg[v] != 2) throw InvariantError("rule 4 reached with maximum degree " + std::to_string(deg[v]));

  const std::size_t i1 = edge_containing(h, v);
  const std::size_t i2 = edge_containing(h, v, i1 + 1);
  auto e1 = h.edge(i1);
  auto e2 = h.edge(i2);
  step.edge = to_edge(e1);
  step.other_edge = to_edge(e2);
  for (Vertex x : e1) {
    if (x != v && std::binary_search(e2.begin(), e2.end(), x)) {
      step.rule = Rank3Rule::R4_2;
      step.u = x;
      return step;
    }
  }
  step.rule = Rank3Rule::R4_3;
  auto split = [v](std::span<const Vertex> e, Vertex& a, Vertex& b) {
    Vertex rest[2];
    std::size_t k = 0;
    for (Vertex x : e) {
      if (x != v) rest[k++] = x;
    }
    a = rest[0];
    b = rest[1];
  };
  split(e1, step.u1, step.w1);
  split(e2, step.u2, step.w2);
  return step;
}

std::vector<Instance> rank3_branches(const Instance& inst, const Rank3Step& step,
                                     const Rank3Options& options) {
  const bool prune = options.prune_companions;
  std::vector<Instance> out;
  auto branch = [&]() -> Instance& { return out.emplace_back(inst); };

  switch (step.rule) {
    case Rank3Rule::R0_0:
    case Rank3Rule::R0_1:
      break;
    case Rank3Rule::R1_0:
      branch().discard(step.v);
      break;
    case Rank3Rule::R1_1: {
      auto index = inst.working().find_edge(step.edge);
      if (!index) throw InvariantError("subsumed edge vanished");
      branch().drop_edge(*index);
      break;
    }
    case Rank3Rule::R1_2:
      branch().select(step.v);
      break;
    case Rank3Rule::R2_1: {
      auto& b1 = branch();
      b1.select(step.v);
      if (prune) b1.discard(step.u);
      auto& b2 = branch();
      b2.discard(step.v);
      b2.select(step.u);
      break;
    }
    case Rank3Rule::R2_2:
      for (Vertex chosen : step.edge) {
        auto& b = branch();
        b.select(chosen);
        for (Vertex x : step.edge) {
          if (x != chosen) b.discard(x);
        }
      }
      break;
    case Rank3Rule::R2_3: {
      auto& b1 = branch();
      b1.select(step.v);
      if (prune) {
        b1.discard(step.u);
        b1.discard(step.w);
      }
      branch().discard(step.v);
      break;
    }
    case Rank3Rule::R3_1:
    case Rank3Rule::R3_2:
    case Rank3Rule::R3_3: {
      branch().select(step.v);
      auto& b2 = branch();
      b2.discard(step.v);
      for (Vertex p : step.partners) b2.select(p);
      break;
    }
    case Rank3Rule::R4_1:
      branch().select(step.v);
      branch().discard(step.v);
      break;
    case Rank3Rule::R4_2: {
      auto& b1 = branch();
      b1.select(step.v);
      if (prune) b1.discard(step.u);
      branch().discard(step.v);
      break;
    }
    case Rank3Rule::R4_3: {
      auto& b1 = branch();
      b1.select(step.v);
      b1.select(step.u1);
      if (prune) {
        b1.discard(step.u2);
        b1.discard(step.w2);
      }
      auto& b2 = branch();
      b2.select(step.v);
      b2.discard(step.u1);
      branch().discard(step.v);
      break;
    }
  }
  return out;
}

namespace {

class Rank3Search {
 public:
  Rank3Search(const TransversalSink& sink, const Rank3Options& options)
      : sink_(sink), options_(options) {}

  void run(const Instance& inst, std::uint64_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const Rank3Step step = next_rule(inst);
    if (step.rule == Rank3Rule::R0_0) {
      ++stats_.leaves;
      return;
    }
    if (step.rule == Rank3Rule::R0_1) {
      ++stats_.leaves;
      if (is_minimal_transversal(inst.original(), inst.partial())) {
        ++stats_.outputs;
        sink_(inst.partial());
      }
      return;
    }

    std::vector<Instance> children = rank3_branches(inst, step, options_);
    for (const auto& child : children) {
      if (child.eta() >= inst.eta()) {
        throw InvariantError(std::string("rule ") + std::string(rule_name(step.rule)) +
                             " did not shrink |V|+|E|");
      }
    }
    if (options_.audit != nullptr && children.size() >= 2) audit(inst, children);
    for (const auto& child : children) run(child, depth + 1);
  }

  const SearchStats& stats() const { return stats_; }

 private:
  void audit(const Instance& parent, const std::vector<Instance>& children) {
    MeasureAudit& a = *options_.audit;
    const double mu = measure(parent.working(), a.weights);
    double sum = 0.0;
    double ratio = 0.0;
    for (const auto& child : children) {
      const double mu_child = measure(child.working(), a.weights);
      sum += std::exp2(mu_child);
      ratio += std::exp2(mu_child - mu);
    }
    ++a.checked;
    if (sum > std::exp2(mu) + a.tolerance) ++a.violations;
    a.worst_ratio = std::max(a.worst_ratio, ratio);
  }

  const TransversalSink& sink_;
  const Rank3Options& options_;
  SearchStats stats_;
};

}  // namespace

SearchStats enumerate_rank3(const Instance& inst, const TransversalSink& sink,
                            const Rank3Options& options) {
  if (inst.working().rank() > 3) {
    throw RankError("rank3 engine needs rank <= 3, got " + std::to_string(inst.working().rank()));
  }
  Rank3Search search(sink, options);
  search.run(inst, 0);
  return search.stats();
}

SearchStats enumerate_rank3(const Hypergraph& h, const TransversalSink& sink,
                            const Rank3Options& options) {
  return enumerate_rank3(Instance(h), sink, options);
}

}  // namespace mhs
