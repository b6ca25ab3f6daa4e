#include "mhs/rankk.hpp"

#include <algorithm>
#include <string>

namespace mhs {

std::string_view rule_name(RankkRule r) {
  switch (r) {
    case RankkRule::H1: return "H1";
    case RankkRule::H2: return "H2";
    case RankkRule::R1: return "R1";
    case RankkRule::R2: return "R2";
    case RankkRule::R3: return "R3";
    case RankkRule::B1: return "B1";
    case RankkRule::B2: return "B2";
  }
  return "?";
}

namespace {

Edge to_edge(std::span<const Vertex> e) { return Edge(e.begin(), e.end()); }

std::size_t overlap(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// First edge in canonical order that strictly contains another edge.
std::optional<std::size_t> find_superset(const Hypergraph& h) {
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    auto big = h.edge(j);
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      if (i == j || h.edge_size(i) >= big.size()) continue;
      auto small = h.edge(i);
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) return j;
    }
  }
  return std::nullopt;
}

B2Choice make_b2(const Hypergraph& h) {
  std::size_t ei = 0;
  for (std::size_t i = 1; i < h.num_edges(); ++i) {
    if (h.edge_size(i) < h.edge_size(ei)) ei = i;
  }
  auto e = h.edge(ei);
  std::size_t best = h.num_edges();
  std::size_t best_overlap = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (i == ei) continue;
    const std::size_t o = overlap(e, h.edge(i));
    if (o > best_overlap) {
      best = i;
      best_overlap = o;
    }
  }
  if (best == h.num_edges()) throw InvariantError("B2 found no edge intersecting the smallest edge");
  B2Choice c;
  c.e = to_edge(e);
  c.e_prime = to_edge(h.edge(best));
  for (Vertex x : e) {
    if (std::binary_search(c.e_prime.begin(), c.e_prime.end(), x)) c.ordering.push_back(x);
  }
  for (Vertex x : e) {
    if (!std::binary_search(c.e_prime.begin(), c.e_prime.end(), x)) c.ordering.push_back(x);
  }
  return c;
}

}  // namespace

RankkStep next_rankk_rule(const Instance& inst) {
  const Hypergraph& h = inst.working();
  RankkStep step;
  if (h.num_edges() == 0) {
    step.rule = RankkRule::H1;
    return step;
  }
  if (h.has_empty_edge()) {
    step.rule = RankkRule::H2;
    return step;
  }
  const auto deg = h.degrees();
  for (Vertex v : h.vertices()) {
    if (deg[v] == 0) {
      step.rule = RankkRule::R1;
      step.v = v;
      return step;
    }
  }
  if (auto j = find_superset(h)) {
    step.rule = RankkRule::R2;
    step.edge = to_edge(h.edge(*j));
    return step;
  }
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (h.edge_size(i) == 1) {
      step.rule = RankkRule::R3;
      step.v = h.edge(i)[0];
      step.edge = to_edge(h.edge(i));
      return step;
    }
  }
  for (Vertex v : h.vertices()) {
    if (deg[v] != 1) continue;
    step.rule = RankkRule::B1;
    step.v = v;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      auto e = h.edge(i);
      if (std::binary_search(e.begin(), e.end(), v)) {
        step.edge = to_edge(e);
        break;
      }
    }
    return step;
  }
  step.rule = RankkRule::B2;
  step.b2 = make_b2(h);
  return step;
}

B2Choice choose_b2(const Instance& inst) {
  const RankkStep step = next_rankk_rule(inst);
  if (step.rule != RankkRule::B2) {
    throw std::invalid_argument("B2 precondition violated: rule " + std::string(rule_name(step.rule)) +
                                " applies");
  }
  return step.b2;
}

std::vector<Instance> rankk_branches(const Instance& inst, const RankkStep& step,
                                     const RankkOptions& options) {
  std::vector<Instance> out;
  switch (step.rule) {
    case RankkRule::H1:
    case RankkRule::H2:
      break;
    case RankkRule::R1:
      out.emplace_back(inst).discard(step.v);
      break;
    case RankkRule::R2: {
      auto index = inst.working().find_edge(step.edge);
      if (!index) throw InvariantError("subsumed edge vanished");
      out.emplace_back(inst).drop_edge(*index);
      break;
    }
    case RankkRule::R3:
      out.emplace_back(inst).select(step.v);
      break;
    case RankkRule::B1: {
      out.emplace_back(inst).discard(step.v);
      auto& b = out.emplace_back(inst);
      b.select(step.v);
      if (options.prune_companions) {
        for (Vertex x : step.edge) {
          if (x != step.v) b.discard(x);
        }
      }
      break;
    }
    case RankkRule::B2: {
      const auto& order = step.b2.ordering;
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto& b = out.emplace_back(inst);
        for (std::size_t j = 0; j < i; ++j) b.discard(order[j]);
        b.select(order[i]);
      }
      break;
    }
  }
  return out;
}

namespace {

class RankkSearch {
 public:
  RankkSearch(const TransversalSink& sink, const RankkOptions& options)
      : sink_(sink), options_(options) {}

  void run(const Instance& inst, std::uint64_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const RankkStep step = next_rankk_rule(inst);
    if (step.rule == RankkRule::H2) {
      ++stats_.leaves;
      return;
    }
    if (step.rule == RankkRule::H1) {
      ++stats_.leaves;
      if (is_minimal_transversal(inst.original(), inst.partial())) {
        ++stats_.outputs;
        sink_(inst.partial());
      }
      return;
    }
    std::vector<Instance> children = rankk_branches(inst, step, options_);
    for (const auto& child : children) {
      if (child.eta() >= inst.eta()) {
        throw InvariantError(std::string("rule ") + std::string(rule_name(step.rule)) +
                             " did not shrink |V|+|E|");
      }
    }
    for (const auto& child : children) run(child, depth + 1);
  }

  const SearchStats& stats() const { return stats_; }

 private:
  const TransversalSink& sink_;
  const RankkOptions& options_;
  SearchStats stats_;
};

}  // namespace

SearchStats enumerate_rankk(const Instance& inst, const TransversalSink& sink,
                            const RankkOptions& options) {
  RankkSearch search(sink, options);
  search.run(inst, 0);
  return search.stats();
}

SearchStats enumerate_rankk(const Hypergraph& h, const TransversalSink& sink,
                            const RankkOptions& options) {
  return enumerate_rankk(Instance(h), sink, options);
}

}  // namespace mhs
