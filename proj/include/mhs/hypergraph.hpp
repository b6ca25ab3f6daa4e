#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mhs/types.hpp"

namespace mhs {

class Instance;

/// A vertex set V together with a duplicate-free set of hyperedges over V.
///
/// Edges are kept in canonical order: each edge lists its vertices in
/// ascending order and the edges are sorted lexicographically. Every
/// deterministic tie-break in the engines refers to this order. Storage is a
/// single contiguous pool so that copying a hypergraph in the search is two
/// vector copies.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Vertex set {1..n}. Edges are sorted and deduplicated; throws
  /// std::invalid_argument if a vertex id lies outside [1..n].
  Hypergraph(std::size_t n, std::vector<Edge> edges);

  /// Explicit vertex set, a subset of {1..n}; every edge must lie inside it.
  Hypergraph(std::size_t n, VertexSet vertices, std::vector<Edge> edges);

  /// Largest admissible vertex id.
  std::size_t universe_size() const noexcept { return n_; }
  const VertexSet& vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return offsets_.size() - 1; }

  std::span<const Vertex> edge(std::size_t i) const {
    return {pool_.data() + offsets_[i], pool_.data() + offsets_[i + 1]};
  }
  std::size_t edge_size(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
  std::vector<Edge> edge_list() const;

  /// Maximum edge cardinality, 0 without edges.
  std::size_t rank() const noexcept;
  bool has_vertex(Vertex v) const;
  bool has_empty_edge() const noexcept { return num_edges() > 0 && edge_size(0) == 0; }
  /// Index of an edge equal to `e` (ascending), if present.
  std::optional<std::size_t> find_edge(std::span<const Vertex> e) const;

  /// Degree of every vertex id, indexed 0..n (index 0 unused).
  std::vector<std::uint32_t> degrees() const;
  /// Number of edges of exactly `size` containing each vertex, indexed 0..n.
  std::vector<std::uint32_t> degrees_of_size(std::size_t size) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  friend class Instance;

  void erase_vertex(Vertex v);
  void remove_edges_containing(Vertex v);
  void remove_vertex_from_edges(Vertex v);
  void remove_edge(std::size_t i);
  void normalize();

  std::size_t n_ = 0;
  VertexSet vertices_;
  std::vector<Vertex> pool_;
  std::vector<std::uint32_t> offsets_{0};
};

/// Lexicographic comparison on ascending vertex lists; the canonical order.
bool canonical_less(std::span<const Vertex> a, std::span<const Vertex> b);

/// Degree counts of one vertex.
struct DegreeProfile {
  std::size_t degree = 0;
  std::vector<std::size_t> by_size;  // by_size[i] = d_i(v)
  VertexSet neighbors;               // N(v), v excluded

  std::size_t of_size(std::size_t i) const { return i < by_size.size() ? by_size[i] : 0; }
  std::size_t up_to(std::size_t i) const;
};

DegreeProfile degree_profile(const Hypergraph& h, Vertex v);

/// True iff `s` hits every edge and every member of `s` has a private edge
/// (an edge whose only vertex from `s` is that member).
bool is_minimal_transversal(const Hypergraph& h, std::span<const Vertex> s);
bool is_transversal(const Hypergraph& h, std::span<const Vertex> s);

/// Text format: comment lines starting with `c` or `#`, a header
/// `p hg <n> <m>`, then m edge lines of whitespace-separated vertex ids. A
/// blank line among the first m edge lines is an empty edge. Throws
/// ParseError with the offending line number.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// One transversal per line, ids ascending and space separated.
void write_vertex_set(std::ostream& out, std::span<const Vertex> s);

/// Working hypergraph plus the partial solution S of one search node.
/// V(working) and S stay disjoint.
class Instance {
 public:
  explicit Instance(const Hypergraph& original);
  Instance(const Hypergraph& original, Hypergraph working, VertexSet partial);

  const Hypergraph& working() const noexcept { return working_; }
  const VertexSet& partial() const noexcept { return partial_; }
  const Hypergraph& original() const noexcept { return *original_; }

  /// Add v to S and drop every edge containing v.
  void select(Vertex v);
  /// Remove v from V and from every edge; shrunken duplicates collapse.
  void discard(Vertex v);
  /// Remove one edge (subsumption reductions).
  void drop_edge(std::size_t index);

  /// |V| + |E|; strictly decreases along every recursive call.
  std::size_t eta() const noexcept { return working_.num_vertices() + working_.num_edges(); }

 private:
  const Hypergraph* original_;
  Hypergraph working_;
  VertexSet partial_;
};

Instance select(Instance inst, Vertex v);
Instance discard(Instance inst, Vertex v);

}  // namespace mhs
