#include "mhs/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace mhs {

bool canonical_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

bool spans_equal(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  vertices_.resize(n);
  std::iota(vertices_.begin(), vertices_.end(), Vertex{1});
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (Vertex v : e) {
      if (v < 1 || v > n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [1.." +
                                    std::to_string(n) + "]");
      }
    }
    pool_.insert(pool_.end(), e.begin(), e.end());
    offsets_.push_back(static_cast<std::uint32_t>(pool_.size()));
  }
  normalize();
}

Hypergraph::Hypergraph(std::size_t n, VertexSet vertices, std::vector<Edge> edges)
    : n_(n), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (!vertices_.empty() && (vertices_.front() < 1 || vertices_.back() > n)) {
    throw std::invalid_argument("vertex set exceeds [1.." + std::to_string(n) + "]");
  }
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (Vertex v : e) {
      if (!std::binary_search(vertices_.begin(), vertices_.end(), v)) {
        throw std::invalid_argument("edge vertex " + std::to_string(v) +
                                    " is not in the vertex set");
      }
    }
    pool_.insert(pool_.end(), e.begin(), e.end());
    offsets_.push_back(static_cast<std::uint32_t>(pool_.size()));
  }
  normalize();
}

std::vector<Edge> Hypergraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

std::size_t Hypergraph::rank() const noexcept {
  std::size_t r = 0;
  for (std::size_t i = 0; i < num_edges(); ++i) r = std::max(r, edge_size(i));
  return r;
}

bool Hypergraph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<std::size_t> Hypergraph::find_edge(std::span<const Vertex> e) const {
  std::size_t lo = 0;
  std::size_t hi = num_edges();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (canonical_less(edge(mid), e)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < num_edges() && spans_equal(edge(lo), e)) return lo;
  return std::nullopt;
}

std::vector<std::uint32_t> Hypergraph::degrees() const {
  std::vector<std::uint32_t> deg(n_ + 1, 0);
  for (Vertex v : pool_) ++deg[v];
  return deg;
}

std::vector<std::uint32_t> Hypergraph::degrees_of_size(std::size_t size) const {
  std::vector<std::uint32_t> deg(n_ + 1, 0);
  for (std::size_t i = 0; i < num_edges(); ++i) {
    if (edge_size(i) != size) continue;
    for (Vertex v : edge(i)) ++deg[v];
  }
  return deg;
}

void Hypergraph::erase_vertex(Vertex v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the working set");
  }
  vertices_.erase(it);
}

void Hypergraph::remove_edges_containing(Vertex v) {
  std::vector<Vertex> pool;
  std::vector<std::uint32_t> offsets{0};
  pool.reserve(pool_.size());
  offsets.reserve(offsets_.size());
  for (std::size_t i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    if (std::binary_search(e.begin(), e.end(), v)) continue;
    pool.insert(pool.end(), e.begin(), e.end());
    offsets.push_back(static_cast<std::uint32_t>(pool.size()));
  }
  pool_ = std::move(pool);
  offsets_ = std::move(offsets);
}

void Hypergraph::remove_vertex_from_edges(Vertex v) {
  bool changed = false;
  std::vector<Vertex> pool;
  std::vector<std::uint32_t> offsets{0};
  pool.reserve(pool_.size());
  offsets.reserve(offsets_.size());
  for (std::size_t i = 0; i < num_edges(); ++i) {
    for (Vertex x : edge(i)) {
      if (x == v) {
        changed = true;
      } else {
        pool.push_back(x);
      }
    }
    offsets.push_back(static_cast<std::uint32_t>(pool.size()));
  }
  if (!changed) return;
  pool_ = std::move(pool);
  offsets_ = std::move(offsets);
  normalize();
}

void Hypergraph::remove_edge(std::size_t i) {
  if (i >= num_edges()) throw std::out_of_range("edge index out of range");
  const std::uint32_t begin = offsets_[i];
  const std::uint32_t len = offsets_[i + 1] - begin;
  pool_.erase(pool_.begin() + begin, pool_.begin() + begin + len);
  offsets_.erase(offsets_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  for (std::size_t j = i + 1; j < offsets_.size(); ++j) offsets_[j] -= len;
}

void Hypergraph::normalize() {
  const std::size_t m = num_edges();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  bool sorted = true;
  for (std::size_t i = 1; i < m && sorted; ++i) {
    sorted = canonical_less(edge(i - 1), edge(i));
  }
  if (sorted) return;
  std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return canonical_less(edge(a), edge(b));
  });
  std::vector<Vertex> pool;
  std::vector<std::uint32_t> offsets{0};
  pool.reserve(pool_.size());
  for (std::size_t k = 0; k < m; ++k) {
    auto e = edge(order[k]);
    if (k > 0 && spans_equal(e, edge(order[k - 1]))) continue;
    pool.insert(pool.end(), e.begin(), e.end());
    offsets.push_back(static_cast<std::uint32_t>(pool.size()));
  }
  pool_ = std::move(pool);
  offsets_ = std::move(offsets);
}

std::size_t DegreeProfile::up_to(std::size_t i) const {
  std::size_t total = 0;
  for (std::size_t j = 0; j <= i && j < by_size.size(); ++j) total += by_size[j];
  return total;
}

DegreeProfile degree_profile(const Hypergraph& h, Vertex v) {
  if (v < 1 || v > h.universe_size()) throw std::invalid_argument("vertex out of range");
  DegreeProfile p;
  p.by_size.assign(h.rank() + 1, 0);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    ++p.degree;
    ++p.by_size[e.size()];
    for (Vertex x : e) {
      if (x != v) p.neighbors.push_back(x);
    }
  }
  std::sort(p.neighbors.begin(), p.neighbors.end());
  p.neighbors.erase(std::unique(p.neighbors.begin(), p.neighbors.end()), p.neighbors.end());
  return p;
}

namespace {

// Marks members of `s`; throws when an id exceeds the universe.
std::vector<char> membership(const Hypergraph& h, std::span<const Vertex> s) {
  std::vector<char> in(h.universe_size() + 1, 0);
  for (Vertex v : s) {
    if (v < 1 || v > h.universe_size()) throw std::invalid_argument("vertex out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace

bool is_transversal(const Hypergraph& h, std::span<const Vertex> s) {
  const auto in = membership(h, s);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return in[v] != 0; })) return false;
  }
  return true;
}

bool is_minimal_transversal(const Hypergraph& h, std::span<const Vertex> s) {
  auto in = membership(h, s);
  // in[v]: 0 = outside S, 1 = in S without private edge yet, 2 = has one
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    Vertex hit = 0;
    std::size_t hits = 0;
    for (Vertex v : h.edge(i)) {
      if (in[v] != 0) {
        hit = v;
        if (++hits > 1) break;
      }
    }
    if (hits == 0) return false;
    if (hits == 1) in[hit] = 2;
  }
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return in[v] == 2; });
}

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

bool is_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos != std::string_view::npos && (line[pos] == 'c' || line[pos] == '#');
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(t);
  return tokens;
}

bool to_integer(const std::string& token, long long& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    if (!have_header) {
      if (is_blank(line)) continue;
      auto tokens = split(line);
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "hg" || !to_integer(tokens[2], n) ||
          !to_integer(tokens[3], m) || n < 0 || m < 0) {
        throw ParseError(line_no, "malformed header, expected 'p hg <n> <m>'");
      }
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      if (is_blank(line)) continue;
      throw ParseError(line_no, "more edge lines than the " + std::to_string(m) + " declared");
    }
    Edge e;
    for (const auto& token : split(line)) {
      long long value = 0;
      if (!to_integer(token, value)) {
        throw ParseError(line_no, "non-integer token '" + token + "'");
      }
      if (value < 1 || value > n) {
        throw ParseError(line_no, "vertex " + token + " out of range [1.." + std::to_string(n) + "]");
      }
      e.push_back(static_cast<Vertex>(value));
    }
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing 'p hg <n> <m>' header");
  if (static_cast<long long>(edges.size()) < m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edge lines, found " +
                                      std::to_string(edges.size()));
  }
  return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

void write_vertex_set(std::ostream& out, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out << ' ';
    out << s[i];
  }
  out << '\n';
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "p hg " << h.universe_size() << ' ' << h.num_edges() << '\n';
  for (std::size_t i = 0; i < h.num_edges(); ++i) write_vertex_set(out, h.edge(i));
}

Instance::Instance(const Hypergraph& original) : original_(&original), working_(original) {}

Instance::Instance(const Hypergraph& original, Hypergraph working, VertexSet partial)
    : original_(&original), working_(std::move(working)), partial_(std::move(partial)) {
  std::sort(partial_.begin(), partial_.end());
  for (Vertex v : partial_) {
    if (working_.has_vertex(v)) {
      throw std::invalid_argument("partial solution intersects the working vertex set");
    }
  }
}

void Instance::select(Vertex v) {
  working_.erase_vertex(v);
  working_.remove_edges_containing(v);
  partial_.insert(std::lower_bound(partial_.begin(), partial_.end(), v), v);
}

void Instance::discard(Vertex v) {
  working_.erase_vertex(v);
  working_.remove_vertex_from_edges(v);
}

void Instance::drop_edge(std::size_t index) { working_.remove_edge(index); }

Instance select(Instance inst, Vertex v) {
  inst.select(v);
  return inst;
}

Instance discard(Instance inst, Vertex v) {
  inst.discard(v);
  return inst;
}

}  // namespace mhs
