#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhs {

/// 1-based vertex identifier.
using Vertex = std::uint32_t;

/// Duplicate-free vertex list in ascending order.
using VertexSet = std::vector<Vertex>;
using Edge = VertexSet;

/// Receives each enumerated minimal transversal exactly once. The span is
/// only valid for the duration of the call.
using TransversalSink = std::function<void(std::span<const Vertex>)>;

struct SearchStats {
  std::uint64_t nodes = 0;      // recursive calls
  std::uint64_t leaves = 0;     // halting-rule executions
  std::uint64_t max_depth = 0;
  std::uint64_t outputs = 0;    // emitted transversals

  SearchStats& operator+=(const SearchStats& other) {
    nodes += other.nodes;
    leaves += other.leaves;
    outputs += other.outputs;
    if (other.max_depth > max_depth) max_depth = other.max_depth;
    return *this;
  }
};

/// Malformed hypergraph or weights text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The instance rank is outside what the selected engine handles.
class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal algorithmic invariant was breached.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mhs
