#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nnto/vertex_set.hpp"

namespace nnto {

/// Bipartite graph with classes A and B, each of at most 64 vertices. Vertices
/// are referred to by their index within their class. Labels are unique across
/// both classes.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Errors: EmptyLabel, DuplicateLabel, DanglingEdge (unknown or same-class
  /// endpoint), DuplicateEdge, CapExceeded.
  BipartiteGraph(std::vector<std::string> a_labels, std::vector<std::string> b_labels,
                 const std::vector<std::pair<std::string, std::string>>& edges);
  /// Edges by class index.
  static BipartiteGraph from_indices(std::vector<std::string> a_labels, std::vector<std::string> b_labels,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size_a() const noexcept { return a_.size(); }
  std::size_t size_b() const noexcept { return b_.size(); }
  bool balanced() const noexcept { return a_.size() == b_.size(); }

  const std::vector<std::string>& a_labels() const noexcept { return a_; }
  const std::vector<std::string>& b_labels() const noexcept { return b_; }

  bool has_edge(std::size_t a, std::size_t b) const { return neighbors(a).contains(static_cast<VertexId>(b)); }
  /// B-indices adjacent to A-vertex a.
  VertexSet neighbors(std::size_t a) const { return adj_.at(a); }
  std::size_t edge_count() const noexcept;
  /// (a, b) index pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Subgraph induced by the given A- and B-index sets; labels kept, class
  /// order follows ascending index.
  BipartiteGraph induced(VertexSet a_keep, VertexSet b_keep) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<std::string> a_;
  std::vector<std::string> b_;
  std::vector<VertexSet> adj_;
};

/// Square 0/1 matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}
  /// Throws PreconditionViolated unless rows form a square 0/1 matrix.
  explicit BoolMatrix(const std::vector<std::vector<int>>& rows);

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t row, std::size_t col) const { return cells_.at(row * n_ + col) != 0; }
  void set(std::size_t row, std::size_t col, bool value) { cells_.at(row * n_ + col) = value ? 1 : 0; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

}  // namespace nnto
