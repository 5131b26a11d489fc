#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nnto/rational.hpp"
#include "nnto/vertex_set.hpp"

namespace nnto {

struct VertexSpec {
  std::string label;
  Weight weight;
};

using EdgeSpec = std::pair<std::string, std::string>;

/// Vertex-weighted directed acyclic graph with at most kMaxVertices vertices.
/// Immutable once built; construct through build_dag.
class WeightedDag {
 public:
  WeightedDag() = default;

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Weight& weight(VertexId v) const { return weights_.at(v); }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  /// Edges as (tail, head), in insertion order.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }
  const std::vector<VertexId>& out_adj(VertexId v) const { return out_adj_.at(v); }
  const std::vector<VertexId>& in_adj(VertexId v) const { return in_adj_.at(v); }
  VertexSet predecessors(VertexId v) const { return pred_mask_.at(v); }
  VertexSet successors(VertexId v) const { return succ_mask_.at(v); }

  VertexSet all() const noexcept { return VertexSet::full(size()); }
  std::optional<VertexId> find(std::string_view label) const;
  /// Throws Error(DanglingEdge) for unknown labels.
  VertexId id_of(std::string_view label) const;

  Weight weight_of(VertexSet set) const;

 private:
  friend WeightedDag build_dag(const std::vector<VertexSpec>&, const std::vector<EdgeSpec>&);

  std::vector<std::string> labels_;
  std::vector<Weight> weights_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> out_adj_;
  std::vector<std::vector<VertexId>> in_adj_;
  std::vector<VertexSet> pred_mask_;
  std::vector<VertexSet> succ_mask_;
};

/// Validates and builds a DAG. Errors: CycleDetected, DuplicateLabel, DanglingEdge,
/// SelfLoop, DuplicateEdge, EmptyLabel, CapExceeded (more than 64 vertices).
WeightedDag build_dag(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges);

/// A sequence of vertices; "topological" and "non-negative" are properties
/// checked against a particular graph, not invariants of the type.
struct Ordering {
  std::vector<VertexId> order;

  friend bool operator==(const Ordering&, const Ordering&) = default;
};

bool is_inward_closed(const WeightedDag& dag, VertexSet set);

/// Y is X-outward closed: no edge leaves Y towards X \ Y.
/// Throws PreconditionViolated unless Y is a subset of X.
bool is_outward_closed_rel(const WeightedDag& dag, VertexSet y, VertexSet x);

/// Same relation read inward: no edge enters Y from X \ Y.
bool is_inward_closed_rel(const WeightedDag& dag, VertexSet y, VertexSet x);

/// Weights of the prefixes of lengths 1..n. Throws NotAPermutation.
std::vector<Weight> prefix_weights(const WeightedDag& dag, const Ordering& ordering);

struct OrderingVerdict {
  enum class Kind { Ok, NotTopological, NegativePrefix };
  Kind kind = Kind::Ok;
  std::size_t index = 0;  ///< 0-based position of the first violation

  bool ok() const noexcept { return kind == Kind::Ok; }
  friend bool operator==(const OrderingVerdict&, const OrderingVerdict&) = default;
};

std::string to_string(OrderingVerdict verdict);

/// Reports the earliest violation; at a single position a topology violation
/// is reported ahead of a negative prefix. Throws NotAPermutation.
OrderingVerdict validate_nn_topological_ordering(const WeightedDag& dag, const Ordering& ordering);

bool is_source_sink_only(const WeightedDag& dag);

/// Throws NotAPermutation unless ordering is a permutation of 0..n-1.
void require_permutation(const Ordering& ordering, std::size_t n);

}  // namespace nnto
