#include "nnto/graph.hpp"

#include <unordered_map>

#include "nnto/error.hpp"

namespace nnto {

std::optional<VertexId> WeightedDag::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

VertexId WeightedDag::id_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorKind::DanglingEdge, "unknown vertex '" + std::string(label) + "'");
}

Weight WeightedDag::weight_of(VertexSet set) const {
  Weight total;
  for (VertexId v : set) total += weights_.at(v);
  return total;
}

WeightedDag build_dag(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges) {
  if (vertices.size() > kMaxVertices) {
    throw Error(ErrorKind::CapExceeded,
                std::to_string(vertices.size()) + " vertices exceeds the hard cap of " + std::to_string(kMaxVertices));
  }

  WeightedDag dag;
  std::unordered_map<std::string, VertexId> index;
  for (const auto& spec : vertices) {
    if (spec.label.empty()) throw Error(ErrorKind::EmptyLabel, "vertex label must be non-empty");
    auto [it, inserted] = index.emplace(spec.label, static_cast<VertexId>(dag.labels_.size()));
    if (!inserted) throw Error(ErrorKind::DuplicateLabel, "duplicate vertex '" + spec.label + "'");
    dag.labels_.push_back(spec.label);
    dag.weights_.push_back(spec.weight);
  }

  const std::size_t n = vertices.size();
  dag.out_adj_.resize(n);
  dag.in_adj_.resize(n);
  dag.pred_mask_.resize(n);
  dag.succ_mask_.resize(n);

  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw Error(ErrorKind::DanglingEdge, "edge references unknown vertex '" + label + "'");
    return it->second;
  };

  for (const auto& [tail_label, head_label] : edges) {
    const VertexId tail = lookup(tail_label);
    const VertexId head = lookup(head_label);
    if (tail == head) throw Error(ErrorKind::SelfLoop, "self-loop on '" + tail_label + "'");
    if (dag.succ_mask_[tail].contains(head)) {
      throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + tail_label + " -> " + head_label);
    }
    dag.edges_.emplace_back(tail, head);
    dag.out_adj_[tail].push_back(head);
    dag.in_adj_[head].push_back(tail);
    dag.succ_mask_[tail].insert(head);
    dag.pred_mask_[head].insert(tail);
  }

  // Kahn's algorithm; anything left over lies on or behind a cycle.
  std::vector<std::size_t> indegree(n);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = dag.in_adj_[v].size();
  std::vector<VertexId> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(static_cast<VertexId>(v));
  }
  std::size_t emitted = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++emitted;
    for (VertexId w : dag.out_adj_[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (emitted != n) {
    std::string stuck;
    for (std::size_t v = 0; v < n; ++v) {
      if (indegree[v] > 0) {
        stuck = dag.labels_[v];
        break;
      }
    }
    throw Error(ErrorKind::CycleDetected, "edge relation has a cycle through '" + stuck + "'");
  }
  return dag;
}

bool is_inward_closed(const WeightedDag& dag, VertexSet set) {
  for (VertexId v : set) {
    if (!dag.predecessors(v).subset_of(set)) return false;
  }
  return true;
}

bool is_outward_closed_rel(const WeightedDag& dag, VertexSet y, VertexSet x) {
  if (!y.subset_of(x)) throw Error(ErrorKind::PreconditionViolated, "Y is not a subset of X");
  const VertexSet outside = x - y;
  for (VertexId u : y) {
    if (dag.successors(u).intersects(outside)) return false;
  }
  return true;
}

bool is_inward_closed_rel(const WeightedDag& dag, VertexSet y, VertexSet x) {
  if (!y.subset_of(x)) throw Error(ErrorKind::PreconditionViolated, "Y is not a subset of X");
  const VertexSet outside = x - y;
  for (VertexId v : y) {
    if (dag.predecessors(v).intersects(outside)) return false;
  }
  return true;
}

void require_permutation(const Ordering& ordering, std::size_t n) {
  if (ordering.order.size() != n) {
    throw Error(ErrorKind::NotAPermutation,
                "ordering has " + std::to_string(ordering.order.size()) + " entries, graph has " + std::to_string(n));
  }
  VertexSet seen;
  for (VertexId v : ordering.order) {
    if (v >= n || seen.contains(v)) throw Error(ErrorKind::NotAPermutation, "repeated or out-of-range vertex");
    seen.insert(v);
  }
}

std::vector<Weight> prefix_weights(const WeightedDag& dag, const Ordering& ordering) {
  require_permutation(ordering, dag.size());
  std::vector<Weight> out;
  out.reserve(ordering.order.size());
  Weight running;
  for (VertexId v : ordering.order) {
    running += dag.weight(v);
    out.push_back(running);
  }
  return out;
}

OrderingVerdict validate_nn_topological_ordering(const WeightedDag& dag, const Ordering& ordering) {
  require_permutation(ordering, dag.size());
  VertexSet prefix;
  Weight running;
  for (std::size_t k = 0; k < ordering.order.size(); ++k) {
    const VertexId v = ordering.order[k];
    if (!dag.predecessors(v).subset_of(prefix)) return {OrderingVerdict::Kind::NotTopological, k};
    prefix.insert(v);
    running += dag.weight(v);
    if (running.sign() < 0) return {OrderingVerdict::Kind::NegativePrefix, k};
  }
  return {};
}

std::string to_string(OrderingVerdict verdict) {
  switch (verdict.kind) {
    case OrderingVerdict::Kind::Ok: return "ok";
    case OrderingVerdict::Kind::NotTopological: return "NotTopological at index " + std::to_string(verdict.index);
    case OrderingVerdict::Kind::NegativePrefix: return "NegativePrefix at index " + std::to_string(verdict.index);
  }
  return "unknown";
}

bool is_source_sink_only(const WeightedDag& dag) {
  for (VertexId v = 0; v < dag.size(); ++v) {
    if (!dag.in_adj(v).empty() && !dag.out_adj(v).empty()) return false;
  }
  return true;
}

}  // namespace nnto
