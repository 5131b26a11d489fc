#include "nnto/reductions.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "nnto/error.hpp"

namespace nnto {

namespace {

std::unordered_set<std::string> all_labels(const BipartiteGraph& bg) {
  std::unordered_set<std::string> out(bg.a_labels().begin(), bg.a_labels().end());
  out.insert(bg.b_labels().begin(), bg.b_labels().end());
  return out;
}

void require_balanced(const BipartiteGraph& bg) {
  if (!bg.balanced()) throw Error(ErrorKind::Unbalanced, "bipartite graph must be balanced");
}

}  // namespace

std::string helper_label(const BipartiteGraph& bg) {
  const auto used = all_labels(bg);
  std::string label = kHelperLabel;
  for (std::size_t suffix = 1; used.contains(label); ++suffix) label = std::string(kHelperLabel) + "_" + std::to_string(suffix);
  return label;
}

WeightedDag upm_to_nn_dag(const BipartiteGraph& bg) {
  require_balanced(bg);
  std::vector<VertexSpec> vertices;
  for (const auto& a : bg.a_labels()) vertices.push_back({a, Weight(-1)});
  for (const auto& b : bg.b_labels()) vertices.push_back({b, Weight(1)});
  vertices.push_back({helper_label(bg), Weight(1)});

  std::vector<EdgeSpec> edges;
  for (auto [a, b] : bg.edges()) edges.emplace_back(bg.a_labels()[a], bg.b_labels()[b]);
  return build_dag(vertices, edges);
}

TriangularWitness ordering_to_triangular_witness(const BipartiteGraph& bg, const Ordering& ordering) {
  const WeightedDag dag = upm_to_nn_dag(bg);
  OrderingVerdict verdict;
  try {
    verdict = validate_nn_topological_ordering(dag, ordering);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidOrdering, e.what());
  }
  if (!verdict.ok()) throw Error(ErrorKind::InvalidOrdering, to_string(verdict));

  const std::size_t n = bg.size_a();
  TriangularWitness w;
  for (VertexId v : ordering.order) {
    if (v < n) {
      w.order_a.push_back(v);
    } else if (v < 2 * n) {
      w.order_b.push_back(v - n);
    }
  }
  // A non-negative prefix ending at the i-th A-vertex holds at least i-1
  // B-vertices, so every b_j with j < i precedes a_i and cannot be its head.
  if (!is_triangular_witness(bg, w)) {
    throw Error(ErrorKind::InternalInvariantViolation, "non-negative ordering did not yield a triangular witness");
  }
  return w;
}

Ordering triangular_witness_to_ordering(const BipartiteGraph& bg, const TriangularWitness& w) {
  if (!is_triangular_witness(bg, w)) throw Error(ErrorKind::InvalidWitness, "lower triangle is not edge-free");
  const std::size_t n = bg.size_a();
  Ordering out;
  out.order.push_back(static_cast<VertexId>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    out.order.push_back(static_cast<VertexId>(w.order_a[i]));
    out.order.push_back(static_cast<VertexId>(n + w.order_b[i]));
  }
  return out;
}

BipartiteGraph add_isolated(const BipartiteGraph& bg, std::size_t n_target) {
  require_balanced(bg);
  if (n_target < bg.size_a()) {
    throw Error(ErrorKind::BadTarget, "target class size " + std::to_string(n_target) + " is below " +
                                          std::to_string(bg.size_a()));
  }
  auto used = all_labels(bg);
  auto fresh = [&](const char* prefix, std::size_t& counter) {
    std::string label;
    do {
      label = std::string(prefix) + std::to_string(++counter);
    } while (used.contains(label));
    used.insert(label);
    return label;
  };

  auto a = bg.a_labels();
  auto b = bg.b_labels();
  std::size_t next_a = 0;
  std::size_t next_b = 0;
  while (a.size() < n_target) a.push_back(fresh("~a", next_a));
  while (b.size() < n_target) b.push_back(fresh("~b", next_b));
  return BipartiteGraph::from_indices(std::move(a), std::move(b), bg.edges());
}

BipartiteGraph bis_gadget(const BipartiteGraph& bg, std::size_t k) {
  if (k < 1) throw Error(ErrorKind::BadK, "gadget needs k >= 1");
  const std::size_t copies = k + 1;
  if (copies * std::max(bg.size_a(), bg.size_b()) > kMaxVertices) {
    throw Error(ErrorKind::CapExceeded, "gadget class would exceed " + std::to_string(kMaxVertices) + " vertices");
  }

  std::vector<std::string> a;
  std::vector<std::string> b;
  for (const auto& label : bg.a_labels()) {
    for (std::size_t c = 1; c <= copies; ++c) a.push_back(label + "#" + std::to_string(c));
  }
  for (const auto& label : bg.b_labels()) {
    for (std::size_t c = 1; c <= copies; ++c) b.push_back(label + "#" + std::to_string(c));
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t ga = 0; ga < a.size(); ++ga) {
    const auto [u, i] = gadget_vertex(ga, k);
    for (std::size_t gb = 0; gb < b.size(); ++gb) {
      const auto [v, j] = gadget_vertex(gb, k);
      if (i < j || bg.has_edge(u, v)) edges.emplace_back(ga, gb);
    }
  }
  return BipartiteGraph::from_indices(std::move(a), std::move(b), edges);
}

GadgetSelection bis_to_gadget_witness(const BipartiteGraph& bg, std::size_t k, const IndependentPair& pair) {
  if (pair.a.size() != k || pair.b.size() != k) throw Error(ErrorKind::WrongSize, "independent set must have k per class");
  if (!is_balanced_independent_set(bg, pair, k)) throw Error(ErrorKind::NotIndependent, "sets are joined by an edge");

  GadgetSelection out;
  for (std::size_t c = 1; c <= k + 1; ++c) {
    for (VertexId u : pair.a) {
      const auto idx = gadget_index(u, c, k);
      out.a.insert(static_cast<VertexId>(idx));
      out.witness.order_a.push_back(idx);
    }
    for (VertexId v : pair.b) {
      const auto idx = gadget_index(v, c, k);
      out.b.insert(static_cast<VertexId>(idx));
      out.witness.order_b.push_back(idx);
    }
  }
  return out;
}

IndependentPair extract_bis_from_subgraph(const BipartiteGraph& bg, std::size_t k, const GadgetSelection& selection) {
  if (k < 1) throw Error(ErrorKind::BadK, "k must be at least 1");
  const std::size_t per_class = k * k + k;
  if (selection.a.size() != per_class || selection.b.size() != per_class) {
    throw Error(ErrorKind::WrongSize, "selection must hold k^2+k vertices per class");
  }

  // Validate the witness against the gadget restricted to the selection.
  const BipartiteGraph gadget = bis_gadget(bg, k);
  const auto& wa = selection.witness.order_a;
  const auto& wb = selection.witness.order_b;
  auto covers = [](const std::vector<std::size_t>& order, VertexSet members) {
    VertexSet seen;
    for (std::size_t i : order) {
      if (i >= kMaxVertices || seen.contains(static_cast<VertexId>(i))) return false;
      seen.insert(static_cast<VertexId>(i));
    }
    return seen == members;
  };
  if (!covers(wa, selection.a) || !covers(wb, selection.b)) {
    throw Error(ErrorKind::InvalidWitness, "witness orders do not match the selection");
  }
  for (std::size_t i = 0; i < per_class; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gadget.has_edge(wa[i], wb[j])) throw Error(ErrorKind::InvalidWitness, "lower triangle is not edge-free");
    }
  }

  // Read both orders back to front: then no A-vertex is adjacent to any
  // B-vertex at a later position.
  std::vector<GadgetVertex> a_seq;
  std::vector<GadgetVertex> b_seq;
  for (auto it = wa.rbegin(); it != wa.rend(); ++it) a_seq.push_back(gadget_vertex(*it, k));
  for (auto it = wb.rbegin(); it != wb.rend(); ++it) b_seq.push_back(gadget_vertex(*it, k));

  // Pivot: the position where the k-th distinct base first shows up. Its
  // predecessors span exactly k-1 bases.
  std::vector<bool> base_seen(bg.size_a(), false);
  std::size_t distinct = 0;
  std::optional<std::size_t> pivot;
  IndependentPair out;
  for (std::size_t p = 0; p < a_seq.size(); ++p) {
    const std::size_t base = a_seq[p].base;
    if (base_seen[base]) continue;
    base_seen[base] = true;
    out.a.insert(static_cast<VertexId>(base));
    if (++distinct == k) {
      pivot = p;
      break;
    }
  }
  if (!pivot) throw Error(ErrorKind::ExtractionFailed, "fewer than k distinct bases on the A side");

  // Every B-vertex after the pivot has copy index at most the smallest copy
  // before it; find k of them sharing one copy index.
  std::map<std::size_t, std::vector<std::size_t>> by_copy;
  for (std::size_t q = *pivot + 1; q < b_seq.size(); ++q) by_copy[b_seq[q].copy].push_back(b_seq[q].base);
  bool found = false;
  for (const auto& [copy, bases] : by_copy) {
    if (bases.size() < k) continue;
    for (std::size_t i = 0; i < k; ++i) out.b.insert(static_cast<VertexId>(bases[i]));
    found = true;
    break;
  }
  if (!found) throw Error(ErrorKind::ExtractionFailed, "no copy index is shared by k B-vertices after the pivot");

  if (!is_balanced_independent_set(bg, out, k)) {
    throw Error(ErrorKind::ExtractionFailed, "extracted sets are not a balanced independent set");
  }
  return out;
}

BoolMatrix bipartite_to_matrix(const BipartiteGraph& bg) {
  require_balanced(bg);
  BoolMatrix m(bg.size_a());
  for (auto [a, b] : bg.edges()) m.set(a, b, true);
  return m;
}

BipartiteGraph matrix_to_bipartite(const BoolMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  for (std::size_t i = 1; i <= n; ++i) {
    rows.push_back("r" + std::to_string(i));
    cols.push_back("c" + std::to_string(i));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (m.at(r, c)) edges.emplace_back(r, c);
    }
  }
  return BipartiteGraph::from_indices(std::move(rows), std::move(cols), edges);
}

}  // namespace nnto
