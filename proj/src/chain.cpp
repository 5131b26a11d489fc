#include "nnto/chain.hpp"

#include "nnto/error.hpp"
#include "nnto/oracles.hpp"
#include "nnto/reductions.hpp"
#include "nnto/solver.hpp"

namespace nnto {

nlohmann::json ChainReport::to_json() const {
  return {
      {"k", k},
      {"verdicts",
       {{"problem4_independent_set", independent_set},
        {"problem3_induced_extension", induced_extension},
        {"problem2_upm_extension", upm_extension},
        {"problem1_nn_ordering", nn_ordering}}},
      {"sizes", {{"gadget_class", gadget_class_size}, {"padded_class", padded_class_size}, {"dag_vertices", dag_vertices}}},
      {"witnesses_ok", witnesses_ok},
      {"witness_note", witness_note},
      {"agree", agree()},
  };
}

ChainReport verify_chain(const BipartiteGraph& bg, std::size_t k, const ChainOptions& options) {
  if (!bg.balanced()) throw Error(ErrorKind::Unbalanced, "chain verification needs a balanced graph");
  if (k < 1) throw Error(ErrorKind::BadK, "chain verification needs k >= 1");

  ChainReport report;
  report.k = k;
  auto note = [&](const std::string& what) {
    report.witnesses_ok = false;
    if (!report.witness_note.empty()) report.witness_note += "; ";
    report.witness_note += what;
  };

  // Problem 4
  const auto bis = decide_balanced_independent_set(bg, k);
  report.independent_set = bis.has_value();

  // 4 -> 3
  const BipartiteGraph gadget = bis_gadget(bg, k);
  const std::size_t big_k = k * k + k;
  report.gadget_class_size = gadget.size_a();
  const auto induced = decide_induced_extension(gadget, big_k);
  report.induced_extension = induced.has_value();

  if (bis) {
    const auto forward = bis_to_gadget_witness(bg, k, *bis);
    bool ok = forward.a.size() == big_k && forward.b.size() == big_k;
    for (std::size_t i = 0; ok && i < big_k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (gadget.has_edge(forward.witness.order_a[i], forward.witness.order_b[j])) ok = false;
      }
    }
    if (!ok) note("independent set did not lift to a gadget witness");
  }
  if (induced) {
    try {
      const auto back = extract_bis_from_subgraph(bg, k, {induced->a, induced->b, induced->witness});
      if (!is_balanced_independent_set(bg, back, k)) note("extracted set is not independent");
    } catch (const Error& e) {
      note(e.what());
    }
  }

  // 3 -> 2
  const std::size_t n = gadget.size_a();
  BipartiteGraph padded = add_isolated(gadget, 2 * n - big_k);
  report.padded_class_size = padded.size_a();
  const auto upm = decide_upm_extension(padded);
  report.upm_extension = upm.has_value();

  // 2 -> 1
  WeightedDag dag = upm_to_nn_dag(padded);
  if (options.corrupt_last_hop) {
    // The helper is the last vertex; without its unit of slack no ordering can start.
    std::vector<VertexSpec> vertices;
    for (VertexId v = 0; v < dag.size(); ++v) vertices.push_back({dag.label(v), dag.weight(v)});
    vertices.back().weight = Weight(0);
    std::vector<EdgeSpec> edges;
    for (const auto& [u, v] : dag.edges()) edges.emplace_back(dag.label(u), dag.label(v));
    dag = build_dag(vertices, edges);
  }
  report.dag_vertices = dag.size();
  SolverConfig config;
  config.max_n = options.max_n;
  const auto solved = exists_nn_mark_sequence(dag, config);
  report.nn_ordering = solved.witness.has_value();

  if (upm) {
    const auto ordering = triangular_witness_to_ordering(padded, *upm);
    if (!validate_nn_topological_ordering(dag, ordering).ok()) note("triangular witness did not give a valid ordering");
  }
  if (solved.witness) {
    try {
      ordering_to_triangular_witness(padded, *solved.witness);
    } catch (const Error& e) {
      note(e.what());
    }
  }
  return report;
}

}  // namespace nnto
