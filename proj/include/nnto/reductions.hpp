#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nnto/bipartite.hpp"
#include "nnto/graph.hpp"
#include "nnto/oracles.hpp"

namespace nnto {

/// Label of the extra isolated weight-1 vertex added by upm_to_nn_dag.
inline constexpr const char* kHelperLabel = "v\xe2\x8b\x86";  // "v⋆"

/// Picks kHelperLabel, or kHelperLabel + "_1", "_2", ... on collision.
std::string helper_label(const BipartiteGraph& bg);

/// Source/sink DAG for the unique-perfect-matching extension question: edges
/// point from A to B, A-vertices weigh -1, B-vertices +1, plus one isolated
/// helper of weight +1. Ordinals: A as 0..n-1, B as n..2n-1, helper 2n.
/// Throws Unbalanced.
WeightedDag upm_to_nn_dag(const BipartiteGraph& bg);

/// Reads the class orders off a non-negative topological ordering of
/// upm_to_nn_dag(bg). Throws InvalidOrdering.
TriangularWitness ordering_to_triangular_witness(const BipartiteGraph& bg, const Ordering& ordering);

/// helper, a_1, b_1, ..., a_n, b_n. Throws InvalidWitness.
Ordering triangular_witness_to_ordering(const BipartiteGraph& bg, const TriangularWitness& w);

/// Pads both classes with isolated vertices up to n_target each. New labels
/// are "~a1", "~a2", ... and "~b1", ..., skipping any label already in use.
/// Throws Unbalanced, BadTarget.
BipartiteGraph add_isolated(const BipartiteGraph& bg, std::size_t n_target);

/// Vertex (base, copy) of the independent-set gadget, 1 <= copy <= k+1.
struct GadgetVertex {
  std::size_t base = 0;  ///< class index in the source graph
  std::size_t copy = 1;

  friend bool operator==(const GadgetVertex&, const GadgetVertex&) = default;
};

/// Gadget class index of (base, copy): bases major, copies minor.
inline std::size_t gadget_index(std::size_t base, std::size_t copy, std::size_t k) {
  return base * (k + 1) + (copy - 1);
}
inline GadgetVertex gadget_vertex(std::size_t index, std::size_t k) { return {index / (k + 1), index % (k + 1) + 1}; }

/// k+1 copies of every vertex, labelled "base#copy"; (u,i) and (v,j) are
/// adjacent iff i < j or uv is an edge of bg. Throws BadK, CapExceeded.
BipartiteGraph bis_gadget(const BipartiteGraph& bg, std::size_t k);

struct GadgetSelection {
  VertexSet a;  ///< gadget A-indices
  VertexSet b;  ///< gadget B-indices
  TriangularWitness witness;  ///< over gadget indices
};

/// All k+1 copies of a balanced independent set, ordered by copy index
/// (ascending on both sides) so every gadget edge among them sits on or above
/// the diagonal. Throws WrongSize, NotIndependent.
GadgetSelection bis_to_gadget_witness(const BipartiteGraph& bg, std::size_t k, const IndependentPair& pair);

/// Recovers a balanced independent set of size 2k in bg from a triangular
/// ordering of k^2+k gadget vertices per class, by the pigeonhole argument
/// run with direct counting. Throws InvalidWitness, WrongSize,
/// ExtractionFailed.
IndependentPair extract_bis_from_subgraph(const BipartiteGraph& bg, std::size_t k, const GadgetSelection& selection);

/// Rows follow A in class order, columns follow B in class order.
BoolMatrix bipartite_to_matrix(const BipartiteGraph& bg);

/// Rows become A-vertices "r1".."rn", columns B-vertices "c1".."cn".
BipartiteGraph matrix_to_bipartite(const BoolMatrix& m);

}  // namespace nnto
