#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nnto/bipartite.hpp"

namespace nnto {

/// Class orderings a_1..a_n and b_1..b_n (as class indices) with no edge
/// a_i b_j for j < i: the part strictly below the diagonal is empty.
struct TriangularWitness {
  std::vector<std::size_t> order_a;
  std::vector<std::size_t> order_b;

  friend bool operator==(const TriangularWitness&, const TriangularWitness&) = default;
};

/// Witness plus the diagonal pairs (a_i, b_i), all of which are edges.
struct UniquePmCertificate {
  TriangularWitness witness;
  std::vector<std::pair<std::size_t, std::size_t>> matching;
};

/// Orders are permutations of the two classes and the lower triangle is edge-free.
bool is_triangular_witness(const BipartiteGraph& bg, const TriangularWitness& w);

/// Throws Unbalanced, CapExceeded (n > 12).
std::uint64_t count_perfect_matchings(const BipartiteGraph& bg);

/// Peels off, from the last position backwards, an A-vertex with exactly one
/// remaining neighbour (smallest label first). Succeeds iff the perfect
/// matching exists and is unique. Throws Unbalanced, CapExceeded (n > 32).
std::optional<UniquePmCertificate> unique_pm_ordering(const BipartiteGraph& bg);

/// Decides whether edges can be added to bg to give a unique perfect matching,
/// through the equivalent question of a triangular ordering. Positions are
/// filled from n down to 1 with memoized dead ends. Throws Unbalanced,
/// CapExceeded (n > 12).
std::optional<TriangularWitness> decide_upm_extension(const BipartiteGraph& bg);

struct Permutations {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Row and column orders with m[rows[i]][cols[j]] == 0 whenever i > j.
/// Throws CapExceeded (n > 12).
std::optional<Permutations> decide_triangularizable(const BoolMatrix& m);

struct InducedExtension {
  VertexSet a;  ///< chosen A-indices
  VertexSet b;  ///< chosen B-indices
  TriangularWitness witness;  ///< over indices of bg, restricted to a and b
};

/// First (lexicographic) pair of k-subsets whose induced subgraph admits a
/// triangular ordering. Throws Unbalanced, CapExceeded (n > 9), BadK.
std::optional<InducedExtension> decide_induced_extension(const BipartiteGraph& bg, std::size_t k);

struct IndependentPair {
  VertexSet a;
  VertexSet b;

  friend bool operator==(const IndependentPair&, const IndependentPair&) = default;
};

/// First (lexicographic) pair of k-subsets of A and B with no edge between
/// them. Throws BadK, CapExceeded (class larger than 16).
std::optional<IndependentPair> decide_balanced_independent_set(const BipartiteGraph& bg, std::size_t k);

/// No edge joins a and b, and both have size k.
bool is_balanced_independent_set(const BipartiteGraph& bg, const IndependentPair& pair, std::size_t k);

}  // namespace nnto
