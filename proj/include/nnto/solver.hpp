#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nnto/graph.hpp"
#include "nnto/sequences.hpp"

namespace nnto {

struct SearchStats {
  std::uint64_t states_explored = 0;
  std::uint64_t memo_hits = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolverConfig {
  /// Practical vertex cap; the hard cap is kMaxVertices.
  std::size_t max_n = 24;
  /// Record marked sets proven infeasible. Turning this off only costs time.
  bool memoize = true;
};

struct OrderingSearch {
  std::optional<Ordering> witness;
  SearchStats stats;
};

struct SequenceSearch {
  std::optional<std::vector<Step>> witness;
  SearchStats stats;
};

/// Decides whether the graph has a non-negative topological ordering by a
/// depth-first extension of the marked set, candidates in ascending ordinal.
/// Throws CapExceeded.
OrderingSearch exists_nn_mark_sequence(const WeightedDag& dag, const SolverConfig& config = {});

/// Breadth-first search over non-negative inward-closed sets, moving by legal
/// mark and unmark steps from the empty set. Returns a shortest step list that
/// ends at target. Throws CapExceeded, InvalidTarget.
SequenceSearch mu_reachable(const WeightedDag& dag, VertexSet target, const SolverConfig& config = {});

/// Searches for a sequence in normal form (marks, then unmarks) ending at
/// target. Throws CapExceeded, InvalidTarget.
SequenceSearch find_normal_form_to_target(const WeightedDag& dag, VertexSet target, const SolverConfig& config = {});

/// All non-negative topological orderings in lexicographic order of ordinals,
/// at most limit of them. Requires n <= 10.
std::vector<Ordering> enumerate_nn_orderings(const WeightedDag& dag, std::size_t limit);

/// Weights scaled by the lcm of their denominators. Sign of every subset sum
/// is preserved, which is all the searches need. Throws Overflow.
std::vector<std::int64_t> integer_weights(const WeightedDag& dag);

}  // namespace nnto
