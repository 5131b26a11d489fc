#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nnto/graph.hpp"

namespace nnto {

enum class StepOp { Mark, Unmark };

struct Step {
  StepOp op = StepOp::Mark;
  VertexId v = 0;

  static Step mark(VertexId v) { return {StepOp::Mark, v}; }
  static Step unmark(VertexId v) { return {StepOp::Unmark, v}; }

  friend bool operator==(const Step&, const Step&) = default;
};

enum class Terminal { Full, Partial };

/// A Full sequence must end with every vertex marked; a Partial one may stop
/// at any inward-closed set.
struct MarkUnmarkSequence {
  std::vector<Step> steps;
  Terminal terminal = Terminal::Full;

  friend bool operator==(const MarkUnmarkSequence&, const MarkUnmarkSequence&) = default;
};

/// Mark-only sequence, i.e. the order in which vertices are marked.
using MarkSequence = Ordering;

struct ReplayFailure {
  enum class Kind { IllegalStep, NegativeSet };
  Kind kind = Kind::IllegalStep;
  std::size_t index = 0;  ///< 0-based step index
  std::string reason;
};

struct ReplayOutcome {
  /// Marked sets after each successfully replayed step.
  std::vector<VertexSet> sets;
  std::optional<ReplayFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

/// Replays steps from the empty set and stops at the first illegal step:
/// marking a marked vertex, unmarking an unmarked one, leaving the marked set
/// not inward closed, or (when required) giving it negative weight.
ReplayOutcome replay(const WeightedDag& dag, const std::vector<Step>& steps, bool require_nonnegative);

/// As replay, but throws Error(IllegalStep) / Error(NegativeSet) on failure.
std::vector<VertexSet> replay_checked(const WeightedDag& dag, const std::vector<Step>& steps,
                                      bool require_nonnegative);

/// Replays and also enforces the terminal flag (Full => final set is V(G)).
/// Throws as replay_checked, or NotFull.
std::vector<VertexSet> replay_sequence(const WeightedDag& dag, const MarkUnmarkSequence& seq,
                                       bool require_nonnegative);

/// U_i = (M_1 u ... u M_{i-1}) \ M_i for every step i: the vertices that were
/// marked earlier and are not marked now. Checks that each U_i is
/// (M_i u U_i)-outward closed and disjoint from M_i.
std::vector<VertexSet> unmarked_sets(const WeightedDag& dag, const std::vector<Step>& steps);

/// Same computation from already-replayed marked sets.
std::vector<VertexSet> unmarked_sets_from(const std::vector<VertexSet>& marked);

/// Vertices ordered by the last step that marks them. Throws NotFull unless
/// the steps end with every vertex marked.
Ordering induced_ordering(const WeightedDag& dag, const std::vector<Step>& steps);

/// No Mark step follows an Unmark step.
bool is_normal_form(const std::vector<Step>& steps) noexcept;

bool is_mark_only(const std::vector<Step>& steps) noexcept;

std::vector<Step> to_steps(const MarkSequence& order);

/// Replays steps and reports the weight of each marked set.
std::vector<Weight> set_weights(const WeightedDag& dag, const std::vector<Step>& steps);

}  // namespace nnto
