#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nnto/graph.hpp"
#include "nnto/sequences.hpp"
#include "nnto/solver.hpp"

namespace nnto {

/// Largest U_i whose subsets are enumerated.
inline constexpr std::size_t kMaxEnumeratedUnmarked = 24;

/// A nonempty X inside U_step that is U_step-outward closed with w(X) <= 0.
/// Removing every earlier step that touches X yields a strictly shorter
/// sequence that is still legal and no less non-negative.
struct Shortening {
  std::size_t step = 0;  ///< 1-based: X lies in U_step, steps 1..step-1 get filtered
  VertexSet x;

  friend bool operator==(const Shortening&, const Shortening&) = default;
};

/// Vertices in order of their first marking; steps that unmark or re-mark a
/// vertex are skipped. Every prefix is inward closed but non-negativity is not
/// implied. Throws replay errors.
MarkSequence compress_first_markings(const WeightedDag& dag, const std::vector<Step>& steps);

/// First shortening by (smallest step, smallest |X|, lexicographic X), which
/// makes X inclusion-minimal. Throws CapExceeded if some |U_i| exceeds 24.
std::optional<Shortening> find_shortening(const WeightedDag& dag, const std::vector<Step>& steps);

/// Deletes every step before s.step whose vertex lies in s.x and re-validates
/// the result (legal, same final set, non-negative when the input was,
/// shorter). Throws InternalInvariantViolation if any of that fails.
std::vector<Step> apply_shortening(const WeightedDag& dag, const std::vector<Step>& steps, const Shortening& s);

struct MarkSequenceResult {
  MarkSequence order;
  std::size_t shortenings = 0;
  /// The sequence the compression was finally applied to.
  std::vector<Step> shortened;
};

/// Turns a full non-negative mark-unmark sequence into a non-negative mark
/// sequence: shorten until no shortening exists, then compress. Throws replay
/// errors, NotFull, InternalInvariantViolation.
MarkSequenceResult to_mark_sequence(const WeightedDag& dag, const std::vector<Step>& steps);

struct NormalFormResult {
  std::vector<Step> steps;
  std::size_t shortenings = 0;
  /// True when the constructed candidate failed validation and the exact
  /// search produced the answer.
  bool used_fallback = false;
  std::vector<Step> shortened;
};

/// Rewrites a non-negative partial sequence into one where every mark
/// precedes every unmark and the final marked set is unchanged. Throws replay
/// errors, PropositionGap if even the exact search finds nothing.
NormalFormResult normalize_partial(const WeightedDag& dag, const std::vector<Step>& steps,
                                   const SolverConfig& fallback = {});

struct Claim1Violation {
  std::size_t step = 0;  ///< 1-based
  VertexSet x;

  friend bool operator==(const Claim1Violation&, const Claim1Violation&) = default;
};

/// Every (i, X) with X nonempty, U_i-outward closed and w(X) <= 0. An empty
/// report certifies that all such sets have strictly positive weight.
std::vector<Claim1Violation> check_claim1(const WeightedDag& dag, const std::vector<Step>& steps);

}  // namespace nnto
