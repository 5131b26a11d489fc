#include "nnto/normalize.hpp"

#include <algorithm>
#include <unordered_set>

#include "nnto/error.hpp"

namespace nnto {

namespace {

/// Calls visit(subset) for every nonempty subset of members, by ascending
/// size and then lexicographically by ordinal. Stops early when visit returns true.
template <typename Visit>
bool for_each_subset_by_size(const std::vector<VertexId>& members, Visit&& visit) {
  const std::size_t n = members.size();
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= n; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      VertexSet subset;
      for (std::size_t i : pick) subset.insert(members[i]);
      if (visit(subset)) return true;

      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

bool is_shortening_candidate(const WeightedDag& dag, VertexSet x, VertexSet unmarked) {
  return is_outward_closed_rel(dag, x, unmarked) && dag.weight_of(x).sign() <= 0;
}

void check_enumeration_cap(const std::vector<VertexSet>& unmarked) {
  for (std::size_t i = 0; i < unmarked.size(); ++i) {
    if (unmarked[i].size() > kMaxEnumeratedUnmarked) {
      throw Error(ErrorKind::CapExceeded, "U_" + std::to_string(i + 1) + " has " + std::to_string(unmarked[i].size()) +
                                              " vertices, subset enumeration is capped at " +
                                              std::to_string(kMaxEnumeratedUnmarked));
    }
  }
}

std::vector<Step> shorten_to_exhaustion(const WeightedDag& dag, std::vector<Step> steps, std::size_t& count) {
  while (auto s = find_shortening(dag, steps)) {
    steps = apply_shortening(dag, steps, *s);
    ++count;
  }
  return steps;
}

}  // namespace

MarkSequence compress_first_markings(const WeightedDag& dag, const std::vector<Step>& steps) {
  replay_checked(dag, steps, false);
  MarkSequence out;
  VertexSet seen;
  for (const Step& s : steps) {
    if (s.op == StepOp::Mark && !seen.contains(s.v)) {
      seen.insert(s.v);
      out.order.push_back(s.v);
    }
  }
  return out;
}

std::optional<Shortening> find_shortening(const WeightedDag& dag, const std::vector<Step>& steps) {
  const auto unmarked = unmarked_sets_from(replay_checked(dag, steps, false));
  check_enumeration_cap(unmarked);

  // The answer for a given U depends only on U, so repeated sets are skipped.
  std::unordered_set<std::uint64_t> cleared;
  for (std::size_t i = 0; i < unmarked.size(); ++i) {
    const VertexSet u = unmarked[i];
    if (u.empty() || cleared.contains(u.bits())) continue;
    std::optional<VertexSet> hit;
    for_each_subset_by_size(u.members(), [&](VertexSet x) {
      if (!is_shortening_candidate(dag, x, u)) return false;
      hit = x;
      return true;
    });
    if (hit) return Shortening{i + 1, *hit};
    cleared.insert(u.bits());
  }
  return std::nullopt;
}

std::vector<Step> apply_shortening(const WeightedDag& dag, const std::vector<Step>& steps, const Shortening& s) {
  const auto outcome = replay(dag, steps, false);
  if (!outcome.ok()) throw Error(ErrorKind::IllegalStep, outcome.failure->reason);
  const auto unmarked = unmarked_sets_from(outcome.sets);
  if (s.step == 0 || s.step > steps.size() || s.x.empty() || !s.x.subset_of(unmarked[s.step - 1])) {
    throw Error(ErrorKind::PreconditionViolated, "shortening does not match this sequence");
  }

  // Step `s.step` itself may be the unmarking that put part of X into U, so
  // the filter is inclusive.
  std::vector<Step> out;
  out.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i < s.step && s.x.contains(steps[i].v)) continue;
    out.push_back(steps[i]);
  }

  const bool input_nonnegative = replay(dag, steps, true).ok();
  const auto shortened = replay(dag, out, input_nonnegative);
  auto broken = [&](const std::string& what) {
    return Error(ErrorKind::InternalInvariantViolation, "shortening at step " + std::to_string(s.step) + ": " + what);
  };
  if (!shortened.ok()) throw broken(shortened.failure->reason);
  const VertexSet before = outcome.sets.empty() ? VertexSet{} : outcome.sets.back();
  const VertexSet after = shortened.sets.empty() ? VertexSet{} : shortened.sets.back();
  if (before != after) throw broken("final marked set changed");
  if (out.size() + 2 > steps.size()) throw broken("fewer than two steps removed");
  return out;
}

MarkSequenceResult to_mark_sequence(const WeightedDag& dag, const std::vector<Step>& steps) {
  replay_sequence(dag, MarkUnmarkSequence{steps, Terminal::Full}, true);

  MarkSequenceResult out;
  out.shortened = shorten_to_exhaustion(dag, steps, out.shortenings);
  out.order = compress_first_markings(dag, out.shortened);

  // With no shortening left every nonempty U_j has positive weight, so each
  // compressed prefix M_j u U_j is non-negative.
  const auto verdict = validate_nn_topological_ordering(dag, out.order);
  if (!verdict.ok()) {
    throw Error(ErrorKind::InternalInvariantViolation, "compressed sequence fails: " + to_string(verdict));
  }
  return out;
}

NormalFormResult normalize_partial(const WeightedDag& dag, const std::vector<Step>& steps,
                                   const SolverConfig& fallback) {
  const auto marked = replay_checked(dag, steps, true);
  const VertexSet target = marked.empty() ? VertexSet{} : marked.back();

  NormalFormResult out;
  out.shortened = shorten_to_exhaustion(dag, steps, out.shortenings);
  const auto& shortened = out.shortened;

  // Marks in first-marking order, then unmarks of everything not in the
  // target, in order of each vertex's first unmarking.
  std::vector<Step> candidate = to_steps(compress_first_markings(dag, shortened));
  VertexSet unmarked_once;
  for (const Step& s : shortened) {
    if (s.op == StepOp::Unmark && !target.contains(s.v) && !unmarked_once.contains(s.v)) {
      unmarked_once.insert(s.v);
      candidate.push_back(Step::unmark(s.v));
    }
  }

  const auto check = replay(dag, candidate, true);
  const VertexSet reached = check.sets.empty() ? VertexSet{} : check.sets.back();
  if (check.ok() && reached == target && is_normal_form(candidate)) {
    out.steps = std::move(candidate);
    return out;
  }

  auto search = find_normal_form_to_target(dag, target, fallback);
  if (!search.witness) {
    throw Error(ErrorKind::PropositionGap, "no normal-form sequence reaches the target marked set");
  }
  out.steps = std::move(*search.witness);
  out.used_fallback = true;
  return out;
}

std::vector<Claim1Violation> check_claim1(const WeightedDag& dag, const std::vector<Step>& steps) {
  const auto unmarked = unmarked_sets_from(replay_checked(dag, steps, false));
  check_enumeration_cap(unmarked);
  std::vector<Claim1Violation> report;
  for (std::size_t i = 0; i < unmarked.size(); ++i) {
    const VertexSet u = unmarked[i];
    if (u.empty()) continue;
    for_each_subset_by_size(u.members(), [&](VertexSet x) {
      if (is_shortening_candidate(dag, x, u)) report.push_back({i + 1, x});
      return false;
    });
  }
  return report;
}

}  // namespace nnto
