#include "nnto/sequences.hpp"

#include "nnto/error.hpp"

namespace nnto {

ReplayOutcome replay(const WeightedDag& dag, const std::vector<Step>& steps, bool require_nonnegative) {
  ReplayOutcome out;
  out.sets.reserve(steps.size());
  VertexSet marked;
  Weight weight;

  auto fail = [&](ReplayFailure::Kind kind, std::size_t index, std::string reason) {
    out.failure = ReplayFailure{kind, index, std::move(reason)};
    return out;
  };

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto [op, v] = steps[i];
    if (v >= dag.size()) return fail(ReplayFailure::Kind::IllegalStep, i, "vertex out of range");
    const std::string& name = dag.label(v);

    if (op == StepOp::Mark) {
      if (marked.contains(v)) return fail(ReplayFailure::Kind::IllegalStep, i, name + " is already marked");
      if (!dag.predecessors(v).subset_of(marked)) {
        return fail(ReplayFailure::Kind::IllegalStep, i, "marking " + name + " breaks inward closure");
      }
      marked.insert(v);
      weight += dag.weight(v);
    } else {
      if (!marked.contains(v)) return fail(ReplayFailure::Kind::IllegalStep, i, name + " is not marked");
      if (dag.successors(v).intersects(marked)) {
        return fail(ReplayFailure::Kind::IllegalStep, i, "unmarking " + name + " breaks inward closure");
      }
      marked.erase(v);
      weight -= dag.weight(v);
    }

    if (require_nonnegative && weight.sign() < 0) {
      return fail(ReplayFailure::Kind::NegativeSet, i, "marked set has weight " + weight.to_string());
    }
    out.sets.push_back(marked);
  }
  return out;
}

std::vector<VertexSet> replay_checked(const WeightedDag& dag, const std::vector<Step>& steps,
                                      bool require_nonnegative) {
  ReplayOutcome outcome = replay(dag, steps, require_nonnegative);
  if (outcome.failure) {
    const auto& f = *outcome.failure;
    const ErrorKind kind = f.kind == ReplayFailure::Kind::IllegalStep ? ErrorKind::IllegalStep : ErrorKind::NegativeSet;
    throw Error(kind, "step " + std::to_string(f.index) + ": " + f.reason);
  }
  return std::move(outcome.sets);
}

std::vector<VertexSet> replay_sequence(const WeightedDag& dag, const MarkUnmarkSequence& seq,
                                       bool require_nonnegative) {
  auto sets = replay_checked(dag, seq.steps, require_nonnegative);
  if (seq.terminal == Terminal::Full) {
    const VertexSet last = sets.empty() ? VertexSet{} : sets.back();
    if (last != dag.all()) throw Error(ErrorKind::NotFull, "sequence does not end with every vertex marked");
  }
  return sets;
}

std::vector<VertexSet> unmarked_sets_from(const std::vector<VertexSet>& marked) {
  std::vector<VertexSet> out;
  out.reserve(marked.size());
  VertexSet ever;  // M_1 u ... u M_{i-1}
  for (VertexSet m : marked) {
    out.push_back(ever - m);
    ever |= m;
  }
  return out;
}

std::vector<VertexSet> unmarked_sets(const WeightedDag& dag, const std::vector<Step>& steps) {
  const auto marked = replay_checked(dag, steps, false);
  auto unmarked = unmarked_sets_from(marked);
  for (std::size_t i = 0; i < marked.size(); ++i) {
    if (marked[i].intersects(unmarked[i]) || !is_outward_closed_rel(dag, unmarked[i], marked[i] | unmarked[i])) {
      throw Error(ErrorKind::InternalInvariantViolation,
                  "U_" + std::to_string(i + 1) + " is not (M u U)-outward closed");
    }
  }
  return unmarked;
}

Ordering induced_ordering(const WeightedDag& dag, const std::vector<Step>& steps) {
  const auto marked = replay_checked(dag, steps, false);
  if (dag.size() > 0 && (marked.empty() || marked.back() != dag.all())) {
    throw Error(ErrorKind::NotFull, "sequence does not end with every vertex marked");
  }
  std::vector<std::size_t> last_mark(dag.size(), 0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].op == StepOp::Mark) last_mark[steps[i].v] = i;
  }
  Ordering out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].op == StepOp::Mark && last_mark[steps[i].v] == i) out.order.push_back(steps[i].v);
  }
  return out;
}

bool is_normal_form(const std::vector<Step>& steps) noexcept {
  bool unmarking = false;
  for (const Step& s : steps) {
    if (s.op == StepOp::Unmark) {
      unmarking = true;
    } else if (unmarking) {
      return false;
    }
  }
  return true;
}

bool is_mark_only(const std::vector<Step>& steps) noexcept {
  for (const Step& s : steps) {
    if (s.op != StepOp::Mark) return false;
  }
  return true;
}

std::vector<Step> to_steps(const MarkSequence& order) {
  std::vector<Step> out;
  out.reserve(order.order.size());
  for (VertexId v : order.order) out.push_back(Step::mark(v));
  return out;
}

std::vector<Weight> set_weights(const WeightedDag& dag, const std::vector<Step>& steps) {
  const auto marked = replay_checked(dag, steps, false);
  std::vector<Weight> out;
  out.reserve(marked.size());
  for (VertexSet m : marked) out.push_back(dag.weight_of(m));
  return out;
}

}  // namespace nnto
