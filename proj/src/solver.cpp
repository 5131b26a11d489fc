#include "nnto/solver.hpp"

#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "nnto/error.hpp"

namespace nnto {

namespace {

using Clock = std::chrono::steady_clock;

void check_cap(const WeightedDag& dag, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxVertices);
  if (dag.size() > limit) {
    throw Error(ErrorKind::CapExceeded,
                std::to_string(dag.size()) + " vertices exceeds the solver cap of " + std::to_string(limit));
  }
}

std::int64_t sum_of(const std::vector<std::int64_t>& weights, VertexSet set) {
  std::int64_t total = 0;
  for (VertexId v : set) total += weights[v];
  return total;
}

void check_target(const WeightedDag& dag, VertexSet target) {
  if (!target.subset_of(dag.all())) throw Error(ErrorKind::InvalidTarget, "target contains unknown vertices");
  if (!is_inward_closed(dag, target)) throw Error(ErrorKind::InvalidTarget, "target is not inward closed");
  if (dag.weight_of(target).sign() < 0) throw Error(ErrorKind::InvalidTarget, "target has negative weight");
}

/// Shared state for the two depth-first searches. Failure of a marked set
/// depends only on the set, so failed sets are memoized.
class MarkSearch {
 public:
  MarkSearch(const WeightedDag& dag, const SolverConfig& config, VertexSet target)
      : dag_(dag), config_(config), weights_(integer_weights(dag)), target_(target) {}

  /// Marks from the empty set up to some F containing target, then unmarks
  /// down to target. With target == V(G) the unmark phase is empty.
  bool run() { return mark_phase(VertexSet{}, 0); }

  std::vector<Step> steps;
  SearchStats stats;

 private:
  bool mark_phase(VertexSet marked, std::int64_t weight) {
    if (config_.memoize && failed_mark_.contains(marked.bits())) {
      ++stats.memo_hits;
      return false;
    }
    ++stats.states_explored;
    if (target_.subset_of(marked) && unmark_phase(marked, weight)) return true;

    for (VertexId v = 0; v < dag_.size(); ++v) {
      if (marked.contains(v) || !dag_.predecessors(v).subset_of(marked)) continue;
      const std::int64_t next = weight + weights_[v];
      if (next < 0) continue;
      steps.push_back(Step::mark(v));
      if (mark_phase(marked.with(v), next)) return true;
      steps.pop_back();
    }
    if (config_.memoize) failed_mark_.insert(marked.bits());
    return false;
  }

  bool unmark_phase(VertexSet marked, std::int64_t weight) {
    if (marked == target_) return true;
    if (config_.memoize && failed_unmark_.contains(marked.bits())) {
      ++stats.memo_hits;
      return false;
    }
    ++stats.states_explored;
    for (VertexId v : marked - target_) {
      if (dag_.successors(v).intersects(marked)) continue;
      const std::int64_t next = weight - weights_[v];
      if (next < 0) continue;
      steps.push_back(Step::unmark(v));
      if (unmark_phase(marked.without(v), next)) return true;
      steps.pop_back();
    }
    if (config_.memoize) failed_unmark_.insert(marked.bits());
    return false;
  }

  const WeightedDag& dag_;
  const SolverConfig& config_;
  std::vector<std::int64_t> weights_;
  VertexSet target_;
  std::unordered_set<std::uint64_t> failed_mark_;
  std::unordered_set<std::uint64_t> failed_unmark_;
};

}  // namespace

std::vector<std::int64_t> integer_weights(const WeightedDag& dag) {
  std::int64_t scale = 1;
  for (const Weight& w : dag.weights()) {
    const std::int64_t g = std::gcd(scale, w.den());
    if (__builtin_mul_overflow(scale / g, w.den(), &scale)) throw Error(ErrorKind::Overflow, "weight denominators");
  }
  std::vector<std::int64_t> out;
  out.reserve(dag.size());
  std::int64_t magnitude = 0;
  for (const Weight& w : dag.weights()) {
    std::int64_t scaled = 0;
    if (__builtin_mul_overflow(w.num(), scale / w.den(), &scaled)) throw Error(ErrorKind::Overflow, "scaled weight");
    // Bounding the total magnitude rules out overflow in every subset sum.
    if (__builtin_add_overflow(magnitude, scaled < 0 ? -scaled : scaled, &magnitude)) {
      throw Error(ErrorKind::Overflow, "total weight magnitude");
    }
    out.push_back(scaled);
  }
  return out;
}

OrderingSearch exists_nn_mark_sequence(const WeightedDag& dag, const SolverConfig& config) {
  check_cap(dag, config.max_n);
  const auto start = Clock::now();
  MarkSearch search(dag, config, dag.all());
  OrderingSearch out;
  if (search.run()) {
    Ordering order;
    for (const Step& s : search.steps) order.order.push_back(s.v);
    out.witness = std::move(order);
  }
  out.stats = search.stats;
  out.stats.elapsed = Clock::now() - start;
  return out;
}

SequenceSearch find_normal_form_to_target(const WeightedDag& dag, VertexSet target, const SolverConfig& config) {
  check_cap(dag, config.max_n);
  check_target(dag, target);
  const auto start = Clock::now();
  MarkSearch search(dag, config, target);
  SequenceSearch out;
  if (search.run()) out.witness = std::move(search.steps);
  out.stats = search.stats;
  out.stats.elapsed = Clock::now() - start;
  return out;
}

SequenceSearch mu_reachable(const WeightedDag& dag, VertexSet target, const SolverConfig& config) {
  check_cap(dag, config.max_n);
  check_target(dag, target);
  const auto start = Clock::now();
  const auto weights = integer_weights(dag);

  struct Parent {
    std::uint64_t previous;
    Step step;
  };
  std::unordered_map<std::uint64_t, Parent> parent;
  std::deque<VertexSet> queue;
  SequenceSearch out;

  auto finish = [&](bool found) {
    if (found) {
      std::vector<Step> steps;
      // The empty set is the BFS root, so every parent chain ends there.
      for (std::uint64_t at = target.bits(); at != 0;) {
        const Parent& p = parent.at(at);
        steps.push_back(p.step);
        at = p.previous;
      }
      out.witness = std::vector<Step>(steps.rbegin(), steps.rend());
    }
    out.stats.elapsed = Clock::now() - start;
    return out;
  };

  if (target.empty()) return finish(true);

  parent.emplace(0, Parent{0, Step{}});
  queue.push_back(VertexSet{});
  while (!queue.empty()) {
    const VertexSet current = queue.front();
    queue.pop_front();
    ++out.stats.states_explored;
    const std::int64_t weight = sum_of(weights, current);

    auto visit = [&](VertexSet next, Step step) {
      if (!parent.emplace(next.bits(), Parent{current.bits(), step}).second) {
        ++out.stats.memo_hits;
        return false;
      }
      if (next == target) return true;
      queue.push_back(next);
      return false;
    };

    for (VertexId v = 0; v < dag.size(); ++v) {
      if (current.contains(v)) {
        if (dag.successors(v).intersects(current) || weight - weights[v] < 0) continue;
        if (visit(current.without(v), Step::unmark(v))) return finish(true);
      } else {
        if (!dag.predecessors(v).subset_of(current) || weight + weights[v] < 0) continue;
        if (visit(current.with(v), Step::mark(v))) return finish(true);
      }
    }
  }
  return finish(false);
}

std::vector<Ordering> enumerate_nn_orderings(const WeightedDag& dag, std::size_t limit) {
  if (dag.size() > 10) throw Error(ErrorKind::CapExceeded, "enumeration is limited to 10 vertices");
  const auto weights = integer_weights(dag);
  std::vector<Ordering> out;
  Ordering current;

  auto extend = [&](auto&& self, VertexSet marked, std::int64_t weight) -> void {
    if (out.size() >= limit) return;
    if (marked == dag.all()) {
      out.push_back(current);
      return;
    }
    for (VertexId v = 0; v < dag.size(); ++v) {
      if (marked.contains(v) || !dag.predecessors(v).subset_of(marked) || weight + weights[v] < 0) continue;
      current.order.push_back(v);
      self(self, marked.with(v), weight + weights[v]);
      current.order.pop_back();
    }
  };
  extend(extend, VertexSet{}, 0);
  return out;
}

}  // namespace nnto
