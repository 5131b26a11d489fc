#include "nnto/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "combinations.hpp"
#include "nnto/error.hpp"
#include "nnto/reductions.hpp"

namespace nnto {

namespace {

void require_balanced(const BipartiteGraph& bg) {
  if (!bg.balanced()) {
    throw Error(ErrorKind::Unbalanced, "classes have sizes " + std::to_string(bg.size_a()) + " and " +
                                           std::to_string(bg.size_b()));
  }
}

void require_at_most(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                std::string(what) + ": size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

bool is_permutation_of(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

class TriangularSearch {
 public:
  explicit TriangularSearch(const BipartiteGraph& bg) : bg_(bg), witness_{std::vector<std::size_t>(bg.size_a()),
                                                                         std::vector<std::size_t>(bg.size_b())} {}

  std::optional<TriangularWitness> run() {
    if (fill(VertexSet::full(bg_.size_a()), VertexSet::full(bg_.size_b()))) return witness_;
    return std::nullopt;
  }

 private:
  // The next position to fill is |rest_a|; the pair placed there must leave
  // its A-vertex with no neighbour among the B-vertices still to be placed
  // (the earlier positions).
  bool fill(VertexSet rest_a, VertexSet rest_b) {
    if (rest_a.empty()) return true;
    const std::uint64_t key = rest_a.bits() | (rest_b.bits() << 32);
    if (dead_.contains(key)) return false;

    // Highest indices first, so an already triangular input comes back as
    // the identity.
    const std::size_t pos = rest_a.size() - 1;
    const auto as = rest_a.members();
    for (auto ai = as.rbegin(); ai != as.rend(); ++ai) {
      const VertexId a = *ai;
      const VertexSet live = bg_.neighbors(a) & rest_b;
      if (live.size() > 1) continue;
      const auto choices = (live.empty() ? rest_b : live).members();
      for (auto bi = choices.rbegin(); bi != choices.rend(); ++bi) {
        const VertexId b = *bi;
        witness_.order_a[pos] = a;
        witness_.order_b[pos] = b;
        if (fill(rest_a.without(a), rest_b.without(b))) return true;
      }
    }
    dead_.insert(key);
    return false;
  }

  const BipartiteGraph& bg_;
  TriangularWitness witness_;
  std::unordered_set<std::uint64_t> dead_;
};

}  // namespace

bool is_triangular_witness(const BipartiteGraph& bg, const TriangularWitness& w) {
  if (!bg.balanced()) return false;
  const std::size_t n = bg.size_a();
  if (!is_permutation_of(w.order_a, n) || !is_permutation_of(w.order_b, n)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (bg.has_edge(w.order_a[i], w.order_b[j])) return false;
    }
  }
  return true;
}

std::uint64_t count_perfect_matchings(const BipartiteGraph& bg) {
  require_balanced(bg);
  require_at_most(bg.size_a(), 12, "count_perfect_matchings");
  const std::size_t n = bg.size_a();
  auto count = [&](auto&& self, std::size_t a, VertexSet used) -> std::uint64_t {
    if (a == n) return 1;
    std::uint64_t total = 0;
    for (VertexId b : bg.neighbors(a) - used) total += self(self, a + 1, used.with(b));
    return total;
  };
  return count(count, 0, VertexSet{});
}

std::optional<UniquePmCertificate> unique_pm_ordering(const BipartiteGraph& bg) {
  require_balanced(bg);
  require_at_most(bg.size_a(), 32, "unique_pm_ordering");
  const std::size_t n = bg.size_a();

  std::vector<std::size_t> by_label(n);
  std::iota(by_label.begin(), by_label.end(), 0);
  std::sort(by_label.begin(), by_label.end(),
            [&](std::size_t x, std::size_t y) { return bg.a_labels()[x] < bg.a_labels()[y]; });

  UniquePmCertificate cert;
  cert.witness.order_a.assign(n, 0);
  cert.witness.order_b.assign(n, 0);
  VertexSet rest_a = VertexSet::full(n);
  VertexSet rest_b = VertexSet::full(n);

  for (std::size_t pos = n; pos-- > 0;) {
    std::optional<std::size_t> pick;
    for (std::size_t a : by_label) {
      if (!rest_a.contains(static_cast<VertexId>(a))) continue;
      const std::size_t degree = (bg.neighbors(a) & rest_b).size();
      if (degree == 0) return std::nullopt;  // no perfect matching at all
      if (degree == 1 && !pick) pick = a;
    }
    if (!pick) return std::nullopt;  // every degree >= 2: matching not unique
    const VertexId b = *(bg.neighbors(*pick) & rest_b).begin();
    cert.witness.order_a[pos] = *pick;
    cert.witness.order_b[pos] = b;
    rest_a.erase(static_cast<VertexId>(*pick));
    rest_b.erase(b);
  }
  for (std::size_t i = 0; i < n; ++i) cert.matching.emplace_back(cert.witness.order_a[i], cert.witness.order_b[i]);
  return cert;
}

std::optional<TriangularWitness> decide_upm_extension(const BipartiteGraph& bg) {
  require_balanced(bg);
  require_at_most(bg.size_a(), 12, "decide_upm_extension");
  return TriangularSearch(bg).run();
}

std::optional<Permutations> decide_triangularizable(const BoolMatrix& m) {
  require_at_most(m.size(), 12, "decide_triangularizable");
  auto witness = decide_upm_extension(matrix_to_bipartite(m));
  if (!witness) return std::nullopt;
  return Permutations{witness->order_a, witness->order_b};
}

std::optional<InducedExtension> decide_induced_extension(const BipartiteGraph& bg, std::size_t k) {
  require_balanced(bg);
  require_at_most(bg.size_a(), 9, "decide_induced_extension");
  const std::size_t n = bg.size_a();
  if (k > n) throw Error(ErrorKind::BadK, "k = " + std::to_string(k) + " exceeds class size " + std::to_string(n));

  const auto subsets = detail::k_subsets(n, k);
  for (VertexSet sa : subsets) {
    const auto a_members = sa.members();
    for (VertexSet sb : subsets) {
      auto local = decide_upm_extension(bg.induced(sa, sb));
      if (!local) continue;
      const auto b_members = sb.members();
      InducedExtension out{sa, sb, {}};
      for (std::size_t i : local->order_a) out.witness.order_a.push_back(a_members[i]);
      for (std::size_t i : local->order_b) out.witness.order_b.push_back(b_members[i]);
      return out;
    }
  }
  return std::nullopt;
}

std::optional<IndependentPair> decide_balanced_independent_set(const BipartiteGraph& bg, std::size_t k) {
  require_at_most(std::max(bg.size_a(), bg.size_b()), 16, "decide_balanced_independent_set");
  if (k > std::min(bg.size_a(), bg.size_b())) throw Error(ErrorKind::BadK, "k exceeds a class size");

  const VertexSet all_b = VertexSet::full(bg.size_b());
  for (VertexSet sa : detail::k_subsets(bg.size_a(), k)) {
    VertexSet blocked;
    for (VertexId a : sa) blocked |= bg.neighbors(a);
    const VertexSet free = all_b - blocked;
    if (free.size() < k) continue;
    // The k smallest free indices form the lexicographically first partner.
    IndependentPair out{sa, {}};
    for (VertexId b : free) {
      if (out.b.size() == k) break;
      out.b.insert(b);
    }
    return out;
  }
  return std::nullopt;
}

bool is_balanced_independent_set(const BipartiteGraph& bg, const IndependentPair& pair, std::size_t k) {
  if (pair.a.size() != k || pair.b.size() != k) return false;
  if (!pair.a.subset_of(VertexSet::full(bg.size_a())) || !pair.b.subset_of(VertexSet::full(bg.size_b()))) {
    return false;
  }
  for (VertexId a : pair.a) {
    if (bg.neighbors(a).intersects(pair.b)) return false;
  }
  return true;
}

}  // namespace nnto
