#include "nnto/bipartite.hpp"

#include <algorithm>
#include <unordered_map>

#include "nnto/error.hpp"

namespace nnto {

namespace {

void check_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() > kMaxVertices || b.size() > kMaxVertices) {
    throw Error(ErrorKind::CapExceeded, "bipartite class larger than " + std::to_string(kMaxVertices));
  }
  std::unordered_map<std::string, int> seen;
  for (const auto* side : {&a, &b}) {
    for (const auto& label : *side) {
      if (label.empty()) throw Error(ErrorKind::EmptyLabel, "vertex label must be non-empty");
      if (!seen.emplace(label, 0).second) throw Error(ErrorKind::DuplicateLabel, "duplicate vertex '" + label + "'");
    }
  }
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::vector<std::string> a_labels, std::vector<std::string> b_labels,
                               const std::vector<std::pair<std::string, std::string>>& edges)
    : a_(std::move(a_labels)), b_(std::move(b_labels)), adj_(a_.size()) {
  check_labels(a_, b_);
  std::unordered_map<std::string, std::size_t> a_index;
  std::unordered_map<std::string, std::size_t> b_index;
  for (std::size_t i = 0; i < a_.size(); ++i) a_index.emplace(a_[i], i);
  for (std::size_t i = 0; i < b_.size(); ++i) b_index.emplace(b_[i], i);

  for (const auto& [from, to] : edges) {
    auto ai = a_index.find(from);
    auto bi = b_index.find(to);
    if (ai == a_index.end() || bi == b_index.end()) {
      throw Error(ErrorKind::DanglingEdge, "edge " + from + "-" + to + " must join an A-vertex to a B-vertex");
    }
    VertexSet& row = adj_[ai->second];
    if (row.contains(static_cast<VertexId>(bi->second))) {
      throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + from + "-" + to);
    }
    row.insert(static_cast<VertexId>(bi->second));
  }
}

BipartiteGraph BipartiteGraph::from_indices(std::vector<std::string> a_labels, std::vector<std::string> b_labels,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  BipartiteGraph g;
  g.a_ = std::move(a_labels);
  g.b_ = std::move(b_labels);
  check_labels(g.a_, g.b_);
  g.adj_.assign(g.a_.size(), VertexSet{});
  for (auto [a, b] : edges) {
    if (a >= g.a_.size() || b >= g.b_.size()) throw Error(ErrorKind::DanglingEdge, "edge index out of range");
    if (g.adj_[a].contains(static_cast<VertexId>(b))) throw Error(ErrorKind::DuplicateEdge, "duplicate edge");
    g.adj_[a].insert(static_cast<VertexId>(b));
  }
  return g;
}

std::size_t BipartiteGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (VertexSet row : adj_) total += row.size();
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    for (VertexId b : adj_[a]) out.emplace_back(a, b);
  }
  return out;
}

BipartiteGraph BipartiteGraph::induced(VertexSet a_keep, VertexSet b_keep) const {
  BipartiteGraph g;
  std::vector<std::size_t> b_new(b_.size(), 0);
  for (VertexId b : b_keep) {
    b_new.at(b) = g.b_.size();
    g.b_.push_back(b_.at(b));
  }
  for (VertexId a : a_keep) {
    g.a_.push_back(a_.at(a));
    VertexSet row;
    for (VertexId b : adj_.at(a) & b_keep) row.insert(static_cast<VertexId>(b_new[b]));
    g.adj_.push_back(row);
  }
  return g;
}

BoolMatrix::BoolMatrix(const std::vector<std::vector<int>>& rows) : n_(rows.size()), cells_(n_ * n_, 0) {
  for (std::size_t r = 0; r < n_; ++r) {
    if (rows[r].size() != n_) throw Error(ErrorKind::PreconditionViolated, "matrix must be square");
    for (std::size_t c = 0; c < n_; ++c) {
      const int value = rows[r][c];
      if (value != 0 && value != 1) throw Error(ErrorKind::PreconditionViolated, "matrix entries must be 0 or 1");
      cells_[r * n_ + c] = static_cast<std::uint8_t>(value);
    }
  }
}

std::vector<std::vector<int>> BoolMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_, 0));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out[r][c] = at(r, c) ? 1 : 0;
  }
  return out;
}

}  // namespace nnto
