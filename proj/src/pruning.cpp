#include "fplab/pruning.hpp"

#include <algorithm>
#include <string>

#include "fplab/error.hpp"

namespace fplab {

BipartiteGraph::BipartiteGraph(std::size_t left, std::size_t right, std::vector<Edge> edges)
    : left_(left), right_(right), edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u >= left_ || v >= right_) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<std::size_t> BipartiteGraph::left_degrees() const {
  std::vector<std::size_t> deg(left_, 0);
  for (const auto& e : edges_) ++deg[e.first];
  return deg;
}

std::vector<std::size_t> BipartiteGraph::right_degrees() const {
  std::vector<std::size_t> deg(right_, 0);
  for (const auto& e : edges_) ++deg[e.second];
  return deg;
}

BipartiteGraph BipartiteGraph::induced(const std::vector<std::uint32_t>& keep_left,
                                       const std::vector<std::uint32_t>& keep_right) const {
  constexpr auto kGone = UINT32_MAX;
  std::vector<std::uint32_t> lmap(left_, kGone), rmap(right_, kGone);
  for (std::uint32_t i = 0; i < keep_left.size(); ++i) lmap[keep_left[i]] = i;
  for (std::uint32_t i = 0; i < keep_right.size(); ++i) rmap[keep_right[i]] = i;
  std::vector<Edge> kept;
  for (const auto& [u, v] : edges_) {
    if (lmap[u] != kGone && rmap[v] != kGone) kept.emplace_back(lmap[u], rmap[v]);
  }
  return BipartiteGraph(keep_left.size(), keep_right.size(), std::move(kept));
}

PruneResult prune(const BipartiteGraph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "prune needs at least one edge");

  std::vector<std::vector<std::uint32_t>> adj_left(g.left_size()), adj_right(g.right_size());
  for (const auto& [u, v] : g.edges()) {
    adj_left[u].push_back(v);
    adj_right[v].push_back(u);
  }
  auto deg_left = g.left_degrees();
  auto deg_right = g.right_degrees();
  std::vector<char> alive_left(g.left_size(), 1), alive_right(g.right_size(), 1);
  std::size_t n_left = g.left_size(), n_right = g.right_size(), n_edges = g.edge_count();

  PruneResult result;
  // A vertex is removable when deg <= n_edges / (2 * side), i.e. 2 * deg * side <= n_edges.
  const auto removable = [&](std::size_t deg, std::size_t side) {
    return static_cast<unsigned __int128>(2) * deg * side <= n_edges;
  };
  while (true) {
    bool removed = false;
    for (std::uint32_t u = 0; u < g.left_size() && !removed; ++u) {
      if (!alive_left[u] || !removable(deg_left[u], n_left)) continue;
      alive_left[u] = 0;
      --n_left;
      n_edges -= deg_left[u];
      for (const auto v : adj_left[u]) {
        if (alive_right[v]) --deg_right[v];
      }
      removed = true;
    }
    for (std::uint32_t v = 0; v < g.right_size() && !removed; ++v) {
      if (!alive_right[v] || !removable(deg_right[v], n_right)) continue;
      alive_right[v] = 0;
      --n_right;
      n_edges -= deg_right[v];
      for (const auto u : adj_right[v]) {
        if (alive_left[u]) --deg_left[u];
      }
      removed = true;
    }
    if (!removed) break;
    ++result.removals;
    if (n_left == 0 || n_right == 0 || n_edges == 0) {
      throw Error(ErrorCode::Degenerate, "pruning exhausted a side");
    }
  }

  for (std::uint32_t u = 0; u < g.left_size(); ++u) {
    if (alive_left[u]) result.kept_left.push_back(u);
  }
  for (std::uint32_t v = 0; v < g.right_size(); ++v) {
    if (alive_right[v]) result.kept_right.push_back(v);
  }
  result.graph = g.induced(result.kept_left, result.kept_right);
  return result;
}

PruneCheck check_prune(const BipartiteGraph& original, const PruneResult& result) {
  using i128 = unsigned __int128;
  PruneCheck check;
  const auto& h = result.graph;
  const i128 e0 = original.edge_count(), l0 = original.left_size(), r0 = original.right_size();
  const i128 e1 = h.edge_count(), l1 = h.left_size(), r1 = h.right_size();
  if (l1 == 0 || r1 == 0) return check;

  const auto dl = h.left_degrees();
  const auto dr = h.right_degrees();
  const i128 min_l = *std::min_element(dl.begin(), dl.end());
  const i128 min_r = *std::min_element(dr.begin(), dr.end());
  check.min_degree_product = min_l * min_r * 4 * l0 * r0 > e0 * e0;
  check.density_ratio = e1 * e1 * l0 * r0 >= e0 * e0 * l1 * r1;
  // E' = E restricted to L' x R', checked in original labels.
  const auto kept = [](const std::vector<std::uint32_t>& side, std::uint32_t x) {
    return std::binary_search(side.begin(), side.end(), x);
  };
  std::size_t inside = 0;
  for (const auto& [u, v] : original.edges()) inside += kept(result.kept_left, u) && kept(result.kept_right, v);
  bool all_original = true;
  for (const auto& [u, v] : h.edges()) {
    const Edge back{result.kept_left[u], result.kept_right[v]};
    all_original = all_original && std::binary_search(original.edges().begin(), original.edges().end(), back);
  }
  check.induced = all_original && inside == h.edge_count();
  return check;
}

}  // namespace fplab
