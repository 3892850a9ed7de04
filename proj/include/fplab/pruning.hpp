#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fplab {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Bipartite graph with sides {0..left-1} and {0..right-1}.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Deduplicates edges; throws InvalidArgument on out-of-range endpoints.
  BipartiteGraph(std::size_t left, std::size_t right, std::vector<Edge> edges);

  std::size_t left_size() const noexcept { return left_; }
  std::size_t right_size() const noexcept { return right_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<std::size_t> left_degrees() const;
  std::vector<std::size_t> right_degrees() const;

  /// Subgraph induced on the given vertices, relabeled in the given order.
  BipartiteGraph induced(const std::vector<std::uint32_t>& keep_left,
                         const std::vector<std::uint32_t>& keep_right) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::vector<Edge> edges_;
};

struct PruneResult {
  BipartiteGraph graph;
  /// Original labels of the surviving vertices, ascending.
  std::vector<std::uint32_t> kept_left;
  std::vector<std::uint32_t> kept_right;
  std::size_t removals = 0;
};

/// Repeatedly deletes the lowest-index vertex (left side first) whose degree is
/// at most half its side's current average degree. Throws EmptyGraph when
/// there are no edges.
PruneResult prune(const BipartiteGraph& g);

struct PruneCheck {
  /// min left degree * min right degree > |E|^2 / (4 |L| |R|), original graph on the right.
  bool min_degree_product = false;
  /// |E'|^2 / (|L'| |R'|) >= |E|^2 / (|L| |R|)
  bool density_ratio = false;
  bool induced = false;

  bool ok() const noexcept { return min_degree_product && density_ratio && induced; }
};

/// Exact integer cross-multiplied check of the pruning guarantees.
PruneCheck check_prune(const BipartiteGraph& original, const PruneResult& result);

}  // namespace fplab
