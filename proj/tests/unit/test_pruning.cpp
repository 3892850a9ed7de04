#include <doctest.h>

#include "fplab/pruning.hpp"
#include "gen.hpp"

using namespace fplab;

namespace {

BipartiteGraph random_graph(Rng& rng, double density) {
  const auto left = rng.between(1, 50), right = rng.between(1, 50);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < left; ++u)
    for (std::uint32_t v = 0; v < right; ++v)
      if (rng.unit() < density) edges.emplace_back(u, v);
  if (edges.empty()) edges.emplace_back(0, 0);
  return BipartiteGraph(left, right, edges);
}

}  // namespace

TEST_CASE("pruning examples") {
  const BipartiteGraph k11(1, 1, {{0, 0}});
  const auto r1 = prune(k11);
  CHECK(r1.graph == k11);
  CHECK(r1.removals == 0);
  CHECK(check_prune(k11, r1).ok());

  const BipartiteGraph path(2, 1, {{0, 0}});
  const auto r2 = prune(path);
  CHECK(r2.graph == k11);
  CHECK(r2.kept_left == std::vector<std::uint32_t>{0});
  CHECK(r2.kept_right == std::vector<std::uint32_t>{0});
  CHECK(r2.removals == 1);
  CHECK(check_prune(path, r2).ok());

  std::vector<Edge> all;
  for (std::uint32_t u = 0; u < 3; ++u)
    for (std::uint32_t v = 0; v < 3; ++v) all.emplace_back(u, v);
  const BipartiteGraph k33(3, 3, all);
  const auto r3 = prune(k33);
  CHECK(r3.graph == k33);
  CHECK(check_prune(k33, r3).ok());
}

TEST_CASE("graph validation") {
  CHECK_ERROR_CODE(prune(BipartiteGraph(3, 3, {})), ErrorCode::EmptyGraph);
  CHECK_ERROR_CODE(BipartiteGraph(2, 2, {{2, 0}}), ErrorCode::InvalidArgument);
  const BipartiteGraph dup(2, 2, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 2);
  CHECK(dup.left_degrees() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("check_prune notices a bad result") {
  // Keeping an isolated vertex breaks the min-degree condition.
  const BipartiteGraph g(2, 1, {{0, 0}});
  PruneResult fake;
  fake.kept_left = {0, 1};
  fake.kept_right = {0};
  fake.graph = g;
  CHECK_FALSE(check_prune(g, fake).min_degree_product);
  // Dropping an edge that should survive breaks the induced check.
  const BipartiteGraph k22(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  PruneResult missing;
  missing.kept_left = {0, 1};
  missing.kept_right = {0, 1};
  missing.graph = BipartiteGraph(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  CHECK_FALSE(check_prune(k22, missing).induced);
}

TEST_CASE("pruning guarantees on random graphs") {
  Rng rng(301);
  for (int trial = 0; trial < 500; ++trial) {
    const double density = 0.05 * static_cast<double>(1 + trial % 10);
    const auto g = random_graph(rng, density);
    const auto res = prune(g);
    const auto chk = check_prune(g, res);
    CAPTURE(trial);
    CHECK(chk.min_degree_product);
    CHECK(chk.density_ratio);
    CHECK(chk.induced);
    // Terminal state: no surviving vertex is removable any more.
    const auto& h = res.graph;
    for (const auto d : h.left_degrees()) CHECK(2 * d * h.left_size() > h.edge_count());
    for (const auto d : h.right_degrees()) CHECK(2 * d * h.right_size() > h.edge_count());
    // Idempotence.
    const auto again = prune(h);
    CHECK(again.graph == h);
    CHECK(again.removals == 0);
  }
}
