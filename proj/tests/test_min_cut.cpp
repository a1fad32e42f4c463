#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <fgc/errors.hpp>
#include <fgc/min_cut.hpp>

#include "oracles.hpp"

namespace {

fgc::Cost crossing_capacity(int n, const std::vector<fgc::WeightedEdge>& edges,
                            const std::vector<int>& side) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : side) in[static_cast<std::size_t>(v)] = 1;
  fgc::Cost total = 0;
  for (const auto& e : edges) {
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) total += e.capacity;
  }
  return total;
}

}  // namespace

TEST_CASE("min cut on tiny fixed graphs") {
  auto single = fgc::global_min_cut(2, {{0, 1, 3}});
  CHECK(single.value == 3);
  CHECK((single.side == std::vector<int>{0} || single.side == std::vector<int>{1}));

  auto disconnected = fgc::global_min_cut(2, {});
  CHECK(disconnected.value == 0);
  CHECK(disconnected.side.size() == 1);

  std::vector<fgc::WeightedEdge> cycle = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
  fgc::Cost expected = oracle::min_cut(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  REQUIRE(expected == 2);
  CHECK(fgc::global_min_cut(4, cycle).value == expected);
}

TEST_CASE("min cut rejects bad input") {
  CHECK_THROWS_AS(fgc::global_min_cut(1, {}), fgc::InputError);
  CHECK_THROWS_AS(fgc::global_min_cut(2, {{0, 1, -1}}), fgc::InputError);
  CHECK_THROWS_AS(fgc::global_min_cut(2, {{0, 2, 1}}), fgc::InputError);
  CHECK_THROWS_AS(fgc::global_min_cut(2, {{0, 0, 1}}), fgc::InputError);
}

TEST_CASE("min cut matches exhaustive enumeration") {
  oracle::Rng rng(9041);
  for (int trial = 0; trial < 250; ++trial) {
    int n = 2 + rng.below(6);
    int m = rng.below(14);
    std::vector<fgc::WeightedEdge> edges;
    std::vector<std::tuple<int, int, fgc::Cost>> mirror;
    for (int i = 0; i < m; ++i) {
      int u = rng.below(n);
      int v = rng.below(n - 1);
      if (v >= u) ++v;
      fgc::Cost cap = static_cast<fgc::Cost>(rng.below(8));
      edges.push_back({u, v, cap});
      mirror.push_back({u, v, cap});
    }
    auto result = fgc::global_min_cut(n, edges);
    fgc::Cost expected = oracle::min_cut(n, mirror);
    CHECK(result.value == expected);

    REQUIRE(!result.side.empty());
    REQUIRE(static_cast<int>(result.side.size()) < n);
    CHECK(std::is_sorted(result.side.begin(), result.side.end()));
    CHECK(crossing_capacity(n, edges, result.side) == result.value);
  }
}

TEST_CASE("min cut witness separates disconnected parts") {
  auto result = fgc::global_min_cut(4, {{0, 1, 5}, {2, 3, 5}});
  CHECK(result.value == 0);
  CHECK(crossing_capacity(4, {{0, 1, 5}, {2, 3, 5}}, result.side) == 0);
}
