#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <fgc/arborescence.hpp>
#include <fgc/errors.hpp>
#include <fgc/exact.hpp>
#include <fgc/feasibility.hpp>

#include "oracles.hpp"

TEST_CASE("exact optimum on fixed instances") {
  auto mixed = oracle::make_instance(
      2, 1, {{0, 1, 10, true}, {0, 1, 1, false}, {0, 1, 1, false}});
  auto expected = oracle::min_feasible_cost(mixed);
  REQUIRE(expected == 2);
  auto result = fgc::exact_opt(mixed);
  CHECK(result.cost == *expected);
  CHECK(result.edges == std::vector<int>{1, 2});

  auto star = oracle::make_instance(4, 3, {{0, 1, 4, true}, {0, 2, 5, true}, {0, 3, 6, true}});
  auto star_result = fgc::exact_opt(star);
  CHECK(star_result.cost == 15);
  CHECK(star_result.edges == std::vector<int>{0, 1, 2});

  auto tri = oracle::make_instance(3, 1, {{0, 1, 1, false}, {1, 2, 1, false}, {0, 2, 1, false}});
  REQUIRE(oracle::min_feasible_cost(tri) == 3);
  CHECK(fgc::exact_opt(tri).cost == 3);

  auto single_vertex = fgc::exact_opt(fgc::FgcInstance(1, 1, {}));
  CHECK(single_vertex.cost == 0);
  CHECK(single_vertex.edges.empty());
}

TEST_CASE("exact optimum guards and failure modes") {
  std::vector<std::tuple<int, int, fgc::Cost, bool>> many;
  for (int i = 0; i < 25; ++i) many.push_back({0, 1, 1, true});
  CHECK_THROWS_AS(fgc::exact_opt(oracle::make_instance(2, 1, many)), fgc::RefusedScale);

  auto unsafe_path = oracle::make_instance(3, 1, {{0, 1, 1, false}, {1, 2, 1, false}});
  CHECK_THROWS_AS(fgc::exact_opt(unsafe_path), fgc::Infeasible);
}

TEST_CASE("exact optimum matches full enumeration") {
  oracle::Rng rng(5521);
  int feasible_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + rng.below(5);
    int m = 1 + rng.below(10);
    int k = 1 + rng.below(2);
    auto instance = oracle::random_instance(rng, n, m, k, 0.5, 8);
    auto expected = oracle::min_feasible_cost(instance);
    if (!expected) {
      CHECK_THROWS_AS(fgc::exact_opt(instance), fgc::Infeasible);
      continue;
    }
    ++feasible_count;
    auto result = fgc::exact_opt(instance);
    CHECK(result.cost == *expected);
    CHECK(fgc::is_feasible_solution(instance, result.edges));
    CHECK(instance.cost_of(result.edges) == result.cost);
    CHECK(result.subsets_examined >= 1);
  }
  CHECK(feasible_count > 40);
}

TEST_CASE("exact optimum lower-bounds every feasible set") {
  oracle::Rng rng(5523);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + rng.below(4);
    int m = 2 + rng.below(8);
    auto instance = oracle::random_instance(rng, n, m, 1, 0.6, 9);
    if (!fgc::is_feasible_instance(instance)) continue;
    auto best = fgc::exact_opt(instance);
    std::vector<int> random_set;
    for (int id = 0; id < m; ++id) {
      if (rng.below(4) != 0) random_set.push_back(id);
    }
    if (fgc::is_feasible_solution(instance, random_set)) {
      CHECK(best.cost <= instance.cost_of(random_set));
    }
  }
}

TEST_CASE("exact arborescence enumeration on fixed digraphs") {
  fgc::Digraph parallel(2);
  parallel.add_arc(0, 1, 1);
  parallel.add_arc(0, 1, 2);
  parallel.add_arc(0, 1, 5);
  CHECK(fgc::exact_k_arborescence(parallel, 0, 2) == 3);

  fgc::Digraph single(2);
  single.add_arc(0, 1, 4);
  CHECK_THROWS_AS(fgc::exact_k_arborescence(single, 0, 2), fgc::NoKArborescence);
  CHECK(fgc::exact_k_arborescence(single, 0, 1) == 4);

  fgc::Digraph lone(1);
  CHECK(fgc::exact_k_arborescence(lone, 0, 5) == 0);
}

TEST_CASE("exact arborescence enumeration agrees with contraction") {
  oracle::Rng rng(5527);
  int solved = 0;
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + rng.below(4);
    int m = 1 + rng.below(9);
    auto arcs = oracle::random_arcs(rng, n, m, 11);
    fgc::Digraph d(n);
    for (const auto& a : arcs) d.add_arc(a.tail, a.head, a.cost);
    bool solvable = fgc::exists_k_arborescence(d, 0, 1);
    if (!solvable) {
      CHECK_THROWS_AS(fgc::exact_k_arborescence(d, 0, 1), fgc::NoKArborescence);
      continue;
    }
    ++solved;
    CHECK(fgc::exact_k_arborescence(d, 0, 1) == fgc::min_cost_arborescence(d, 0).total_cost);
  }
  CHECK(solved > 40);
}

TEST_CASE("exact arborescence enumeration agrees with partition search") {
  oracle::Rng rng(5531);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + rng.below(3);
    int k = 2 + rng.below(2);
    int m = 2 + rng.below(8);
    auto arcs = oracle::random_arcs(rng, n, m, 7);
    fgc::Digraph d(n);
    for (const auto& a : arcs) d.add_arc(a.tail, a.head, a.cost);
    auto expected = oracle::min_k_arborescence_cost(n, 0, arcs, k);
    if (!expected) {
      CHECK_THROWS_AS(fgc::exact_k_arborescence(d, 0, k), fgc::NoKArborescence);
    } else {
      CHECK(fgc::exact_k_arborescence(d, 0, k) == *expected);
    }
  }
}

TEST_CASE("exact arborescence enumeration refuses oversized searches") {
  fgc::Digraph wide(26);
  for (int v = 1; v < 26; ++v) wide.add_arc(0, v, 1);
  CHECK_THROWS_AS(fgc::exact_k_arborescence(wide, 0, 1), fgc::RefusedScale);

  fgc::Digraph dense(10);
  for (int rep = 0; rep < 6; ++rep) {
    for (int u = 0; u < 10; ++u) {
      for (int v = 0; v < 10; ++v) {
        if (u != v) dense.add_arc(u, v, 1);
      }
    }
  }
  CHECK_THROWS_AS(fgc::exact_k_arborescence(dense, 0, 3), fgc::RefusedScale);
}
