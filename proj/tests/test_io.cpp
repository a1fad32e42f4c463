#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <fgc/errors.hpp>
#include <fgc/feasibility.hpp>
#include <fgc/io.hpp>

#include "oracles.hpp"

namespace {

bool same_instance(const fgc::FgcInstance& a, const fgc::FgcInstance& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.m() != b.m()) return false;
  for (int id = 0; id < a.m(); ++id) {
    const fgc::Edge& x = a.edge(id);
    const fgc::Edge& y = b.edge(id);
    if (x.u != y.u || x.v != y.v || x.cost != y.cost || x.safety != y.safety) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parsing a minimal document") {
  auto instance = fgc::parse_instance("p fgc 2 1 1\ne 1 2 5 S\n");
  CHECK(instance.n() == 2);
  CHECK(instance.k() == 1);
  REQUIRE(instance.m() == 1);
  CHECK(instance.edge(0).u == 0);
  CHECK(instance.edge(0).v == 1);
  CHECK(instance.edge(0).cost == 5);
  CHECK(instance.edge(0).safe());
}

TEST_CASE("parsing skips comments and blank lines") {
  auto instance = fgc::parse_instance(
      "c generated fixture\n\nc header next\np fgc 3 2 2\ne 1 2 4 U\nc middle\ne 2 3 6 S\n");
  CHECK(instance.n() == 3);
  CHECK(instance.k() == 2);
  REQUIRE(instance.m() == 2);
  CHECK_FALSE(instance.edge(0).safe());
  CHECK(instance.edge(1).u == 1);
  CHECK(instance.edge(1).v == 2);
}

TEST_CASE("parse failures carry the offending line") {
  auto expect_fail = [](const std::string& text, int line) {
    try {
      fgc::parse_instance(text);
      FAIL("expected a parse failure");
    } catch (const fgc::ParseError& e) {
      CHECK(e.line() == line);
    }
  };

  expect_fail("e 1 2 3 S\n", 1);                          // edge before header
  expect_fail("p fgc 2 1 1\ne 1 1 3 U\n", 2);             // self-loop
  expect_fail("p fgc 2 1 0\ne 1 2 3 U\n", 1);             // k = 0
  expect_fail("p fgc 0 0 1\n", 1);                        // no vertices
  expect_fail("p fgc 2 1 1\ne 1 3 2 S\n", 2);            // endpoint out of range
  expect_fail("p fgc 2 1 1\ne 1 2 -4 S\n", 2);           // negative cost
  expect_fail("p fgc 2 1 1\ne 1 2 4 X\n", 2);            // bad safety tag
  expect_fail("p fgc 2 1 1\ne 1 2 4\n", 2);              // short edge line
  expect_fail("p fgc 2 2 1\ne 1 2 4 S\n", 3);            // fewer edges than declared
  expect_fail("p fgc 2 1 1\ne 1 2 4 S\ne 2 1 1 U\n", 3);  // more edges than declared
  expect_fail("p fgc 2 1 1\np fgc 2 1 1\n", 2);           // second header
  expect_fail("p fgc two 1 1\n", 1);                      // non-numeric field
  expect_fail("q fgc 2 1 1\n", 1);                        // unknown record
  expect_fail("", 1);                                     // empty document
}

TEST_CASE("serialization round-trips") {
  auto tri = oracle::make_instance(
      3, 2, {{0, 1, 7, true}, {1, 2, 1, false}, {0, 2, 3, false}});
  CHECK(same_instance(fgc::parse_instance(fgc::serialize_instance(tri)), tri));

  auto lonely = fgc::FgcInstance(1, 1, {});
  CHECK(same_instance(fgc::parse_instance(fgc::serialize_instance(lonely)), lonely));

  auto parallel = oracle::make_instance(2, 1, {{0, 1, 2, false}, {0, 1, 2, false}});
  auto back = fgc::parse_instance(fgc::serialize_instance(parallel));
  REQUIRE(back.m() == 2);
  CHECK(same_instance(back, parallel));
}

TEST_CASE("round-trip fidelity across many random instances") {
  oracle::Rng rng(9973);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + rng.below(12);
    int m = n == 1 ? 0 : rng.below(16);
    int k = 1 + rng.below(3);
    std::vector<std::tuple<int, int, fgc::Cost, bool>> edges;
    for (int i = 0; i < m; ++i) {
      int u = rng.below(n);
      int v = rng.below(n - 1);
      if (v >= u) ++v;
      edges.push_back({u, v, 1 + rng.below(1000), rng.below(2) == 0});
    }
    auto instance = oracle::make_instance(n, k, edges);
    auto text = fgc::serialize_instance(instance);
    CHECK(same_instance(fgc::parse_instance(text), instance));
    CHECK(fgc::serialize_instance(fgc::parse_instance(text)) == text);
  }
}

TEST_CASE("generation is deterministic per seed") {
  fgc::GenerateOptions opt;
  opt.n = 8;
  opt.m = 14;
  opt.k = 2;
  opt.safe_probability = 0.4;
  opt.max_cost = 50;
  opt.seed = 4242;

  auto first = fgc::generate(opt);
  auto second = fgc::generate(opt);
  CHECK(same_instance(first, second));
  CHECK(fgc::serialize_instance(first) == fgc::serialize_instance(second));

  opt.seed = 4243;
  CHECK_FALSE(fgc::serialize_instance(fgc::generate(opt)) == fgc::serialize_instance(first));
}

TEST_CASE("generation respects its parameters") {
  fgc::GenerateOptions opt;
  opt.n = 6;
  opt.m = 12;
  opt.k = 1;
  opt.safe_probability = 1.0;
  opt.max_cost = 9;
  opt.seed = 77;

  auto all_safe = fgc::generate(opt);
  CHECK(all_safe.n() == 6);
  CHECK(all_safe.m() == 12);
  for (const fgc::Edge& e : all_safe.edges()) {
    CHECK(e.safe());
    CHECK(e.u != e.v);
    CHECK(e.cost >= 1);
    CHECK(e.cost <= 9);
  }

  opt.safe_probability = 0.0;
  auto all_unsafe = fgc::generate(opt);
  for (const fgc::Edge& e : all_unsafe.edges()) CHECK_FALSE(e.safe());
}

TEST_CASE("generation can insist on feasibility") {
  fgc::GenerateOptions opt;
  opt.n = 7;
  opt.m = 8;
  opt.k = 2;
  opt.safe_probability = 0.1;
  opt.max_cost = 20;
  opt.require_feasible = true;

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    opt.seed = seed;
    auto instance = fgc::generate(opt);
    CHECK(fgc::is_feasible_instance(instance));
    CHECK(instance.n() == 7);
    CHECK(instance.k() == 2);
  }

  // A spanning structure of safe edges guarantees feasibility directly.
  opt.safe_probability = 1.0;
  opt.m = 10;
  opt.seed = 5;
  CHECK(fgc::is_feasible_instance(fgc::generate(opt)));
}

TEST_CASE("generation validates its options") {
  fgc::GenerateOptions opt;
  opt.n = 1;
  CHECK_THROWS_AS(fgc::generate(opt), fgc::InputError);
  opt.n = 3;
  opt.m = 0;
  CHECK_THROWS_AS(fgc::generate(opt), fgc::InputError);
  opt.m = 4;
  opt.safe_probability = 1.5;
  CHECK_THROWS_AS(fgc::generate(opt), fgc::InputError);
  opt.safe_probability = 0.5;
  opt.max_cost = 0;
  CHECK_THROWS_AS(fgc::generate(opt), fgc::InputError);
}
