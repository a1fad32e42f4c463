#ifndef FGC_IO_HPP
#define FGC_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fgc/errors.hpp"
#include "fgc/feasibility.hpp"
#include "fgc/instance.hpp"

namespace fgc {

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) out.push_back(token);
  return out;
}

inline std::int64_t parse_int(const std::string& token, int line, const std::string& what) {
  std::int64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, what + " is not an integer: '" + token + "'");
  return value;
}

}  // namespace detail

// Instance text format, one record per line:
//   c <free-form comment>
//   p fgc <n> <m> <k>
//   e <u> <v> <cost> <S|U>
// Vertices are 1-based in files and 0-based in memory. The header must
// precede every edge line, and the edge count must match the header.
inline FgcInstance parse_instance(const std::string& text) {
  std::istringstream input(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  std::int64_t m = 0;
  int k = 0;
  std::vector<EdgeSpec> edges;

  while (std::getline(input, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::vector<std::string> tok = detail::tokens_of(raw);
    if (tok.empty()) continue;
    if (tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 5) throw ParseError(line_no, "header needs: p fgc <n> <m> <k>");
      if (tok[1] != "fgc") throw ParseError(line_no, "unknown format '" + tok[1] + "'");
      const std::int64_t n64 = detail::parse_int(tok[2], line_no, "vertex count");
      m = detail::parse_int(tok[3], line_no, "edge count");
      const std::int64_t k64 = detail::parse_int(tok[4], line_no, "k");
      if (n64 < 1) throw ParseError(line_no, "vertex count must be >= 1");
      if (m < 0) throw ParseError(line_no, "edge count must be >= 0");
      if (k64 < 1) throw ParseError(line_no, "k must be >= 1");
      if (n64 > 1'000'000 || k64 > 1'000'000)
        throw ParseError(line_no, "header values out of supported range");
      if (m * (k64 + 1) > kMaxEdgeBudget)
        throw ParseError(line_no, "m*(k+1) exceeds " + std::to_string(kMaxEdgeBudget));
      n = static_cast<int>(n64);
      k = static_cast<int>(k64);
      have_header = true;
      continue;
    }

    if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (static_cast<std::int64_t>(edges.size()) == m)
        throw ParseError(line_no, "more edges than the header announced");
      if (tok.size() != 5) throw ParseError(line_no, "edge needs: e <u> <v> <cost> <S|U>");
      const std::int64_t u = detail::parse_int(tok[1], line_no, "endpoint");
      const std::int64_t v = detail::parse_int(tok[2], line_no, "endpoint");
      const std::int64_t cost = detail::parse_int(tok[3], line_no, "cost");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop");
      if (cost < 0) throw ParseError(line_no, "negative cost");
      if (cost > kMaxEdgeCost) throw ParseError(line_no, "cost exceeds 2^40");
      Safety safety;
      if (tok[4] == "S")
        safety = Safety::Safe;
      else if (tok[4] == "U")
        safety = Safety::Unsafe;
      else
        throw ParseError(line_no, "safety flag must be S or U, got '" + tok[4] + "'");
      edges.push_back({static_cast<int>(u) - 1, static_cast<int>(v) - 1, cost, safety});
      continue;
    }

    throw ParseError(line_no, "unknown record '" + tok[0] + "'");
  }

  if (!have_header) throw ParseError(line_no + 1, "missing header");
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError(line_no + 1, "header announced " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  return FgcInstance(n, k, edges);
}

inline std::string serialize_instance(const FgcInstance& instance) {
  std::ostringstream out;
  out << "p fgc " << instance.n() << ' ' << instance.m() << ' ' << instance.k() << '\n';
  for (const Edge& e : instance.edges())
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.cost << ' ' << (e.safe() ? 'S' : 'U')
        << '\n';
  return out.str();
}

struct GenerateOptions {
  int n = 5;
  int m = 8;
  int k = 1;
  double safe_probability = 0.5;
  Cost max_cost = 100;
  std::uint64_t seed = 1;
  bool require_feasible = false;
};

namespace detail {

// Seed-stable helpers on top of the fixed-algorithm engine; no
// distribution objects, whose outputs vary across standard libraries.
inline std::int64_t next_below(std::mt19937_64& rng, std::int64_t bound) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound));
}

inline double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// Random multigraph instance, identical for identical options. With
// require_feasible, retries a bounded number of times and finally overlays a
// random safe spanning tree, which forces feasibility for any k.
inline FgcInstance generate(const GenerateOptions& opt) {
  if (opt.n < 2) throw InputError("generate: need n >= 2");
  if (opt.m < 1) throw InputError("generate: need m >= 1");
  if (opt.k < 1) throw InputError("generate: need k >= 1");
  if (opt.safe_probability < 0.0 || opt.safe_probability > 1.0)
    throw InputError("generate: safe probability outside [0, 1]");
  if (opt.max_cost < 1 || opt.max_cost > kMaxEdgeCost)
    throw InputError("generate: max cost outside 1..2^40");
  const std::int64_t budget_m =
      opt.require_feasible ? static_cast<std::int64_t>(opt.m) + (opt.n - 1) : opt.m;
  if (budget_m * (opt.k + 1) > kMaxEdgeBudget)
    throw InputError("generate: m*(k+1) exceeds " + std::to_string(kMaxEdgeBudget));

  std::mt19937_64 rng(opt.seed);
  auto random_edges = [&] {
    std::vector<EdgeSpec> edges;
    edges.reserve(static_cast<std::size_t>(opt.m));
    for (int i = 0; i < opt.m; ++i) {
      const int u = static_cast<int>(detail::next_below(rng, opt.n));
      int v = static_cast<int>(detail::next_below(rng, opt.n - 1));
      if (v >= u) ++v;
      const Cost cost = 1 + detail::next_below(rng, opt.max_cost);
      const Safety safety =
          detail::next_unit(rng) < opt.safe_probability ? Safety::Safe : Safety::Unsafe;
      edges.push_back({u, v, cost, safety});
    }
    return edges;
  };

  std::vector<EdgeSpec> edges = random_edges();
  if (!opt.require_feasible) return FgcInstance(opt.n, opt.k, edges);

  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    FgcInstance candidate(opt.n, opt.k, edges);
    if (is_feasible_instance(candidate)) return candidate;
    edges = random_edges();
  }

  // Overlay a random safe spanning tree: safe edges never fail, so a safe
  // connected subgraph makes the whole instance feasible.
  std::vector<int> order(static_cast<std::size_t>(opt.n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = opt.n - 1; i > 0; --i) {
    const int j = static_cast<int>(detail::next_below(rng, i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  for (int i = 1; i < opt.n; ++i) {
    const int u = order[static_cast<std::size_t>(i)];
    const int v = order[static_cast<std::size_t>(detail::next_below(rng, i))];
    const Cost cost = 1 + detail::next_below(rng, opt.max_cost);
    edges.push_back({u, v, cost, Safety::Safe});
  }
  FgcInstance patched(opt.n, opt.k, edges);
  if (!is_feasible_instance(patched))
    throw GenerationFailed("safe spanning tree overlay left the instance infeasible");
  return patched;
}

}  // namespace fgc

#endif  // FGC_IO_HPP
