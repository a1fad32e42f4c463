#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fgc/fgc.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fgc::InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::optional<std::string>& out_path, const std::string& text) {
  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw fgc::InputError("cannot write '" + *out_path + "'");
    out << text;
  } else {
    std::cout << text;
  }
}

std::string format_ratio(double ratio) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", ratio);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-flexible connectivity: (k+1)-approximate solver and exact oracles"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  std::string solve_file;
  std::optional<int> solve_root;
  bool solve_prune = false;
  bool solve_exact = false;
  std::optional<std::string> solve_out;
  solve_cmd->add_option("file", solve_file, "instance file")->required();
  solve_cmd->add_option("--root", solve_root, "root vertex id (0-based, default 0)");
  solve_cmd->add_flag("--prune", solve_prune, "drop redundant edges, most expensive first");
  solve_cmd->add_flag("--exact", solve_exact, "also run the exact oracle; adds opt and ratio");
  solve_cmd->add_option("--out", solve_out, "write the result document here instead of stdout");
  solve_cmd->callback([&] {
    const fgc::FgcInstance instance = fgc::parse_instance(read_file(solve_file));
    try {
      const fgc::FgcSolution solution = fgc::solve(instance, solve_root, solve_prune);
      std::optional<fgc::ExactResult> exact;
      if (solve_exact) exact = fgc::exact_opt(instance);
      write_output(solve_out, fgc::solution_to_text(solution, exact));
    } catch (const fgc::Infeasible&) {
      write_output(solve_out, fgc::infeasible_to_text(instance.k(), solve_root.value_or(0)));
      exit_code = 2;
    }
  });

  auto* check_cmd = app.add_subcommand("check", "test feasibility of an instance or edge set");
  std::string check_file;
  std::string check_edges;
  check_cmd->add_option("file", check_file, "instance file")->required();
  auto* check_solution_opt = check_cmd->add_option(
      "--solution", check_edges,
      "edge ids to test, space or comma separated (default: the whole edge set)");
  check_cmd->callback([&] {
    const fgc::FgcInstance instance = fgc::parse_instance(read_file(check_file));
    std::vector<int> subset;
    if (check_solution_opt->count() > 0) {
      std::string normalized = check_edges;
      std::replace(normalized.begin(), normalized.end(), ',', ' ');
      std::istringstream stream(normalized);
      int id = 0;
      while (stream >> id) subset.push_back(id);
      if (!stream.eof()) throw fgc::InputError("--solution expects integer edge ids");
    } else {
      subset.resize(static_cast<std::size_t>(instance.m()));
      for (int e = 0; e < instance.m(); ++e) subset[static_cast<std::size_t>(e)] = e;
    }
    const std::vector<int> witness = fgc::infeasibility_witness(instance, subset);
    if (witness.empty()) {
      std::cout << "feasible\n";
    } else {
      std::cout << "infeasible\nwitness";
      for (int v : witness) std::cout << ' ' << v + 1;  // vertex labels as in the file format
      std::cout << '\n';
      exit_code = 2;
    }
  });

  auto* exact_cmd = app.add_subcommand("exact", "optimal solution by exhaustive search");
  std::string exact_file;
  exact_cmd->add_option("file", exact_file, "instance file")->required();
  exact_cmd->callback([&] {
    const fgc::FgcInstance instance = fgc::parse_instance(read_file(exact_file));
    try {
      const fgc::ExactResult result = fgc::exact_opt(instance);
      std::cout << "status ok\nopt " << result.cost << "\nedges";
      for (int e : result.edges) std::cout << ' ' << e;
      std::cout << "\nsubsets_examined " << result.subsets_examined << '\n';
    } catch (const fgc::Infeasible&) {
      std::cout << "status infeasible\n";
      exit_code = 2;
    }
  });

  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  fgc::GenerateOptions gen_opt;
  std::optional<std::string> gen_out;
  gen_cmd->add_option("--n", gen_opt.n, "vertex count")->required();
  gen_cmd->add_option("--m", gen_opt.m, "edge count")->required();
  gen_cmd->add_option("--k", gen_opt.k, "robustness parameter")->required();
  gen_cmd->add_option("--safe-prob", gen_opt.safe_probability, "per-edge probability of S");
  gen_cmd->add_option("--max-cost", gen_opt.max_cost, "costs are uniform in 1..max");
  gen_cmd->add_option("--seed", gen_opt.seed, "RNG seed");
  gen_cmd->add_flag("--feasible", gen_opt.require_feasible, "guarantee a feasible instance");
  gen_cmd->add_option("--out", gen_out, "write the instance here instead of stdout");
  gen_cmd->callback([&] { write_output(gen_out, fgc::serialize_instance(fgc::generate(gen_opt))); });

  auto* bench_cmd = app.add_subcommand("bench", "solve random instances against the exact oracle");
  int bench_trials = 100;
  fgc::GenerateOptions bench_opt;
  bench_cmd->add_option("--trials", bench_trials, "number of instances")->required();
  bench_cmd->add_option("--n", bench_opt.n, "vertex count")->required();
  bench_cmd->add_option("--m", bench_opt.m, "edge count")->required();
  bench_cmd->add_option("--k", bench_opt.k, "robustness parameter")->required();
  bench_cmd->add_option("--safe-prob", bench_opt.safe_probability, "per-edge probability of S");
  bench_cmd->add_option("--max-cost", bench_opt.max_cost, "costs are uniform in 1..max");
  bench_cmd->add_option("--seed", bench_opt.seed, "base seed; trial i uses seed+i");
  bench_cmd->callback([&] {
    if (bench_trials < 1) throw fgc::InputError("bench: need at least one trial");
    if (bench_opt.m > fgc::kExactEdgeLimit)
      throw fgc::RefusedScale("bench needs the exact oracle; limit is " +
                              std::to_string(fgc::kExactEdgeLimit) + " edges");
    bench_opt.require_feasible = true;
    const std::uint64_t base_seed = bench_opt.seed;
    double ratio_sum = 0.0;
    double ratio_max = 0.0;
    int violations = 0;
    for (int trial = 0; trial < bench_trials; ++trial) {
      fgc::GenerateOptions opt = bench_opt;
      opt.seed = base_seed + static_cast<std::uint64_t>(trial);
      const fgc::FgcInstance instance = fgc::generate(opt);
      const fgc::FgcSolution solution = fgc::solve(instance);
      const fgc::ExactResult exact = fgc::exact_opt(instance);
      const double ratio = exact.cost > 0 ? static_cast<double>(solution.cost) /
                                                static_cast<double>(exact.cost)
                                          : 1.0;
      ratio_sum += ratio;
      ratio_max = std::max(ratio_max, ratio);
      if (solution.cost > static_cast<fgc::Cost>(solution.guarantee_factor) * exact.cost)
        ++violations;
      std::cout << "trial " << trial << " cost " << solution.cost << " opt " << exact.cost
                << " ratio " << format_ratio(ratio) << '\n';
    }
    std::cout << "trials " << bench_trials << '\n';
    std::cout << "max_ratio " << format_ratio(ratio_max) << '\n';
    std::cout << "mean_ratio " << format_ratio(ratio_sum / bench_trials) << '\n';
    std::cout << "violations " << violations << '\n';
    if (violations > 0) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const fgc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const fgc::RefusedScale& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 4;
  } catch (const fgc::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 2;
  } catch (const fgc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
