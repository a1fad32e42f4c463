#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(FGC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() /
                 ("fgc_cli_test_" + std::to_string(static_cast<long>(getpid())));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

fs::path write_scratch(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

const char* kUnsafeTriangle = "p fgc 3 3 1\ne 1 2 1 U\ne 2 3 1 U\ne 1 3 1 U\n";
const char* kUnsafePath = "p fgc 3 2 1\ne 1 2 1 U\ne 2 3 1 U\n";

}  // namespace

TEST_CASE("solve command emits a document and exit code zero") {
  auto file = write_scratch("triangle.fgc", kUnsafeTriangle);
  auto result = run_cli("solve " + file.string());
  CHECK(result.exit_code == 0);
  CHECK(has_line(result.output, "status ok"));
  CHECK(has_line(result.output, "k 1"));
  CHECK(has_line(result.output, "root 0"));
  CHECK(has_line(result.output, "edges 0 1 2"));
  CHECK(has_line(result.output, "cost 3"));
  CHECK(has_line(result.output, "arb_cost 4"));
  CHECK(has_line(result.output, "factor 2"));
  CHECK(result.output.find("opt") == std::string::npos);
}

TEST_CASE("solve with the oracle appends opt and ratio") {
  auto file = write_scratch("triangle.fgc", kUnsafeTriangle);
  auto result = run_cli("solve --exact " + file.string());
  CHECK(result.exit_code == 0);
  CHECK(has_line(result.output, "opt 3"));
  CHECK(has_line(result.output, "ratio 1.000000"));
}

TEST_CASE("solve honors root and out") {
  auto file = write_scratch("triangle.fgc", kUnsafeTriangle);
  auto out_path = scratch_dir() / "result.txt";
  auto result = run_cli("solve --root 1 --out " + out_path.string() + " " + file.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.empty());
  auto written = slurp(out_path);
  CHECK(has_line(written, "root 1"));
  CHECK(has_line(written, "status ok"));
}

TEST_CASE("solve reports infeasible instances on exit code two") {
  auto file = write_scratch("path.fgc", kUnsafePath);
  auto result = run_cli("solve " + file.string());
  CHECK(result.exit_code == 2);
  CHECK(has_line(result.output, "status infeasible"));
}

TEST_CASE("malformed files exit with code three") {
  auto file = write_scratch("broken.fgc", "p fgc 2 1 1\ne 1 1 3 U\n");
  auto result = run_cli("solve " + file.string());
  CHECK(result.exit_code == 3);

  auto headerless = write_scratch("headerless.fgc", "e 1 2 3 S\n");
  CHECK(run_cli("check " + headerless.string()).exit_code == 3);

  CHECK(run_cli("solve " + (scratch_dir() / "missing.fgc").string()).exit_code != 0);
}

TEST_CASE("check reports instance and solution feasibility") {
  auto file = write_scratch("triangle.fgc", kUnsafeTriangle);
  auto instance_only = run_cli("check " + file.string());
  CHECK(instance_only.exit_code == 0);
  CHECK(has_line(instance_only.output, "feasible"));

  auto full = run_cli("check --solution 0,1,2 " + file.string());
  CHECK(full.exit_code == 0);
  CHECK(has_line(full.output, "feasible"));

  auto partial = run_cli("check --solution 0,1 " + file.string());
  CHECK(partial.exit_code == 2);
  CHECK(partial.output.find("infeasible") != std::string::npos);
  CHECK(partial.output.find("witness") != std::string::npos);

  auto infeasible_file = write_scratch("path.fgc", kUnsafePath);
  auto infeasible = run_cli("check " + infeasible_file.string());
  CHECK(infeasible.exit_code == 2);
  CHECK(infeasible.output.find("witness") != std::string::npos);
}

TEST_CASE("exact command prints the optimum") {
  auto file = write_scratch("triangle.fgc", kUnsafeTriangle);
  auto result = run_cli("exact " + file.string());
  CHECK(result.exit_code == 0);
  CHECK(has_line(result.output, "opt 3"));
  CHECK(result.output.find("subsets_examined") != std::string::npos);

  auto infeasible_file = write_scratch("path.fgc", kUnsafePath);
  auto infeasible = run_cli("exact " + infeasible_file.string());
  CHECK(infeasible.exit_code == 2);
  CHECK(has_line(infeasible.output, "status infeasible"));
}

TEST_CASE("oversized exact requests exit with code four") {
  std::string text = "p fgc 2 25 1\n";
  for (int i = 0; i < 25; ++i) text += "e 1 2 1 S\n";
  auto file = write_scratch("wide.fgc", text);
  auto result = run_cli("exact " + file.string());
  CHECK(result.exit_code == 4);
}

TEST_CASE("gen is byte-deterministic per seed") {
  std::string flags = "gen --n 6 --m 10 --k 1 --safe-prob 0.5 --max-cost 30 --seed 99";
  auto first = run_cli(flags);
  auto second = run_cli(flags);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("p fgc 6 10 1") != std::string::npos);

  auto other_seed = run_cli("gen --n 6 --m 10 --k 1 --safe-prob 0.5 --max-cost 30 --seed 100");
  CHECK_FALSE(first.output == other_seed.output);

  auto out_path = scratch_dir() / "gen.fgc";
  auto to_file = run_cli("gen --n 6 --m 10 --k 1 --safe-prob 0.5 --max-cost 30 --seed 99 --out " +
                         out_path.string());
  CHECK(to_file.exit_code == 0);
  CHECK(slurp(out_path) == first.output);
}

TEST_CASE("generated feasible instances solve end to end") {
  auto out_path = scratch_dir() / "feasible.fgc";
  auto gen = run_cli("gen --n 6 --m 9 --k 1 --safe-prob 0.3 --max-cost 20 --seed 7 --feasible --out " +
                     out_path.string());
  REQUIRE(gen.exit_code == 0);
  auto solve = run_cli("solve --exact " + out_path.string());
  CHECK(solve.exit_code == 0);
  CHECK(has_line(solve.output, "status ok"));
}

TEST_CASE("bench aggregates ratios without violations") {
  auto result = run_cli("bench --trials 25 --n 6 --m 10 --k 1 --seed 11");
  CHECK(result.exit_code == 0);
  CHECK(has_line(result.output, "trials 25"));
  CHECK(has_line(result.output, "violations 0"));
  CHECK(result.output.find("max_ratio") != std::string::npos);
  CHECK(result.output.find("mean_ratio") != std::string::npos);
  CHECK(result.output.find("trial 0 cost") != std::string::npos);

  std::size_t pos = result.output.find("max_ratio ");
  REQUIRE(pos != std::string::npos);
  double max_ratio = std::stod(result.output.substr(pos + 10));
  CHECK(max_ratio <= 2.0);
  CHECK(max_ratio >= 1.0);
}

TEST_CASE("usage errors do not report success") {
  CHECK(run_cli("").exit_code != 0);
  CHECK(run_cli("frobnicate").exit_code != 0);
  CHECK(run_cli("gen --n 6").exit_code != 0);
}
