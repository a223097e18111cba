// redpow command line: run / check DSL programs, run the finite-model oracle.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "redpow/dsl/evaluator.hpp"
#include "redpow/dsl/parser.hpp"
#include "redpow/oracle.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Parses `path`, printing a positioned diagnostic on failure.
std::optional<redpow::dsl::Program> load(const std::string& path) {
  std::string source;
  if (!read_file(path, source)) {
    std::cerr << path << ": cannot read file\n";
    return std::nullopt;
  }
  try {
    return redpow::dsl::parse(source);
  } catch (const redpow::dsl::ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": "
              << redpow::to_string(e.code()) << ": " << e.message() << "\n";
    return std::nullopt;
  }
}

int run(const std::string& path, std::uint64_t seed, const std::string& json_path) {
  const auto program = load(path);
  if (!program)
    return kExitUsage;
  const auto report = redpow::dsl::evaluate(*program, seed);
  const std::string json = report.to_json();
  if (json_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(json_path, std::ios::binary);
    if (!(out << json)) {
      std::cerr << json_path << ": cannot write report\n";
      return kExitUsage;
    }
  }
  return report.failed() ? kExitFailure : 0;
}

int check(const std::string& path) {
  const auto program = load(path);
  if (!program)
    return kExitUsage;
  std::cout << path << ": ok, " << program->statements.size() << " statements\n";
  return 0;
}

int oracle(unsigned n) {
  try {
    const auto report = redpow::oracle::verify_correspondence(redpow::oracle::FiniteModel(n));
    std::cout << report.to_text();
    return report.passed() ? 0 : kExitFailure;
  } catch (const redpow::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced power algebras over eventually periodic index sets"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t seed = 0;
  std::string json_path;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a program and print its JSON report");
  run_cmd->add_option("FILE", file, "Program file")->required();
  run_cmd->add_option("--seed", seed, "Seed for sampled checks");
  run_cmd->add_option("--json", json_path, "Write the report here instead of stdout");

  auto* check_cmd = app.add_subcommand("check", "Parse a program without evaluating it");
  check_cmd->add_option("FILE", file, "Program file")->required();

  unsigned n = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive finite-model correspondence check");
  oracle_cmd->add_option("--n", n, "Size of the index set (1-12)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*run_cmd)
    return run(file, seed, json_path);
  if (*check_cmd)
    return check(file);
  return oracle(n);
}
