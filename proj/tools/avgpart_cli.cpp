// Command-line front end: gen, solve, oracle, verify.
//
// Exit codes: 0 success / valid witness, 1 witness rejected by verify,
// 2 hypothesis not met or no partition exists, 3 invalid input,
// 4 internal assertion (always a bug).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "avgpart/assembler.hpp"
#include "avgpart/error.hpp"
#include "avgpart/generators.hpp"
#include "avgpart/graph_io.hpp"
#include "avgpart/oracle.hpp"
#include "avgpart/witness_io.hpp"
#include "json.hpp"

namespace {

using namespace avgpart;

constexpr int kRejected = 1;
constexpr int kNoPartition = 2;
constexpr int kInvalidInput = 3;
constexpr int kInternal = 4;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::HypothesisNotMet: return kNoPartition;
    case ErrorKind::InternalAssertion: return kInternal;
    default: return kInvalidInput;
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

struct Options {
  std::string graph;
  std::string s;
  std::string t;
  std::string json;
  std::string spec;
  std::uint64_t seed = 0;
  std::size_t cap = oracle::kPartitionCap;
};

int run_gen(const Options& opt) {
  emit(opt.graph, format_graph(generate(opt.spec, opt.seed)));
  return 0;
}

int run_solve(const Options& opt) {
  const Graph g = read_graph_file(opt.graph);
  const Rational s = parse_rational(opt.s);
  const Rational t = parse_rational(opt.t);
  const PartitionWitness w = solve(g, s, t);
  emit(opt.json, render_witness(w, s, t));
  return 0;
}

int run_oracle(const Options& opt) {
  const Graph g = read_graph_file(opt.graph);
  const Rational s = parse_rational(opt.s);
  const Rational t = parse_rational(opt.t);
  if (s <= 0 || t <= 0) throw Error(ErrorKind::NonPositiveParameter, "s and t must be positive");
  const auto found = oracle::brute_force_partition(g, s, t, opt.cap);
  nlohmann::json doc;
  doc["s"] = format_rational(s);
  doc["t"] = format_rational(t);
  if (found) {
    doc["A"] = found->A;
    doc["B"] = found->B;
  } else {
    doc["A"] = nullptr;
    doc["B"] = nullptr;
  }
  emit(opt.json, doc.dump(2) + "\n");
  return found ? 0 : kNoPartition;
}

int run_verify(const Options& opt) {
  const Graph g = read_graph_file(opt.graph);
  const WitnessDocument doc = parse_witness_document(read_text_file(opt.json));
  ValidationReport report = verify_document(g, doc);
  if (!opt.s.empty() && parse_rational(opt.s) != doc.s)
    report.failures.push_back({"s mismatch", "document has s = " + format_rational(doc.s)});
  if (!opt.t.empty() && parse_rational(opt.t) != doc.t)
    report.failures.push_back({"t mismatch", "document has t = " + format_rational(doc.t)});
  report.ok = report.failures.empty();
  if (report.ok) {
    std::cout << "ok\n";
    return 0;
  }
  for (const Violation& v : report.failures) std::cout << "FAIL " << v.name << ": " << v.detail << "\n";
  return kRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average-degree constrained graph bipartition"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("gen", "Write a generated graph as GraphText");
  gen->add_option("spec", opt.spec, "complete(n) | gnp(n,p[,seed]) | sharp(s,t,n) | union(a,b)")->required();
  gen->add_option("--graph", opt.graph, "Output file (default stdout)");
  gen->add_option("--seed", opt.seed, "Seed for gnp() without an explicit seed");

  auto* solve_cmd = app.add_subcommand("solve", "Find a partition and write its witness");
  solve_cmd->add_option("--graph", opt.graph, "GraphText input")->required();
  solve_cmd->add_option("--s", opt.s, "Rational s > 0, e.g. 3/2")->required();
  solve_cmd->add_option("--t", opt.t, "Rational t > 0")->required();
  solve_cmd->add_option("--json", opt.json, "Witness output file (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search for a partition");
  oracle_cmd->add_option("--graph", opt.graph, "GraphText input")->required();
  oracle_cmd->add_option("--s", opt.s, "Rational s > 0")->required();
  oracle_cmd->add_option("--t", opt.t, "Rational t > 0")->required();
  oracle_cmd->add_option("--json", opt.json, "Output file (default stdout)");
  oracle_cmd->add_option("--cap", opt.cap, "Largest vertex count to enumerate");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a witness against a graph");
  verify_cmd->add_option("--graph", opt.graph, "GraphText input")->required();
  verify_cmd->add_option("--json", opt.json, "Witness document")->required();
  verify_cmd->add_option("--s", opt.s, "Expected s (optional)");
  verify_cmd->add_option("--t", opt.t, "Expected t (optional)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  try {
    if (*gen) return run_gen(opt);
    if (*solve_cmd) return run_solve(opt);
    if (*oracle_cmd) return run_oracle(opt);
    return run_verify(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}
