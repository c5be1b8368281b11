// Command-line front end: solve, verify, generate and bench.
//
// Exit codes: 0 solved or verified (a "no" answer is still a success),
// 1 usage or parse error, 2 internal invariant breach, 3 verify rejected the
// given set.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mfvs/mfvs.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitRejected = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mfvs::InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

mfvs::InstanceFile load(const std::string& path) {
  try {
    return mfvs::parse_instance(read_file(path));
  } catch (const mfvs::ParseError& e) {
    throw mfvs::InputError(path + ":" + e.what());
  }
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw mfvs::InputError("bad vertex '" + item + "' in --fvs");
    out.push_back(v);
  }
  return out;
}

int run_solve_cmd(const std::string& input, int k, bool oracle, bool json, const std::string& skew) {
  const mfvs::InstanceFile file = load(input);
  mfvs::SolverOptions opts;
  if (skew == "brute") opts.skew_mode = mfvs::SkewMode::kBruteForce;
  const auto rec = mfvs::run_solve(file, k, oracle ? mfvs::SolverMode::kOracle : mfvs::SolverMode::kPipeline, opts);
  if (json) {
    std::cout << mfvs::to_json(rec).dump() << "\n";
  } else {
    std::cout << mfvs::to_text(rec);
  }
  return 0;
}

int run_verify_cmd(const std::string& input, const std::string& fvs) {
  const mfvs::InstanceFile file = load(input);
  mfvs::VertexSet set;
  const int n = static_cast<int>(file.graph.num_vertices());
  for (int v : parse_vertex_list(fvs)) {
    if (v < 1 || v > n) throw mfvs::InputError("vertex " + std::to_string(v) + " out of range");
    set.insert(mfvs::VertexId(v - 1));
  }
  const bool ok = mfvs::is_fvs(file.graph, set);
  std::cout << (ok ? "fvs yes" : "fvs no") << " size " << set.size() << "\n";
  return ok ? 0 : kExitRejected;
}

int run_generate_cmd(const std::string& family, int n, std::optional<int> edges, int arcs,
                     int planted_k, std::uint64_t seed, const std::string& out_path) {
  const auto fam = mfvs::parse_family(family);
  if (!fam) throw mfvs::InputError("unknown family '" + family + "'");
  mfvs::GeneratorParams p;
  p.family = *fam;
  p.n = n;
  p.edges = edges.value_or(*fam == mfvs::Family::kFigure1 ? 2 * std::max(n - 2, 0) : 0);
  p.arcs = arcs;
  p.planted_k = planted_k;
  p.seed = seed;
  mfvs::InstanceFile file = mfvs::generate_instance(p);
  file.comments.insert(file.comments.begin(), "generated family=" + family + " n=" + std::to_string(n) +
                                                  " edges=" + std::to_string(p.edges) + " arcs=" +
                                                  std::to_string(arcs) + " seed=" + std::to_string(seed));
  std::ofstream out(out_path);
  if (!out) throw mfvs::InputError("cannot write " + out_path);
  out << mfvs::serialize_instance(file);
  return 0;
}

int run_bench_cmd(const std::string& corpus, int kmax, bool json) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(corpus)) throw mfvs::InputError(corpus + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mfvs") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  struct Row {
    int runs = 0;
    int feasible = 0;
    double total_ms = 0;
    double max_ms = 0;
  };
  std::map<int, Row> summary;
  for (const auto& path : files) {
    const mfvs::InstanceFile file = load(path.string());
    for (int k = 0; k <= kmax; ++k) {
      const auto rec = mfvs::run_solve(file, k, mfvs::SolverMode::kPipeline);
      Row& row = summary[k];
      ++row.runs;
      row.feasible += rec.feasible ? 1 : 0;
      row.total_ms += rec.elapsed_ms;
      row.max_ms = std::max(row.max_ms, rec.elapsed_ms);
      if (json) {
        auto j = mfvs::to_json(rec);
        j["instance"] = path.filename().string();
        j["n"] = file.graph.num_vertices();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << path.filename().string() << " n=" << file.graph.num_vertices() << " k=" << k
                  << " feasible=" << (rec.feasible ? "yes" : "no") << " ms=" << rec.elapsed_ms << "\n";
      }
    }
  }
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [k, row] : summary) {
      rows.push_back({{"k", k},
                      {"runs", row.runs},
                      {"feasible", row.feasible},
                      {"mean_ms", row.runs ? row.total_ms / row.runs : 0.0},
                      {"max_ms", row.max_ms}});
    }
    std::cout << nlohmann::json{{"summary", rows}}.dump() << "\n";
  } else {
    std::cout << "\nk  runs  feasible  mean_ms  max_ms\n";
    for (const auto& [k, row] : summary) {
      std::cout << k << "  " << row.runs << "  " << row.feasible << "  "
                << (row.runs ? row.total_ms / row.runs : 0.0) << "  " << row.max_ms << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact feedback vertex set solver for mixed graphs"};
  app.require_subcommand(1);

  std::string input;
  int k = 0;
  bool oracle = false;
  bool json = false;
  std::string skew = "branching";
  auto* solve = app.add_subcommand("solve", "Decide whether a FVS of size at most k exists");
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--k", k, "Budget")->required()->check(CLI::NonNegativeNumber);
  solve->add_flag("--oracle", oracle, "Use the brute-force oracle instead of the pipeline");
  solve->add_flag("--json", json, "Emit one JSON record");
  solve->add_option("--skew-mode", skew, "Skew separator solver")
      ->check(CLI::IsMember({"branching", "brute"}));

  std::string fvs;
  auto* verify = app.add_subcommand("verify", "Check that a vertex list is a FVS");
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--fvs", fvs, "Comma-separated 1-based vertices")->required();

  std::string family, out_path;
  int n = 0, arcs = 0, planted_k = 0;
  std::optional<int> edges;
  std::uint64_t seed = 0;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->add_option("--family", family, "random | planted | figure1")
      ->required()
      ->check(CLI::IsMember({"random", "planted", "figure1"}));
  generate->add_option("--n", n, "Vertex count")->required();
  generate->add_option("--edges", edges, "Edge count (figure1: defaults to 2(n-2))");
  generate->add_option("--arcs", arcs, "Arc count (figure1: decoration arcs)");
  generate->add_option("--planted-k", planted_k, "Planted FVS size");
  generate->add_option("--seed", seed, "Random seed")->required();
  generate->add_option("--out", out_path, "Output file")->required();

  std::string corpus;
  int kmax = 0;
  auto* bench = app.add_subcommand("bench", "Solve every *.mfvs file in a directory for k = 0..kmax");
  bench->add_option("--corpus", corpus, "Directory of instances")->required();
  bench->add_option("--kmax", kmax, "Largest budget")->required()->check(CLI::NonNegativeNumber);
  bench->add_flag("--json", json, "Emit JSON records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) return run_solve_cmd(input, k, oracle, json, skew);
    if (*verify) return run_verify_cmd(input, fvs);
    if (*generate) return run_generate_cmd(family, n, edges, arcs, planted_k, seed, out_path);
    if (*bench) return run_bench_cmd(corpus, kmax, json);
  } catch (const mfvs::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mfvs::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}
