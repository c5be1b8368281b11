#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mfvs/driver.hpp"
#include "mfvs/graph_algorithms.hpp"
#include "mfvs/io.hpp"
#include "mfvs/oracles.hpp"

namespace mfvs {

enum class SolverMode { kPipeline, kOracle };

inline const char* to_string(SolverMode m) { return m == SolverMode::kPipeline ? "pipeline" : "oracle"; }

struct ResultRecord {
  bool feasible = false;
  int k = 0;
  std::vector<int> fvs;  // 1-based file labels, ascending
  double elapsed_ms = 0.0;
  SolverMode mode = SolverMode::kPipeline;
  bool verified = false;
};

// Thrown when a solver's witness fails the independent re-check.
class VerificationFailure : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// Solves the instance and re-verifies any witness with is_fvs before it is
// reported. Labels are file labels, i.e. the instance must be freshly parsed
// (dense ids 0..n-1).
inline ResultRecord run_solve(const InstanceFile& file, int k, SolverMode mode,
                              const SolverOptions& opts = {}) {
  ResultRecord rec;
  rec.k = k;
  rec.mode = mode;
  const auto start = std::chrono::steady_clock::now();
  SolveResult r;
  if (mode == SolverMode::kPipeline) {
    r = solve_fvs(file.graph, k, opts);
  } else {
    const auto min = oracles::brute_min_fvs(file.graph, k);
    if (min.within()) r = SolveResult::found(*min.witness);
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.feasible = r.feasible;
  if (r.feasible) {
    rec.verified = is_fvs(file.graph, r.vertices) && r.vertices.size() <= static_cast<std::size_t>(k);
    if (!rec.verified) {
      throw VerificationFailure("witness " + to_string(r.vertices) + " failed verification");
    }
    for (VertexId v : r.vertices) rec.fvs.push_back(v.value + 1);
  }
  return rec;
}

inline nlohmann::json to_json(const ResultRecord& r) {
  return nlohmann::json{{"feasible", r.feasible}, {"k", r.k},          {"fvs", r.fvs},
                        {"elapsed_ms", r.elapsed_ms}, {"mode", to_string(r.mode)},
                        {"verified", r.verified}};
}

inline std::string to_text(const ResultRecord& r) {
  std::ostringstream out;
  out << "feasible " << (r.feasible ? "yes" : "no") << "\n";
  out << "k " << r.k << "\n";
  out << "fvs";
  for (int v : r.fvs) out << " " << v;
  out << "\n";
  out << "mode " << to_string(r.mode) << "\n";
  out << "verified " << (r.verified ? "yes" : "no") << "\n";
  out << "elapsed_ms " << r.elapsed_ms << "\n";
  return out.str();
}

}  // namespace mfvs
