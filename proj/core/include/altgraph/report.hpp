#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace altgraph {

enum class ClaimStatus { pass, fail, skipped, informational };
const char* to_string(ClaimStatus s);

struct ClaimRecord {
  std::string claim_id;
  std::string paper_ref;  // short statement of the claim being checked
  nlohmann::json computed;
  nlohmann::json expected;
  ClaimStatus status = ClaimStatus::skipped;
  std::int64_t runtime_ms = 0;
  std::string note;

  nlohmann::json to_json(bool include_runtime = true) const;
};

inline const std::vector<std::string> kSuites = {"structure", "spectra", "extremal", "aut"};

struct RunConfig {
  std::vector<int> n_values{5};
  std::vector<int> q_values{1};
  std::vector<std::string> suites{"all"};
  double tol = 1e-10;
  std::size_t max_vertices = 4096;
  int time_budget_sec = 300;
  std::uint64_t seed = 42;
  int jobs = 1;
  std::string format = "text";
  std::string out_path;
  bool stretch = false;

  // Throws std::invalid_argument on bad values.
  void validate() const;
  bool wants(const std::string& suite) const;
  nlohmann::json to_json() const;
};

struct Report {
  RunConfig config;
  std::vector<ClaimRecord> claims;
  bool resource_abort = false;

  std::size_t count(ClaimStatus s) const;
  // 0 clean, 1 claim failure, 3 resource abort.
  int exit_code() const;
  nlohmann::json to_json(bool include_runtime = true) const;
  void write_text(std::ostream& os) const;
};

Report run(const RunConfig& config);

// artifact: "edges", "spectrum" or "B-sets"; uses the first n and q of the config.
void export_artifact(const RunConfig& config, const std::string& artifact, std::ostream& os);

struct ManifestEntry {
  std::string topic;
  std::string claim_prefix;
};
// In-scope statements and the claim IDs that check them.
const std::vector<ManifestEntry>& claim_manifest();

std::string version();

}  // namespace altgraph
