#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altgraph/errors.hpp"
#include "altgraph/report.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kResource = 3;

int emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << path << '\n';
    return kUsage;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"altgraph: batch verifier for even derangement graphs and their tensor powers"};
  app.set_version_flag("--version", altgraph::version());

  altgraph::RunConfig cfg;
  std::vector<int> ns, qs;
  std::vector<std::string> suites;
  std::string artifact;

  app.add_option("--n", ns, "degree n (repeatable, 3..7)")->check(CLI::Range(3, 7));
  app.add_option("--q", qs, "tensor power q (repeatable, 1..4)")->check(CLI::Range(1, 4));
  app.add_option("--suite", suites, "structure, spectra, extremal, aut or all (repeatable)")
      ->check(CLI::IsMember({"structure", "spectra", "extremal", "aut", "all"}));
  app.add_option("--tol", cfg.tol, "Jacobi tolerance")->capture_default_str();
  app.add_option("--max-vertices", cfg.max_vertices, "materialization guard")->capture_default_str();
  app.add_option("--time-budget", cfg.time_budget_sec, "per-claim search budget in seconds")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", cfg.out_path, "output file (default stdout)");
  app.add_option("--export", artifact, "write an artifact instead of a report")
      ->check(CLI::IsMember({"edges", "spectrum", "B-sets"}));
  app.add_flag("--stretch", cfg.stretch, "enable n = 6 MIS enumeration and IR search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (!ns.empty()) cfg.n_values = ns;
  if (!qs.empty()) cfg.q_values = qs;
  if (!suites.empty()) cfg.suites = suites;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  if (!artifact.empty()) {
    try {
      std::ostringstream os;
      altgraph::export_artifact(cfg, artifact, os);
      return emit(cfg.out_path, os.str());
    } catch (const altgraph::ResourceLimit& e) {
      std::cerr << "resource limit: " << e.what() << '\n';
      return kResource;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }

  auto report = altgraph::run(cfg);
  std::ostringstream os;
  if (cfg.format == "json") os << report.to_json().dump(2) << '\n';
  else report.write_text(os);
  if (int rc = emit(cfg.out_path, os.str())) return rc;
  return report.exit_code();
}
