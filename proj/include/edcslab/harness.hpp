#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "edcslab/edcs.hpp"
#include "edcslab/graph.hpp"
#include "edcslab/instances.hpp"

namespace edcslab {

using Json = nlohmann::ordered_json;

// Exit-code contract of the CLI: 0 success, 1 assertion failure, 2 usage
// error, 3 IO error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceSpec {
  // One of: "three-layer", "four-layer", "gnp", "bipartite-gnp",
  // "planted-matching", "file".
  std::string family = "three-layer";
  int m = 8;                // layered group size
  VertexId n = 256;         // random-family vertex count
  double density = 0.05;    // random-family edge probability
  std::uint64_t gen_seed = 1;
  std::string path;         // family == "file"

  Json to_json() const;
  static InstanceSpec from_json(const Json& j);
};

struct LoadedInstance {
  Graph graph;
  std::optional<LayeredSpec> layered;
};

LoadedInstance load_instance(const InstanceSpec& spec);

struct ExperimentConfig {
  InstanceSpec instance;
  int k = 2;
  EdcsParams params;
  std::optional<double> p_override;
  int trials = 100;
  std::uint64_t master_seed = 1;
  bool inject_adversarial_h = false;
  std::optional<long long> fallback_threshold;
  int peel_iterations = 0;  // 0 = params default
  int s_max = 7;
  int threads = 1;
  std::vector<std::string> verifiers;  // for the verify command
  std::string out_path;

  Json to_json() const;
  static ExperimentConfig from_json(const Json& j);
};

struct SummaryReport {
  Json document;
  bool assertions_ok = true;
};

// Runs `trials` protocol simulations with per-trial derived seeds and
// aggregates ratio and communication statistics. The report embeds every
// per-trial record; aggregate_trials() recomputes the summary from them
// bit-for-bit.
SummaryReport run_experiment(const ExperimentConfig& cfg);

Json aggregate_trials(const Json& trials);

// Oracle suites: "peeling", "expectation", "blossom", "augment-bound",
// "overflow" (empty list = all).
SummaryReport run_verify(const ExperimentConfig& cfg);

struct SweepConfig {
  std::vector<VertexId> n_values;
  std::string family = "bipartite-gnp";
  // Edge probability at size n is degree_scale * n^(degree_exponent-1),
  // i.e. expected degree degree_scale * n^degree_exponent.
  double degree_exponent = 0.5;
  double degree_scale = 1.0;
  int trials = 3;
  int k = 2;
  EdcsParams params;
  std::uint64_t master_seed = 1;
  std::string out_path;

  Json to_json() const;
  static SweepConfig from_json(const Json& j);
};

// Communication sweep: runs the protocol across n_values with the fallback
// disabled, records max message words per point, fits
// log(words / log2(n)) = a * log(n) + b, and reports a and the constant
// max(words / (n * log2 n)).
SummaryReport run_sweep(const SweepConfig& cfg);

void write_report(const Json& doc, const std::string& path);

// Generator entry point used by the gen subcommand: writes <prefix>.edges
// and, for layered families, <prefix>.json.
std::vector<std::string> generate_instance_files(const InstanceSpec& spec,
                                                 const std::string& prefix);

}  // namespace edcslab
