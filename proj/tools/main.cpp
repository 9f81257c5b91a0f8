#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "edcslab/harness.hpp"

namespace {

using edcslab::ExperimentConfig;
using edcslab::InstanceSpec;
using edcslab::IoError;
using edcslab::Json;
using edcslab::SummaryReport;
using edcslab::SweepConfig;
using edcslab::UsageError;

Json load_config(const std::string& path) {
  if (path.empty()) return Json::object();
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("config parse error: ") + e.what());
  }
  return j;
}

// Flags that were set explicitly on the command line override config values.
struct CommonFlags {
  std::string config_path, out_path, family, input_path;
  int m = 0, k = 0, trials = 0, s_max = 0, peel_t = 0, threads = 0, beta = 0;
  long long n = 0;
  double density = -1.0, epsilon = -1.0, lambda = -1.0, p = -1.0;
  std::uint64_t seed = 0;
  long long fallback = -2;
  bool inject = false;
  std::string mode;

  void add(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out,-o", out_path, "report output path");
    cmd->add_option("--family", family,
                    "three-layer|four-layer|gnp|bipartite-gnp|planted-matching");
    cmd->add_option("--input,-i", input_path, "edge-list input file");
    cmd->add_option("--m", m, "layered group size");
    cmd->add_option("--n", n, "random instance vertex count");
    cmd->add_option("--density", density, "random instance edge probability");
    cmd->add_option("--k", k, "number of parties");
    cmd->add_option("--trials", trials, "number of trials");
    cmd->add_option("--seed", seed, "master seed");
    cmd->add_option("--epsilon", epsilon, "sampling parameter");
    cmd->add_option("--lambda", lambda, "underfull slack parameter");
    cmd->add_option("--beta", beta, "edge-degree bound");
    cmd->add_option("--mode", mode, "theory|practical");
    cmd->add_option("--p", p, "last-party probability override");
    cmd->add_flag("--inject-adversarial-h", inject, "inject the layered adversarial H");
    cmd->add_option("--fallback-threshold", fallback,
                    "edge-count threshold for the send-everything fallback (0 disables)");
    cmd->add_option("--s-max", s_max, "odd-set size cap for blossom checks");
    cmd->add_option("--t", peel_t, "peeling iterations (0 = derived from lambda*beta)");
    cmd->add_option("--threads", threads, "worker threads for trials");
  }

  ExperimentConfig experiment(const CLI::App* cmd) const {
    ExperimentConfig cfg = ExperimentConfig::from_json(load_config(config_path));
    if (cmd->count("--family")) cfg.instance.family = family;
    if (cmd->count("--input")) {
      cfg.instance.family = "file";
      cfg.instance.path = input_path;
    }
    if (cmd->count("--m")) cfg.instance.m = m;
    if (cmd->count("--n")) cfg.instance.n = static_cast<edcslab::VertexId>(n);
    if (cmd->count("--density")) cfg.instance.density = density;
    if (cmd->count("--k")) cfg.k = k;
    if (cmd->count("--trials")) cfg.trials = trials;
    if (cmd->count("--seed")) cfg.master_seed = seed;
    if (cmd->count("--epsilon")) cfg.params.epsilon = epsilon;
    if (cmd->count("--lambda")) cfg.params.lambda = lambda;
    if (cmd->count("--beta")) cfg.params.beta = beta;
    if (cmd->count("--mode")) {
      if (mode == "theory") {
        cfg.params.mode = edcslab::ParamMode::theory;
      } else if (mode == "practical") {
        cfg.params.mode = edcslab::ParamMode::practical;
      } else {
        throw UsageError("unknown mode: " + mode);
      }
    }
    if (cmd->count("--p")) cfg.p_override = p;
    if (cmd->count("--inject-adversarial-h")) cfg.inject_adversarial_h = true;
    if (cmd->count("--fallback-threshold")) cfg.fallback_threshold = fallback;
    if (cmd->count("--s-max")) cfg.s_max = s_max;
    if (cmd->count("--t")) cfg.peel_iterations = peel_t;
    if (cmd->count("--threads")) cfg.threads = threads;
    if (cmd->count("--out")) cfg.out_path = out_path;
    return cfg;
  }
};

int finish(const SummaryReport& report, const std::string& out_path) {
  if (!out_path.empty()) {
    edcslab::write_report(report.document, out_path);
  } else {
    std::cout << report.document.dump(2) << '\n';
  }
  if (!report.assertions_ok) {
    std::cerr << "assertion failure (see report)\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edcslab: matching protocols over randomly partitioned graphs"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  CommonFlags gen_flags;
  gen_flags.add(gen);
  std::string gen_prefix = "instance";
  gen->add_option("--prefix", gen_prefix, "output path prefix");

  CLI::App* run = app.add_subcommand("run", "run protocol trials");
  CommonFlags run_flags;
  run_flags.add(run);

  CLI::App* verify = app.add_subcommand("verify", "run oracle suites");
  CommonFlags verify_flags;
  verify_flags.add(verify);
  std::vector<std::string> suites;
  verify->add_option("--suite", suites,
                     "peeling|expectation|blossom|augment-bound|overflow (repeatable)");

  CLI::App* sweep = app.add_subcommand("sweep", "communication-cost sweep over n");
  CommonFlags sweep_flags;
  sweep_flags.add(sweep);
  std::vector<long long> n_list;
  sweep->add_option("--n-list", n_list, "instance sizes")->delimiter(',');
  double degree_exponent = 0.5, degree_scale = 1.0;
  sweep->add_option("--degree-exponent", degree_exponent, "expected degree ~ scale*n^exponent");
  sweep->add_option("--degree-scale", degree_scale, "expected degree scale factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      ExperimentConfig cfg = gen_flags.experiment(gen);
      auto files = edcslab::generate_instance_files(cfg.instance, gen_prefix);
      for (const std::string& f : files) std::cout << f << '\n';
      return 0;
    }
    if (run->parsed()) {
      ExperimentConfig cfg = run_flags.experiment(run);
      return finish(edcslab::run_experiment(cfg), cfg.out_path);
    }
    if (verify->parsed()) {
      ExperimentConfig cfg = verify_flags.experiment(verify);
      if (!suites.empty()) cfg.verifiers = suites;
      return finish(edcslab::run_verify(cfg), cfg.out_path);
    }
    if (sweep->parsed()) {
      Json config_json = load_config(sweep_flags.config_path);
      SweepConfig cfg = SweepConfig::from_json(config_json);
      if (sweep->count("--n-list")) {
        cfg.n_values.clear();
        for (long long n : n_list) cfg.n_values.push_back(static_cast<edcslab::VertexId>(n));
      }
      if (sweep->count("--family")) cfg.family = sweep_flags.family;
      if (sweep->count("--degree-exponent")) cfg.degree_exponent = degree_exponent;
      if (sweep->count("--degree-scale")) cfg.degree_scale = degree_scale;
      if (sweep->count("--trials")) cfg.trials = sweep_flags.trials;
      if (sweep->count("--k")) cfg.k = sweep_flags.k;
      if (sweep->count("--seed")) cfg.master_seed = sweep_flags.seed;
      if (sweep->count("--epsilon")) cfg.params.epsilon = sweep_flags.epsilon;
      if (sweep->count("--lambda")) cfg.params.lambda = sweep_flags.lambda;
      if (sweep->count("--beta")) cfg.params.beta = sweep_flags.beta;
      if (sweep->count("--out")) cfg.out_path = sweep_flags.out_path;
      return finish(edcslab::run_sweep(cfg), cfg.out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
