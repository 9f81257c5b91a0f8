#include "edcslab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <thread>

#include "edcslab/io.hpp"
#include "edcslab/matchers.hpp"
#include "edcslab/oracles.hpp"
#include "edcslab/protocol.hpp"
#include "edcslab/rng.hpp"

namespace edcslab {

namespace {

constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

Json params_to_json(const EdcsParams& p) {
  return Json{{"epsilon", p.epsilon},
              {"lambda", p.lambda},
              {"beta", p.beta},
              {"mode", p.mode == ParamMode::theory ? "theory" : "practical"}};
}

EdcsParams params_from_json(const Json& j) {
  EdcsParams p;
  p.epsilon = j.value("epsilon", p.epsilon);
  p.lambda = j.value("lambda", p.lambda);
  p.beta = j.value("beta", p.beta);
  std::string mode = j.value("mode", std::string("practical"));
  if (mode == "theory") {
    p.mode = ParamMode::theory;
  } else if (mode == "practical") {
    p.mode = ParamMode::practical;
  } else {
    throw UsageError("unknown parameter mode: " + mode);
  }
  return p;
}

// Deterministic parallel map: slot i always receives f(i).
template <typename F>
void parallel_for(int count, int threads, F f) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        f(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

struct Stats {
  double mean = 0.0, stddev = 0.0, min = 0.0, max = 0.0, ci99_half_width = 0.0;
};

Stats compute_stats(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  double sum = 0.0;
  s.min = xs[0];
  s.max = xs[0];
  for (double x : xs) {
    sum += x;
    s.min = std::min(s.min, x);
    s.max = std::max(s.max, x);
  }
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    s.ci99_half_width = kZ99 * s.stddev / std::sqrt(static_cast<double>(xs.size()));
  }
  return s;
}

Json stats_to_json(const Stats& s) {
  return Json{{"mean", s.mean},
              {"stddev", s.stddev},
              {"min", s.min},
              {"max", s.max},
              {"ci99_half_width", s.ci99_half_width}};
}

}  // namespace

Json InstanceSpec::to_json() const {
  Json j{{"family", family}};
  if (family == "three-layer" || family == "four-layer") {
    j["m"] = m;
  } else if (family == "file") {
    j["path"] = path;
  } else {
    j["n"] = n;
    j["density"] = density;
    j["gen_seed"] = gen_seed;
  }
  return j;
}

InstanceSpec InstanceSpec::from_json(const Json& j) {
  InstanceSpec s;
  s.family = j.value("family", s.family);
  s.m = j.value("m", s.m);
  s.n = j.value("n", s.n);
  s.density = j.value("density", s.density);
  s.gen_seed = j.value("gen_seed", s.gen_seed);
  s.path = j.value("path", s.path);
  return s;
}

LoadedInstance load_instance(const InstanceSpec& spec) {
  if (spec.family == "three-layer") {
    LayeredInstance inst = gen_three_layer(spec.m);
    return {std::move(inst.graph), std::move(inst.spec)};
  }
  if (spec.family == "four-layer") {
    LayeredInstance inst = gen_four_layer(spec.m);
    return {std::move(inst.graph), std::move(inst.spec)};
  }
  if (spec.family == "file") {
    try {
      return {read_edge_list_file(spec.path), std::nullopt};
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
  }
  return {gen_random(random_family_from_string(spec.family), spec.n, spec.density, spec.gen_seed),
          std::nullopt};
}

Json ExperimentConfig::to_json() const {
  Json j;
  j["instance"] = instance.to_json();
  j["k"] = k;
  j["params"] = params_to_json(params);
  if (p_override) j["p"] = *p_override;
  j["trials"] = trials;
  j["master_seed"] = master_seed;
  j["inject_adversarial_h"] = inject_adversarial_h;
  if (fallback_threshold) j["fallback_threshold"] = *fallback_threshold;
  j["peel_iterations"] = peel_iterations;
  j["s_max"] = s_max;
  if (!verifiers.empty()) j["verifiers"] = verifiers;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  ExperimentConfig c;
  if (j.contains("instance")) c.instance = InstanceSpec::from_json(j.at("instance"));
  c.k = j.value("k", c.k);
  if (j.contains("params")) c.params = params_from_json(j.at("params"));
  if (j.contains("p")) c.p_override = j.at("p").get<double>();
  c.trials = j.value("trials", c.trials);
  c.master_seed = j.value("master_seed", c.master_seed);
  c.inject_adversarial_h = j.value("inject_adversarial_h", c.inject_adversarial_h);
  if (j.contains("fallback_threshold")) {
    c.fallback_threshold = j.at("fallback_threshold").get<long long>();
  }
  c.peel_iterations = j.value("peel_iterations", c.peel_iterations);
  c.s_max = j.value("s_max", c.s_max);
  if (j.contains("verifiers")) c.verifiers = j.at("verifiers").get<std::vector<std::string>>();
  return c;
}

namespace {

// Shared setup for run/verify: instance, optional adversarial H, mu(G).
struct Prepared {
  LoadedInstance instance;
  std::optional<EdgeSubset> injected_h;
  long long mu;
};

Prepared prepare(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw UsageError("trial count must be >= 1");
  cfg.params.validate();
  Prepared p{load_instance(cfg.instance), std::nullopt, 0};
  if (cfg.inject_adversarial_h) {
    if (!p.instance.layered) {
      throw UsageError("adversarial H injection requires a layered instance");
    }
    std::mt19937_64 rng = make_rng(cfg.master_seed, kStreamAdversarialH);
    p.injected_h = adversarial_h(p.instance.graph, *p.instance.layered, cfg.params.beta, rng);
  }
  p.mu = max_matching_auto(p.instance.graph, EdgeSubset::full(p.instance.graph)).size();
  return p;
}

std::uint64_t trial_seed_of(std::uint64_t master_seed, int trial) {
  return derive_seed(derive_seed(master_seed, kStreamTrialRoot), static_cast<std::uint64_t>(trial));
}

ProtocolConfig protocol_config(const ExperimentConfig& cfg, const Prepared& p,
                               std::uint64_t trial_seed) {
  ProtocolConfig pc;
  pc.k = cfg.k;
  pc.params = cfg.params;
  pc.p_override = cfg.p_override;
  pc.fallback_edge_threshold = cfg.fallback_threshold;
  pc.injected_h = p.injected_h;
  pc.seed = trial_seed;
  pc.known_mu = p.mu;
  return pc;
}

}  // namespace

Json aggregate_trials(const Json& trials) {
  std::vector<double> ratios;
  long long max_words = 0;
  long long max_bytes = 0;
  int fallback_runs = 0;
  for (const Json& t : trials) {
    ratios.push_back(t.at("ratio").get<double>());
    max_words = std::max(max_words, t.at("max_words").get<long long>());
    if (t.at("fallback_used").get<bool>()) ++fallback_runs;
  }
  max_bytes = max_words * 8;
  Json summary;
  summary["trials"] = trials.size();
  summary["ratio"] = stats_to_json(compute_stats(ratios));
  summary["communication"] = Json{{"max_words", max_words}, {"max_bytes", max_bytes}};
  summary["fallback_runs"] = fallback_runs;
  return summary;
}

SummaryReport run_experiment(const ExperimentConfig& cfg) {
  Prepared prep = prepare(cfg);
  const Graph& g = prep.instance.graph;

  std::vector<Json> records(cfg.trials);
  std::vector<std::string> errors(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](int i) {
    try {
      Transcript t = run_k_party(g, protocol_config(cfg, prep, trial_seed_of(cfg.master_seed, i)));
      Json rec = Json::parse(transcript_json(t));
      rec["trial"] = i;
      records[i] = std::move(rec);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (const std::string& err : errors) {
    if (!err.empty()) throw std::runtime_error("trial failed: " + err);
  }

  Json trials = Json::array();
  for (Json& r : records) trials.push_back(std::move(r));

  Json doc;
  doc["schema"] = "edcslab-report-v1";
  doc["command"] = "run";
  doc["config"] = cfg.to_json();
  doc["n"] = g.num_vertices();
  doc["m"] = g.num_edges();
  doc["mu"] = prep.mu;
  doc["heuristic_regime"] = cfg.params.heuristic_regime();
  doc["trials"] = std::move(trials);
  doc["summary"] = aggregate_trials(doc["trials"]);

  bool ratios_ok = true;
  for (const Json& t : doc["trials"]) {
    double r = t.at("ratio").get<double>();
    if (!(r >= 0.0 && r <= 1.0)) ratios_ok = false;
  }
  doc["assertions"] = Json{{"ratios_in_unit_interval", ratios_ok}};
  return {std::move(doc), ratios_ok};
}

namespace {

// Analysis objects of one trial: E_r = E \ E_s and the full underfull set
// of E_r, alongside the protocol transcript.
struct AnalysisRun {
  Transcript transcript;
  EdgeSubset e_r;
  EdgeSubset u;
};

AnalysisRun analysis_run(const Graph& g, const ExperimentConfig& cfg, const Prepared& prep,
                         std::uint64_t trial_seed) {
  Transcript t = run_k_party(g, protocol_config(cfg, prep, trial_seed));
  EdgeSubset e_r = EdgeSubset::full(g).set_difference(t.sample);
  EdgeSubset u = underfull_edges(e_r.set_difference(t.h), t.h, cfg.params.beta, cfg.params.lambda);
  return {std::move(t), std::move(e_r), std::move(u)};
}

int peel_iterations(const ExperimentConfig& cfg) {
  return cfg.peel_iterations > 0 ? cfg.peel_iterations : cfg.params.default_peel_iterations();
}

Json verify_peeling(const ExperimentConfig& cfg, const Prepared& prep) {
  const Graph& g = prep.instance.graph;
  int t_rounds = peel_iterations(cfg);
  bool step_values_ok = true, intersections_ok = true, loads_ok = true, size_ok = true;
  double min_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cfg.trials; ++i) {
    AnalysisRun run = analysis_run(g, cfg, prep, trial_seed_of(cfg.master_seed, i));
    PeelingTrace trace = build_x(g, run.transcript.h, run.u, run.e_r, t_rounds);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (!trace.in_m_in[e] && trace.count[e] > 1) step_values_ok = false;
    }
    // Pairwise intersections directly from the recorded matchings.
    for (std::size_t a = 0; a < trace.peel_matchings.size(); ++a) {
      std::vector<char> in_a(g.num_edges(), 0);
      for (EdgeId e : trace.peel_matchings[a]) in_a[e] = 1;
      for (std::size_t b = a + 1; b < trace.peel_matchings.size(); ++b) {
        for (EdgeId e : trace.peel_matchings[b]) {
          if (in_a[e] && !trace.in_m_in[e]) intersections_ok = false;
        }
      }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (trace.x.load(v) > 1.0 + 1e-9) loads_ok = false;
    }
    long long mu_er = max_matching_auto(g, run.e_r).size();
    double bound = (2.0 / 3.0 - cfg.params.epsilon) * static_cast<double>(mu_er);
    double sx = fractional_size(trace.x);
    min_margin = std::min(min_margin, sx - bound);
    if (cfg.inject_adversarial_h && sx < bound - 1e-9) size_ok = false;
  }
  bool pass = step_values_ok && intersections_ok && loads_ok && size_ok;
  return Json{{"pass", pass},
              {"trials", cfg.trials},
              {"peel_iterations", t_rounds},
              {"x_step_values_ok", step_values_ok},
              {"intersections_inside_m_in", intersections_ok},
              {"vertex_loads_ok", loads_ok},
              {"size_bound_ok", size_ok},
              {"min_size_margin", min_margin}};
}

Json verify_expectation(const ExperimentConfig& cfg, const Prepared& prep) {
  const Graph& g = prep.instance.graph;
  AnalysisRun run = analysis_run(g, cfg, prep, trial_seed_of(cfg.master_seed, 0));
  PeelingTrace trace = build_x(g, run.transcript.h, run.u, run.e_r, peel_iterations(cfg));
  if (trace.m_star.size() > 12) {
    throw UsageError("expectation suite needs |M*| <= 12; use a smaller instance");
  }
  Rational p(1, cfg.k);
  std::vector<Rational> enumerated = exact_expected_yhat_loads(trace, p);
  int equal = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (enumerated[v] == exact_expected_yhat_load_closed_form(trace, p, v)) ++equal;
  }
  bool pass = equal == g.num_vertices();
  return Json{{"pass", pass},
              {"m_star_size", trace.m_star.size()},
              {"vertices", g.num_vertices()},
              {"exact_equal_vertices", equal}};
}

Json verify_blossom(const ExperimentConfig& cfg, const Prepared& prep) {
  const Graph& g = prep.instance.graph;
  double eps = cfg.params.epsilon;
  bool loads_ok = true, pointwise_ok = true, extraction_ok = true;
  long long violations = 0;
  for (int i = 0; i < cfg.trials; ++i) {
    std::uint64_t trial_seed = trial_seed_of(cfg.master_seed, i);
    AnalysisRun run = analysis_run(g, cfg, prep, trial_seed);
    PeelingTrace trace = build_x(g, run.transcript.h, run.u, run.e_r, peel_iterations(cfg));
    EdgeSubset e_b = run.transcript.partition.party_edges(cfg.k - 1);
    std::mt19937_64 rng = make_rng(trial_seed, kStreamMPrime);
    YSample ys = sample_y(trace, e_b, run.transcript.p, eps, rng);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (ys.y.load(v) > 1.0 + 1e-9) loads_ok = false;
    }
    for (const auto& [e, w] : ys.y.entries()) {
      double cap = 0.0;
      for (const auto& [e2, w2] : ys.yhat) {
        if (e2 == e) cap = w2 / (1.0 + eps);
      }
      if (w > cap + 1e-12) pointwise_ok = false;
    }
    BlossomCheckReport rep = check_blossom_inequalities(ys.y, cfg.s_max, eps);
    violations += static_cast<long long>(rep.violations.size());
    double sy = fractional_size(ys.y);
    long long mu_last = run.transcript.output.size();
    if (static_cast<double>(mu_last) < (1.0 - 3.0 * eps) * sy - 1e-9) extraction_ok = false;
  }
  bool pass = loads_ok && pointwise_ok && extraction_ok && violations == 0;
  return Json{{"pass", pass},
              {"trials", cfg.trials},
              {"s_max", cfg.s_max},
              {"tolerance", eps},
              {"y_loads_ok", loads_ok},
              {"y_pointwise_ok", pointwise_ok},
              {"violations", violations},
              {"extraction_ok", extraction_ok}};
}

Json verify_augment(const ExperimentConfig& cfg, const Prepared& prep) {
  if (!prep.instance.layered || !prep.injected_h) {
    throw UsageError("augment-bound suite requires a layered instance with injected H");
  }
  const Graph& g = prep.instance.graph;
  const LayeredSpec& spec = *prep.instance.layered;
  const EdgeSubset& h = *prep.injected_h;
  EdgeSubset rest = EdgeSubset::full(g).set_difference(h);
  // Four-layer family follows the integer beta-1 underfull convention; the
  // three-layer family uses the (1-lambda)*beta rule. They coincide here.
  EdgeSubset u = spec.groups == 4
                     ? underfull_edges_below(rest, h, cfg.params.beta - 1)
                     : underfull_edges(rest, h, cfg.params.beta, cfg.params.lambda);
  AugmentBoundResult res = verify_augment_bound(g, h, u);
  long long mu = prep.mu;
  long long expected = spec.groups == 4 ? 3 * mu / 2 : 5 * mu / 3;
  bool pass = res.twice_max == expected;
  return Json{{"pass", pass},
              {"groups", spec.groups},
              {"mu", mu},
              {"twice_max", res.twice_max},
              {"expected_twice_max", expected},
              {"max_value", res.max_value()},
              {"witness_size", res.witness.size()},
              {"nodes_explored", res.nodes_explored}};
}

// Synthetic high-load trace: center c matched by M* to z and carrying
// x-load 1 spread over t spokes whose far endpoints are all matched by M*.
PeelingTrace synthetic_overflow_trace(const Graph& g, int t) {
  std::vector<EdgeId> star_ids;
  std::vector<int> count(g.num_edges(), 0);
  std::vector<std::pair<EdgeId, double>> weights;
  // Edges were generated as: spokes (c, v_i), pendants (v_i, w_i), (c, z).
  // Recover them from the structure: c = 0, z = 1, spokes at 2 + 3i.
  for (const AdjEntry& a : g.neighbors(0)) {
    if (a.to == 1) {
      star_ids.push_back(a.edge);  // (c, z) in M*
    } else {
      count[a.edge] = 1;
      weights.emplace_back(a.edge, 1.0 / static_cast<double>(t));
      for (const AdjEntry& b : g.neighbors(a.to)) {
        if (b.to != 0) star_ids.push_back(b.edge);  // pendant (v_i, w_i)
      }
    }
  }
  Matching m_star(g, star_ids);
  std::vector<char> in_m_star(g.num_edges(), 0);
  for (EdgeId e : m_star.edge_ids()) in_m_star[e] = 1;
  return PeelingTrace{&g,
                      t,
                      {},
                      {},
                      std::move(count),
                      FractionalMatching(g, std::move(weights)),
                      std::move(m_star),
                      std::move(in_m_star),
                      {},
                      {},
                      std::vector<char>(g.num_edges(), 0)};
}

Json verify_overflow(const ExperimentConfig& cfg) {
  // Parameters proportioned as in theory mode: lambda = eps/384,
  // beta = 50 lambda^-2 ln(1/lambda), t = floor(lambda*beta); eps = 0.4
  // keeps t small enough to simulate directly.
  double eps = 0.4;
  double lambda = eps / 384.0;
  double beta = 50.0 / (lambda * lambda) * std::log(1.0 / lambda);
  int t = static_cast<int>(std::floor(lambda * beta));
  double p = 1.0 / cfg.k;

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.emplace_back(0, 1);  // (c, z)
  for (int i = 0; i < t; ++i) {
    VertexId v = static_cast<VertexId>(2 + 2 * i);
    VertexId w = static_cast<VertexId>(2 + 2 * i + 1);
    edges.emplace_back(0, v);
    edges.emplace_back(v, w);
  }
  Graph g(static_cast<VertexId>(2 + 2 * t), edges);
  PeelingTrace trace = synthetic_overflow_trace(g, t);

  int trials = std::max(cfg.trials, 100);
  std::mt19937_64 rng = make_rng(cfg.master_seed, kStreamMPrime);
  std::vector<double> freq = overflow_probability(trace, p, eps, trials, rng);

  // Every vertex except the center has x-load <= 1/2; the center has load 1.
  bool low_load_zero = true;
  for (VertexId v = 1; v < g.num_vertices(); ++v) {
    if (freq[v] != 0.0) low_load_zero = false;
  }
  double sigma = std::sqrt(eps * (1.0 - eps) / static_cast<double>(trials));
  bool center_bounded = freq[0] <= eps + 3.0 * sigma;
  bool pass = low_load_zero && center_bounded;
  return Json{{"pass", pass},
              {"t", t},
              {"trials", trials},
              {"epsilon", eps},
              {"center_frequency", freq[0]},
              {"bound", eps + 3.0 * sigma},
              {"low_load_zero", low_load_zero}};
}

}  // namespace

SummaryReport run_verify(const ExperimentConfig& cfg) {
  Prepared prep = prepare(cfg);
  std::vector<std::string> suites = cfg.verifiers;
  if (suites.empty()) {
    suites = {"peeling", "expectation", "blossom", "augment-bound", "overflow"};
  }
  Json out;
  out["schema"] = "edcslab-report-v1";
  out["command"] = "verify";
  out["config"] = cfg.to_json();
  Json results;
  bool all_ok = true;
  for (const std::string& name : suites) {
    Json r;
    if (name == "peeling") {
      r = verify_peeling(cfg, prep);
    } else if (name == "expectation") {
      r = verify_expectation(cfg, prep);
    } else if (name == "blossom") {
      r = verify_blossom(cfg, prep);
    } else if (name == "augment-bound") {
      r = verify_augment(cfg, prep);
    } else if (name == "overflow") {
      r = verify_overflow(cfg);
    } else {
      throw UsageError("unknown verifier suite: " + name);
    }
    all_ok = all_ok && r.at("pass").get<bool>();
    results[name] = std::move(r);
  }
  out["suites"] = std::move(results);
  out["assertions"] = Json{{"all_suites_pass", all_ok}};
  return {std::move(out), all_ok};
}

Json SweepConfig::to_json() const {
  Json j;
  j["n_values"] = n_values;
  j["family"] = family;
  j["degree_exponent"] = degree_exponent;
  j["degree_scale"] = degree_scale;
  j["trials"] = trials;
  j["k"] = k;
  j["params"] = params_to_json(params);
  j["master_seed"] = master_seed;
  return j;
}

SweepConfig SweepConfig::from_json(const Json& j) {
  SweepConfig c;
  if (j.contains("n_values")) c.n_values = j.at("n_values").get<std::vector<VertexId>>();
  c.family = j.value("family", c.family);
  c.degree_exponent = j.value("degree_exponent", c.degree_exponent);
  c.degree_scale = j.value("degree_scale", c.degree_scale);
  c.trials = j.value("trials", c.trials);
  c.k = j.value("k", c.k);
  if (j.contains("params")) c.params = params_from_json(j.at("params"));
  c.master_seed = j.value("master_seed", c.master_seed);
  return c;
}

SummaryReport run_sweep(const SweepConfig& cfg) {
  if (cfg.n_values.empty()) throw UsageError("sweep needs at least one n value");
  if (cfg.trials < 1) throw UsageError("trial count must be >= 1");
  cfg.params.validate();

  Json points = Json::array();
  std::vector<double> log_n, log_scaled;
  double max_constant = 0.0;
  for (VertexId n : cfg.n_values) {
    double expected_degree = cfg.degree_scale * std::pow(static_cast<double>(n),
                                                         cfg.degree_exponent);
    double density;
    RandomFamily family = random_family_from_string(cfg.family);
    if (family == RandomFamily::gnp) {
      density = std::min(1.0, expected_degree / static_cast<double>(n - 1));
    } else {
      density = std::min(1.0, expected_degree / static_cast<double>(n / 2));
    }
    std::uint64_t point_seed = derive_seed(derive_seed(cfg.master_seed, kStreamTrialRoot),
                                           static_cast<std::uint64_t>(n));
    Graph g = gen_random(family, n, density, derive_seed(point_seed, 0xD1CEULL));

    long long point_max_words = 0;
    Json trials = Json::array();
    for (int i = 0; i < cfg.trials; ++i) {
      ProtocolConfig pc;
      pc.k = cfg.k;
      pc.params = cfg.params;
      pc.fallback_edge_threshold = 0;  // the sweep measures the subgraph path
      pc.seed = derive_seed(point_seed, static_cast<std::uint64_t>(i));
      pc.compute_mu = false;
      Transcript t = run_k_party(g, pc);
      CommunicationCost c = communication_cost(t);
      point_max_words = std::max(point_max_words, c.max_words);
      trials.push_back(Json{{"seed", pc.seed},
                            {"max_words", c.max_words},
                            {"message_words", t.message_words},
                            {"h_size", t.h.size()},
                            {"output_size", t.output.size()}});
    }
    double nlog = static_cast<double>(n) * std::log2(static_cast<double>(n));
    double constant = static_cast<double>(point_max_words) / nlog;
    max_constant = std::max(max_constant, constant);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_scaled.push_back(std::log(static_cast<double>(std::max<long long>(point_max_words, 1)) /
                                  std::log2(static_cast<double>(n))));
    points.push_back(Json{{"n", n},
                          {"m", g.num_edges()},
                          {"density", density},
                          {"max_words", point_max_words},
                          {"words_per_n_log2_n", constant},
                          {"trials", trials}});
  }

  // Least squares: log(words/log2 n) = exponent * log(n) + intercept.
  double exponent = 0.0, intercept = 0.0;
  if (log_n.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      mx += log_n[i];
      my += log_scaled[i];
    }
    mx /= static_cast<double>(log_n.size());
    my /= static_cast<double>(log_n.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      sxx += (log_n[i] - mx) * (log_n[i] - mx);
      sxy += (log_n[i] - mx) * (log_scaled[i] - my);
    }
    exponent = sxy / sxx;
    intercept = my - exponent * mx;
  }

  bool exponent_ok = log_n.size() < 2 || (exponent >= 0.9 && exponent <= 1.2);
  Json doc;
  doc["schema"] = "edcslab-report-v1";
  doc["command"] = "sweep";
  doc["config"] = cfg.to_json();
  doc["points"] = std::move(points);
  doc["fit"] = Json{{"exponent", exponent},
                    {"intercept", intercept},
                    {"max_words_per_n_log2_n", max_constant}};
  doc["assertions"] = Json{{"exponent_in_bounds", exponent_ok}};
  return {std::move(doc), exponent_ok};
}

void write_report(const Json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

std::vector<std::string> generate_instance_files(const InstanceSpec& spec,
                                                 const std::string& prefix) {
  LoadedInstance inst = load_instance(spec);
  std::vector<std::string> written;
  std::string edge_path = prefix + ".edges";
  try {
    write_edge_list_file(inst.graph, edge_path);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  written.push_back(edge_path);
  if (inst.layered) {
    std::string sidecar_path = prefix + ".json";
    std::ofstream out(sidecar_path);
    if (!out) throw IoError("cannot open " + sidecar_path + " for writing");
    out << layered_sidecar_json(*inst.layered);
    written.push_back(sidecar_path);
  }
  return written;
}

}  // namespace edcslab
