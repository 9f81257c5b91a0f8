#include "edcslab/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "edcslab/matchers.hpp"
#include "edcslab/rng.hpp"
#include "json.hpp"

namespace edcslab {

EdgeSubset EdgePartition::party_edges(int i) const {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < static_cast<EdgeId>(party.size()); ++e) {
    if (party[e] == i) ids.push_back(e);
  }
  return EdgeSubset::of(*parent, std::move(ids));
}

EdgePartition partition_edges(const Graph& g, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  EdgePartition p{&g, k, seed, std::vector<int>(g.num_edges())};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) p.party[e] = pick(rng);
  return p;
}

long long default_fallback_threshold(VertexId n) {
  double nn = std::max<double>(n, 2);
  return std::llround(4.0 * static_cast<double>(n) * std::log2(nn));
}

Transcript run_k_party(const Graph& g, const ProtocolConfig& cfg) {
  if (cfg.k < 2) throw std::invalid_argument("protocol needs k >= 2 parties");
  cfg.params.validate();
  double p = cfg.p();
  if (!(p > 0.0 && p <= 0.5)) throw std::invalid_argument("p must be in (0, 1/2]");
  if (cfg.fallback_edge_threshold && *cfg.fallback_edge_threshold < 0) {
    throw std::invalid_argument("fallback threshold must be >= 0");
  }
  if (cfg.injected_h && &cfg.injected_h->parent() != &g) {
    throw std::invalid_argument("injected H belongs to a different graph");
  }

  long long threshold = cfg.fallback_edge_threshold ? *cfg.fallback_edge_threshold
                                                    : default_fallback_threshold(g.num_vertices());

  EdgePartition partition = partition_edges(g, cfg.k, derive_seed(cfg.seed, kStreamPartition));

  // E_s: each first-party edge independently with probability epsilon/(1-p).
  EdgeSubset party0 = partition.party_edges(0);
  double sample_prob = std::min(1.0, cfg.params.epsilon / (1.0 - p));
  std::vector<EdgeId> sampled;
  {
    std::mt19937_64 rng = make_rng(cfg.seed, kStreamSample);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (EdgeId e : party0.edge_ids()) {
      if (unif(rng) < sample_prob) sampled.push_back(e);
    }
  }
  EdgeSubset sample = EdgeSubset::of(g, std::move(sampled));

  EdgeSubset h = EdgeSubset::empty(g);
  if (cfg.injected_h) {
    h = *cfg.injected_h;
  } else {
    std::mt19937_64 rng = make_rng(cfg.seed, kStreamEdcsFix);
    h = build_bounded_subgraph(sample, cfg.params, rng).edges;
  }

  Transcript t{cfg.seed,
               cfg.k,
               cfg.params,
               p,
               std::move(partition),
               std::move(sample),
               h,
               {},
               {},
               EdgeSubset::empty(g),
               Matching(g, {}),
               -1,
               -1.0,
               false,
               cfg.injected_h.has_value(),
               threshold};

  EdgeSubset message = t.h;
  for (int i = 0; i < cfg.k - 1; ++i) {
    EdgeSubset own = (i == 0) ? party0 : t.partition.party_edges(i);
    EdgeSubset contribution = EdgeSubset::empty(g);
    if (threshold > 0 && own.size() <= threshold) {
      contribution = own.set_difference(message);
      t.fallback_used = true;
    } else {
      EdgeSubset candidates = own.set_difference(t.h);
      if (i == 0) candidates = candidates.set_difference(t.sample);
      contribution = underfull_edges(candidates, t.h, cfg.params.beta, cfg.params.lambda);
    }
    message = message.set_union(contribution);
    t.contributions.push_back(std::move(contribution));
    t.message_words.push_back(message.size());
  }

  t.last_party_edges = t.partition.party_edges(cfg.k - 1).set_union(message);
  t.output = max_matching_auto(g, t.last_party_edges);
  for (EdgeId e : t.output.edge_ids()) {
    if (!t.last_party_edges.contains(e)) {
      throw std::logic_error("output uses an edge the last party cannot see");
    }
  }

  if (cfg.compute_mu) {
    t.mu = cfg.known_mu ? *cfg.known_mu : max_matching_auto(g, EdgeSubset::full(g)).size();
    t.ratio = t.mu == 0 ? 1.0 : static_cast<double>(t.output.size()) / static_cast<double>(t.mu);
    if (t.ratio < 0.0 || t.ratio > 1.0 + 1e-12) {
      throw std::logic_error("approximation ratio outside [0,1]");
    }
  }
  return t;
}

Transcript run_two_party(const Graph& g, const ProtocolConfig& cfg) {
  if (cfg.k != 2) throw std::invalid_argument("run_two_party requires k = 2");
  return run_k_party(g, cfg);
}

CommunicationCost communication_cost(const Transcript& t) {
  CommunicationCost c;
  c.per_hop_words = t.message_words;
  for (long long w : c.per_hop_words) {
    c.per_hop_bytes.push_back(w * 8);
    c.max_words = std::max(c.max_words, w);
  }
  return c;
}

std::string transcript_json(const Transcript& t) {
  nlohmann::ordered_json j;
  j["seed"] = t.seed;
  j["k"] = t.k;
  j["params"] = {{"epsilon", t.params.epsilon},
                 {"lambda", t.params.lambda},
                 {"beta", t.params.beta},
                 {"mode", t.params.mode == ParamMode::theory ? "theory" : "practical"}};
  j["p"] = t.p;
  j["message_words"] = t.message_words;
  CommunicationCost c = communication_cost(t);
  j["message_bytes"] = c.per_hop_bytes;
  j["max_words"] = c.max_words;
  j["output_size"] = t.output.size();
  j["mu"] = t.mu;
  j["ratio"] = t.ratio;
  j["fallback_used"] = t.fallback_used;
  j["injected_h"] = t.injected_h;
  return j.dump();
}

}  // namespace edcslab
