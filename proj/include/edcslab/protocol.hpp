#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edcslab/edcs.hpp"
#include "edcslab/graph.hpp"

namespace edcslab {

// Uniform random assignment of every edge to one of k parties.
struct EdgePartition {
  const Graph* parent;
  int k;
  std::uint64_t seed;
  std::vector<int> party;  // per edge id

  EdgeSubset party_edges(int i) const;
};

EdgePartition partition_edges(const Graph& g, int k, std::uint64_t seed);

struct ProtocolConfig {
  int k = 2;
  EdcsParams params;
  // Probability that an edge belongs to the last party; defaults to 1/k.
  std::optional<double> p_override;
  // Parties holding at most this many edges forward them all. nullopt means
  // the auto rule 4 * n * log2(n); 0 disables the fallback.
  std::optional<long long> fallback_edge_threshold;
  // When set, this H is used instead of building one from the sample; the
  // sample is still drawn and its non-H edges are discarded as usual.
  std::optional<EdgeSubset> injected_h;
  std::uint64_t seed = 0;
  bool compute_mu = true;
  // Reuse a precomputed mu(G) across trials on the same graph.
  std::optional<long long> known_mu;

  double p() const { return p_override ? *p_override : 1.0 / k; }
};

// Full record of one protocol run.
struct Transcript {
  std::uint64_t seed = 0;
  int k = 0;
  EdcsParams params;
  double p = 0.0;
  EdgePartition partition;
  EdgeSubset sample;                       // E_s
  EdgeSubset h;                            // H
  std::vector<EdgeSubset> contributions;   // per party < k: underfull or fallback edges
  std::vector<long long> message_words;    // cumulative, one entry per hop
  EdgeSubset last_party_edges;             // E_k ∪ message
  Matching output;
  long long mu = -1;                       // -1 when not computed
  double ratio = -1.0;
  bool fallback_used = false;
  bool injected_h = false;
  long long fallback_threshold = 0;
};

// Two-party protocol: Alice samples E_s with probability epsilon/(1-p),
// builds H from it, and sends H plus the underfull edges of E_A \ E_s;
// Bob returns a maximum matching of what he can see. If Alice holds at most
// fallback_edge_threshold edges she sends them all instead.
Transcript run_two_party(const Graph& g, const ProtocolConfig& cfg);

// k-party generalization: party 1 samples with probability epsilon/(1-p)
// and sends H plus its underfull edges; parties 2..k-1 append the underfull
// edges they hold; party k reports a maximum matching over its own edges
// plus the received message. run_two_party(cfg) == run_k_party(cfg) at k=2.
Transcript run_k_party(const Graph& g, const ProtocolConfig& cfg);

// Word accounting: one edge = one word; bytes = 8 * words (two 32-bit ids).
struct CommunicationCost {
  long long max_words = 0;
  std::vector<long long> per_hop_words;
  std::vector<long long> per_hop_bytes;
};

CommunicationCost communication_cost(const Transcript& t);

// The auto fallback threshold: round(4 * n * log2(max(n, 2))).
long long default_fallback_threshold(VertexId n);

std::string transcript_json(const Transcript& t);

}  // namespace edcslab
