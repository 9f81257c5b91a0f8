#pragma once

#include <random>

#include "edcslab/graph.hpp"

namespace edcslab {

enum class ParamMode { theory, practical };

// The (epsilon, lambda, beta) bundle driving subgraph construction and
// underfull detection.
//
// theory mode enforces the preconditions of the approximation guarantee:
// lambda <= epsilon/384 and beta >= 50 * lambda^-2 * ln(1/lambda). Those
// betas are astronomical, so experiments normally run in practical mode
// (lambda in (0,1), beta >= 4), where results are flagged as heuristic.
struct EdcsParams {
  double epsilon = 0.1;
  double lambda = 0.125;
  int beta = 8;
  ParamMode mode = ParamMode::practical;

  void validate() const;  // throws std::invalid_argument
  bool heuristic_regime() const { return mode == ParamMode::practical; }
  // Peeling iteration count used by the analysis pipeline when the caller
  // does not override it: max(1, floor(lambda * beta)).
  int default_peel_iterations() const;
};

// Exact evaluation of  degree_sum < (1 - lambda) * beta  for the binary64
// value of lambda, via integer arithmetic on its mantissa. Membership
// decisions never depend on float rounding.
bool degree_below_threshold(long long degree_sum, long long beta, double lambda);

struct BoundedSubgraph {
  EdgeSubset edges;
  int beta;
  int max_edge_degree;     // witness: max over H-edges of d(u)+d(v)
  long long fixing_steps;  // add/remove operations performed
};

// Builds H inside `sample` by iterated local fixing: remove any H-edge with
// edge-degree above beta, add any sample edge with edge-degree below
// min((1-lambda)*beta, beta-1), sweeping edges in a seeded random order
// until neither rule applies. The potential (2*beta-1)*|H| - sum_v d(v)^2
// rises by at least 1 per step, so the loop terminates within
// (2*beta-1)*n*(beta-1)/2 steps. At the fixpoint H has bounded edge-degree
// beta and no sample edge outside H is underfull — at the (1-lambda)*beta
// threshold when lambda*beta >= 1, and at the integer beta-1 threshold
// otherwise (the cap on the add rule is what guarantees termination).
BoundedSubgraph build_bounded_subgraph(const EdgeSubset& sample, const EdcsParams& params,
                                       std::mt19937_64& rng);

// Candidate edges whose edge-degree in h is strictly below (1-lambda)*beta.
// Candidates must be disjoint from h.
EdgeSubset underfull_edges(const EdgeSubset& candidates, const EdgeSubset& h, int beta,
                           double lambda);
EdgeSubset underfull_edges(const EdgeSubset& candidates, const BoundedSubgraph& h,
                           const EdcsParams& params);

// Integer-threshold variant: edges with edge-degree strictly below
// `degree_bound`. Call sites that follow the beta-1 convention use this.
EdgeSubset underfull_edges_below(const EdgeSubset& candidates, const EdgeSubset& h,
                                 int degree_bound);

// True iff every h-edge (u,v) has degree_in(h,u) + degree_in(h,v) <= beta.
bool verify_bounded_degree(const EdgeSubset& h, int beta);

}  // namespace edcslab
