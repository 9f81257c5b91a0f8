#pragma once

#include <vector>

#include "edcslab/graph.hpp"

namespace edcslab {

// Exact maximum-matching solvers. All of them are deterministic: they scan
// vertices and adjacency in ascending id order, so repeated runs on the
// same input return the same matching.

// Hopcroft–Karp. Requires bipartition labels on the graph.
Matching max_matching_bipartite(const Graph& g, const EdgeSubset& edges);
Matching max_matching_bipartite(const Graph& g);

// König dual: a maximum matching together with a vertex cover of equal size.
struct KonigResult {
  Matching matching;
  std::vector<VertexId> cover;
};
KonigResult max_matching_bipartite_with_cover(const Graph& g, const EdgeSubset& edges);

// Edmonds' blossom algorithm, any graph.
Matching max_matching_general(const Graph& g, const EdgeSubset& edges);
Matching max_matching_general(const Graph& g);

// Dispatches to Hopcroft–Karp when the graph carries a bipartition.
Matching max_matching_auto(const Graph& g, const EdgeSubset& edges);

// Branch-and-bound over edge inclusion with a greedy incumbent; independent
// of the two solvers above. Refuses instances above `edge_cap`.
Matching max_matching_bruteforce(const Graph& g, const EdgeSubset& edges, int edge_cap = 40);
Matching max_matching_bruteforce(const Graph& g, int edge_cap = 40);

// Nonnegative edge weights in [0,1] with cached per-vertex loads.
class FractionalMatching {
 public:
  FractionalMatching(const Graph& g, std::vector<std::pair<EdgeId, double>> weights);
  static FractionalMatching indicator(const Matching& m);

  const Graph& parent() const { return *parent_; }
  // Support entries, sorted by edge id; zero-weight entries are dropped.
  const std::vector<std::pair<EdgeId, double>>& entries() const { return entries_; }
  double weight(EdgeId e) const;
  double load(VertexId v) const { return load_[v]; }
  const std::vector<double>& loads() const { return load_; }

 private:
  const Graph* parent_;
  std::vector<std::pair<EdgeId, double>> entries_;
  std::vector<double> load_;
};

double fractional_size(const FractionalMatching& x);

struct BlossomViolation {
  std::vector<VertexId> vertices;
  double inside_weight;
  double excess;  // inside_weight - floor(|S|/2)
};

struct BlossomCheckReport {
  int s_max;
  double tolerance;
  long long sets_checked;
  std::vector<BlossomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the odd-set constraints sum_{e in G[S]} x_e <= floor(|S|/2) for all
// odd S with 3 <= |S| <= s_max, reporting sets that exceed the bound by more
// than `tolerance`. Enumeration is restricted to sets connected within the
// support of x: for tolerance <= 1/2 this loses nothing, because a violating
// set decomposes into support components, even components carry at most
// |C|/2 by the load constraints, and the odd components are connected — so
// one of them already violates. s_max is capped at 9; the enumeration is
// combinatorial in s_max.
BlossomCheckReport check_blossom_inequalities(const FractionalMatching& x, int s_max,
                                              double tolerance);

}  // namespace edcslab
