#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <vector>

#include "edcslab/graph.hpp"
#include "edcslab/matchers.hpp"

namespace edcslab {

using Rational = boost::multiprecision::cpp_rational;

// Trace of the peeling construction: starting from H_1 = H, U_1 = U, take a
// maximum matching M_i of H_i ∪ U_i, delete M_i \ M_in, repeat t times;
// x_e = |{i : e in M_i}| / t. M_in is the part of the reference matching
// M* (a maximum matching of e_r) that lies inside H ∪ U.
struct PeelingTrace {
  const Graph* parent;
  int t;
  std::vector<std::vector<EdgeId>> peel_matchings;         // M_1..M_t
  std::vector<std::pair<EdgeId, EdgeId>> hu_sizes;         // (|H_i|, |U_i|) per round
  std::vector<int> count;                                  // per edge: |{i : e in M_i}|
  FractionalMatching x;
  Matching m_star;
  std::vector<char> in_m_star;       // per edge
  std::vector<EdgeId> m_in, m_out;   // partition of M*
  std::vector<char> in_m_in;         // per edge

  // x_v as an exact rational (count sums over t).
  Rational exact_load(VertexId v) const;
};

// Runs the peeling construction. M* is the deterministic solver matching of
// e_r. Every M_i is tie-broken toward M_in by rotating alternating cycles
// and even paths of the symmetric difference (any maximum matching is a
// valid choice for the trace).
PeelingTrace build_x(const Graph& g, const EdgeSubset& h, const EdgeSubset& u,
                     const EdgeSubset& e_r, int t);

// One sample of the randomized rounding: M' keeps each M_in edge with
// probability p and each M_out ∩ E_B edge with probability 1-eps. Then
//   yhat_e = 1                      if e in M'
//          = x_e                    if e in M* \ M'
//          = 0                      if e not in M*, adjacent to an M' edge
//          = (1-p) x_e / p_e        otherwise,
// where p_e = (1-p)^(# M* edges sharing an endpoint with e), and
//   y_e = yhat_e / (1+eps), zeroed at vertices whose yhat-load exceeds 1+eps.
struct YSample {
  std::vector<EdgeId> m_prime;
  std::vector<std::pair<EdgeId, double>> yhat;  // support entries, sorted
  std::vector<double> yhat_load;                // per vertex
  std::vector<std::pair<EdgeId, double>> p_e;   // per non-M* support edge of x
  FractionalMatching y;
  double p;
  double epsilon;
};

// Deterministic rounding given M'; the sampling wrappers draw M' and call
// this. Exposed separately so tests can enumerate M' outcomes.
YSample make_y(const PeelingTrace& trace, const std::vector<EdgeId>& m_prime, double p,
               double epsilon);

YSample sample_y(const PeelingTrace& trace, const EdgeSubset& e_b, double p, double epsilon,
                 std::mt19937_64& rng);

// Closed-form E[yhat_v] = p * chi_{M*}(v) + (1-p) * x_v, the expectation
// over M' containing each M* edge independently with probability p.
double expected_yhat_load(const PeelingTrace& trace, double p, VertexId v);

// The same expectation evaluated exactly: enumerate all 2^|M*| outcomes of
// M' with rational weights. Refuses |M*| > 20.
std::vector<Rational> exact_expected_yhat_loads(const PeelingTrace& trace, const Rational& p);
// Exact closed form, for comparing against the enumeration.
Rational exact_expected_yhat_load_closed_form(const PeelingTrace& trace, const Rational& p,
                                              VertexId v);

// Monte Carlo frequency of {yhat_v > 1 + eps} per vertex, drawing M' with
// probability p per M* edge. Vertices not covered by M* and vertices with
// x_v <= 1/2 never overflow.
std::vector<double> overflow_probability(const PeelingTrace& trace, double p, double epsilon,
                                         int trials, std::mt19937_64& rng);

// Exhaustive search of max over matchings M ⊆ h ∪ u of |M| + mu(G-V(M))/2,
// by branch and bound over edge inclusion. The objective never decreases
// when a matching is extended, so the search walks maximal matchings; an
// upper bound of |M| + mu(compatible rest) + mu(G-V(M))/2 prunes. Returns
// twice the maximum so the value stays integral. Refuses |h ∪ u| above
// edge_cap.
struct AugmentBoundResult {
  long long twice_max;
  Matching witness;
  long long nodes_explored;
  double max_value() const { return static_cast<double>(twice_max) / 2.0; }
};

AugmentBoundResult verify_augment_bound(const Graph& g, const EdgeSubset& h, const EdgeSubset& u,
                                        int edge_cap = 64);

}  // namespace edcslab
