#include "edcslab/edcs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edcslab {

void EdcsParams::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw std::invalid_argument("epsilon must be in (0, 1/2]");
  }
  if (mode == ParamMode::theory) {
    if (!(lambda > 0.0 && lambda <= epsilon / 384.0)) {
      throw std::invalid_argument("theory mode requires lambda <= epsilon/384");
    }
    double beta_min = 50.0 / (lambda * lambda) * std::log(1.0 / lambda);
    if (static_cast<double>(beta) < beta_min) {
      throw std::invalid_argument("theory mode requires beta >= 50*lambda^-2*ln(1/lambda)");
    }
  } else {
    if (!(lambda > 0.0 && lambda < 1.0)) {
      throw std::invalid_argument("practical mode requires lambda in (0,1)");
    }
    if (beta < 4) throw std::invalid_argument("practical mode requires beta >= 4");
  }
}

int EdcsParams::default_peel_iterations() const {
  return std::max(1, static_cast<int>(std::floor(lambda * static_cast<double>(beta))));
}

bool degree_below_threshold(long long degree_sum, long long beta, double lambda) {
  // degree_sum < beta - lambda*beta. Write lambda = a * 2^e exactly
  // (a odd integer) and compare (beta - degree_sum) * 2^-e with a * beta
  // in 128-bit integers, folding powers of two out of a*beta first.
  if (lambda <= 0.0) return degree_sum < beta;
  if (lambda >= 1.0) return false;
  long long rhs = beta - degree_sum;  // want rhs > lambda*beta
  if (rhs <= 0) return false;
  int exp = 0;
  double mant = std::frexp(lambda, &exp);  // lambda = mant * 2^exp, mant in [0.5,1)
  auto a = static_cast<unsigned long long>(std::ldexp(mant, 53));
  int shift = 53 - exp;  // lambda = a / 2^shift, shift >= 53 for lambda < 1
  unsigned __int128 left = static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(beta);
  while (shift > 0 && (left & 1) == 0) {
    left >>= 1;
    --shift;
  }
  // rhs > left / 2^shift. left is odd here unless shift == 0.
  if (shift == 0) return static_cast<unsigned __int128>(rhs) > left;
  if (shift >= 127) {
    // left / 2^shift < 1 for any representable operands; rhs >= 1 suffices.
    return true;
  }
  unsigned __int128 lhs = static_cast<unsigned __int128>(rhs);
  if (shift > 64 && (lhs >> (127 - shift)) != 0) return true;  // lhs << shift overflows => huge
  if (shift <= 64 || (lhs >> (127 - shift)) == 0) {
    return (lhs << shift) > left;
  }
  return true;
}

namespace {

bool addable(int degree_sum, const EdcsParams& p) {
  return degree_sum <= p.beta - 2 && degree_below_threshold(degree_sum, p.beta, p.lambda);
}

}  // namespace

BoundedSubgraph build_bounded_subgraph(const EdgeSubset& sample, const EdcsParams& params,
                                       std::mt19937_64& rng) {
  params.validate();
  const Graph& g = sample.parent();
  std::vector<EdgeId> order = sample.edge_ids();
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<char> in_h(g.num_edges(), 0);
  std::vector<int> deg(g.num_vertices(), 0);
  long long steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId e : order) {
      const Edge& ed = g.edge(e);
      if (in_h[e]) {
        if (deg[ed.u] + deg[ed.v] > params.beta) {
          in_h[e] = 0;
          --deg[ed.u];
          --deg[ed.v];
          ++steps;
          changed = true;
        }
      } else if (addable(deg[ed.u] + deg[ed.v], params)) {
        in_h[e] = 1;
        ++deg[ed.u];
        ++deg[ed.v];
        ++steps;
        changed = true;
      }
    }
  }

  std::vector<EdgeId> ids;
  int max_degree = 0;
  for (EdgeId e : sample.edge_ids()) {
    if (in_h[e]) {
      ids.push_back(e);
      const Edge& ed = g.edge(e);
      max_degree = std::max(max_degree, deg[ed.u] + deg[ed.v]);
    }
  }
  return {EdgeSubset::of(g, std::move(ids)), params.beta, max_degree, steps};
}

namespace {

template <typename Below>
EdgeSubset underfull_scan(const EdgeSubset& candidates, const EdgeSubset& h, Below below) {
  const Graph& g = candidates.parent();
  if (!candidates.set_intersection(h).is_empty()) {
    throw std::invalid_argument("underfull candidates must be disjoint from h");
  }
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId e : h.edge_ids()) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::vector<EdgeId> out;
  for (EdgeId e : candidates.edge_ids()) {
    const Edge& ed = g.edge(e);
    if (below(deg[ed.u] + deg[ed.v])) out.push_back(e);
  }
  return EdgeSubset::of(g, std::move(out));
}

}  // namespace

EdgeSubset underfull_edges(const EdgeSubset& candidates, const EdgeSubset& h, int beta,
                           double lambda) {
  return underfull_scan(candidates, h,
                        [&](int d) { return degree_below_threshold(d, beta, lambda); });
}

EdgeSubset underfull_edges(const EdgeSubset& candidates, const BoundedSubgraph& h,
                           const EdcsParams& params) {
  return underfull_edges(candidates, h.edges, params.beta, params.lambda);
}

EdgeSubset underfull_edges_below(const EdgeSubset& candidates, const EdgeSubset& h,
                                 int degree_bound) {
  return underfull_scan(candidates, h, [&](int d) { return d < degree_bound; });
}

bool verify_bounded_degree(const EdgeSubset& h, int beta) {
  const Graph& g = h.parent();
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId e : h.edge_ids()) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (EdgeId e : h.edge_ids()) {
    const Edge& ed = g.edge(e);
    if (deg[ed.u] + deg[ed.v] > beta) return false;
  }
  return true;
}

}  // namespace edcslab
