#include "edcslab/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edcslab {

namespace {

// Rotates alternating cycles and even paths of M Δ R toward the reference
// matching R; the result has the same size as M.
std::vector<EdgeId> align_to_reference(const Graph& g, const Matching& m,
                                       const std::vector<EdgeId>& reference) {
  std::vector<VertexId> mate_m(g.num_vertices(), -1), mate_r(g.num_vertices(), -1);
  for (EdgeId e : m.edge_ids()) {
    mate_m[g.edge(e).u] = g.edge(e).v;
    mate_m[g.edge(e).v] = g.edge(e).u;
  }
  for (EdgeId e : reference) {
    mate_r[g.edge(e).u] = g.edge(e).v;
    mate_r[g.edge(e).v] = g.edge(e).u;
  }

  auto m_step = [&](VertexId v) {
    return (mate_m[v] >= 0 && mate_m[v] != mate_r[v]) ? mate_m[v] : -1;
  };
  auto r_step = [&](VertexId v) {
    return (mate_r[v] >= 0 && mate_r[v] != mate_m[v]) ? mate_r[v] : -1;
  };

  std::vector<char> visited(g.num_vertices(), 0);
  std::vector<char> keep_r_side(g.num_vertices(), 0);
  for (VertexId start = 0; start < g.num_vertices(); ++start) {
    if (visited[start] || (m_step(start) < 0 && r_step(start) < 0)) continue;
    // Gather the component of the symmetric difference containing start.
    std::vector<VertexId> comp{start};
    visited[start] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId next : {m_step(comp[i]), r_step(comp[i])}) {
        if (next >= 0 && !visited[next]) {
          visited[next] = 1;
          comp.push_back(next);
        }
      }
    }
    int m_count = 0, r_count = 0;
    for (VertexId v : comp) {
      if (m_step(v) > v) ++m_count;
      if (r_step(v) > v) ++r_count;
    }
    if (m_count == r_count) {
      for (VertexId v : comp) keep_r_side[v] = 1;
    }
  }

  std::vector<EdgeId> out;
  for (EdgeId e : m.edge_ids()) {
    const Edge& ed = g.edge(e);
    bool in_diff = mate_m[ed.u] == ed.v && mate_r[ed.u] != ed.v;
    if (!in_diff || !keep_r_side[ed.u]) out.push_back(e);
  }
  for (EdgeId e : reference) {
    const Edge& ed = g.edge(e);
    bool in_diff = mate_r[ed.u] == ed.v && mate_m[ed.u] != ed.v;
    if (in_diff && keep_r_side[ed.u]) out.push_back(e);
  }
  return out;
}

}  // namespace

Rational PeelingTrace::exact_load(VertexId v) const {
  long long total = 0;
  for (const AdjEntry& a : parent->neighbors(v)) total += count[a.edge];
  return Rational(total, t);
}

PeelingTrace build_x(const Graph& g, const EdgeSubset& h, const EdgeSubset& u,
                     const EdgeSubset& e_r, int t) {
  if (t < 1) throw std::invalid_argument("peeling iteration count must be >= 1");
  Matching m_star = max_matching_auto(g, e_r);
  std::vector<char> in_m_star(g.num_edges(), 0);
  for (EdgeId e : m_star.edge_ids()) in_m_star[e] = 1;

  EdgeSubset hu = h.set_union(u);
  std::vector<EdgeId> m_in, m_out;
  std::vector<char> in_m_in(g.num_edges(), 0);
  for (EdgeId e : m_star.edge_ids()) {
    if (hu.contains(e)) {
      m_in.push_back(e);
      in_m_in[e] = 1;
    } else {
      m_out.push_back(e);
    }
  }

  EdgeSubset h_i = h, u_i = u;
  std::vector<std::vector<EdgeId>> peels;
  std::vector<std::pair<EdgeId, EdgeId>> sizes;
  std::vector<int> count(g.num_edges(), 0);
  for (int i = 0; i < t; ++i) {
    sizes.emplace_back(h_i.size(), u_i.size());
    Matching m_i = max_matching_auto(g, h_i.set_union(u_i));
    std::vector<EdgeId> aligned = align_to_reference(g, m_i, m_in);
    Matching m_i_aligned(g, aligned);
    std::vector<EdgeId> peeled;
    for (EdgeId e : m_i_aligned.edge_ids()) {
      ++count[e];
      if (!in_m_in[e]) peeled.push_back(e);
    }
    EdgeSubset peel_set = EdgeSubset::of(g, std::move(peeled));
    h_i = h_i.set_difference(peel_set);
    u_i = u_i.set_difference(peel_set);
    peels.push_back(m_i_aligned.edge_ids());
  }

  std::vector<std::pair<EdgeId, double>> weights;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (count[e] > 0) {
      weights.emplace_back(e, static_cast<double>(count[e]) / static_cast<double>(t));
    }
  }
  return PeelingTrace{&g,
                      t,
                      std::move(peels),
                      std::move(sizes),
                      std::move(count),
                      FractionalMatching(g, std::move(weights)),
                      std::move(m_star),
                      std::move(in_m_star),
                      std::move(m_in),
                      std::move(m_out),
                      std::move(in_m_in)};
}

YSample make_y(const PeelingTrace& trace, const std::vector<EdgeId>& m_prime, double p,
               double epsilon) {
  const Graph& g = *trace.parent;
  std::vector<char> in_mp(g.num_edges(), 0);
  std::vector<char> mp_covers(g.num_vertices(), 0);
  for (EdgeId e : m_prime) {
    if (!trace.in_m_star[e]) throw std::invalid_argument("M' must be a subset of M*");
    in_mp[e] = 1;
    mp_covers[g.edge(e).u] = 1;
    mp_covers[g.edge(e).v] = 1;
  }

  std::vector<EdgeId> mp_sorted = m_prime;
  std::sort(mp_sorted.begin(), mp_sorted.end());
  std::vector<std::pair<EdgeId, double>> yhat;
  std::vector<double> yhat_load(g.num_vertices(), 0.0);
  std::vector<std::pair<EdgeId, double>> p_e;

  auto emit = [&](EdgeId e, double v) {
    if (v == 0.0) return;
    yhat.emplace_back(e, v);
    yhat_load[g.edge(e).u] += v;
    yhat_load[g.edge(e).v] += v;
  };

  for (EdgeId e : trace.m_star.edge_ids()) {
    emit(e, in_mp[e] ? 1.0 : trace.x.weight(e));
  }
  for (const auto& [e, xe] : trace.x.entries()) {
    if (trace.in_m_star[e]) continue;
    const Edge& ed = g.edge(e);
    int c = (trace.m_star.covers(ed.u) ? 1 : 0) + (trace.m_star.covers(ed.v) ? 1 : 0);
    double pe = std::pow(1.0 - p, c);
    p_e.emplace_back(e, pe);
    if (mp_covers[ed.u] || mp_covers[ed.v]) continue;  // adjacent to M'
    emit(e, (1.0 - p) * xe / pe);
  }
  std::sort(yhat.begin(), yhat.end());

  std::vector<std::pair<EdgeId, double>> y_entries;
  for (const auto& [e, v] : yhat) {
    const Edge& ed = g.edge(e);
    if (yhat_load[ed.u] > 1.0 + epsilon || yhat_load[ed.v] > 1.0 + epsilon) continue;
    y_entries.emplace_back(e, v / (1.0 + epsilon));
  }
  return YSample{std::move(mp_sorted),
                 std::move(yhat),
                 std::move(yhat_load),
                 std::move(p_e),
                 FractionalMatching(g, std::move(y_entries)),
                 p,
                 epsilon};
}

YSample sample_y(const PeelingTrace& trace, const EdgeSubset& e_b, double p, double epsilon,
                 std::mt19937_64& rng) {
  if (!(p > 0.0 && p <= 0.5)) throw std::invalid_argument("p must be in (0, 1/2]");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<EdgeId> m_prime;
  for (EdgeId e : trace.m_in) {
    if (unif(rng) < p) m_prime.push_back(e);
  }
  for (EdgeId e : trace.m_out) {
    if (e_b.contains(e) && unif(rng) < 1.0 - epsilon) m_prime.push_back(e);
  }
  return make_y(trace, m_prime, p, epsilon);
}

double expected_yhat_load(const PeelingTrace& trace, double p, VertexId v) {
  double chi = trace.m_star.covers(v) ? 1.0 : 0.0;
  return p * chi + (1.0 - p) * trace.x.load(v);
}

Rational exact_expected_yhat_load_closed_form(const PeelingTrace& trace, const Rational& p,
                                              VertexId v) {
  Rational chi = trace.m_star.covers(v) ? 1 : 0;
  return p * chi + (1 - p) * trace.exact_load(v);
}

std::vector<Rational> exact_expected_yhat_loads(const PeelingTrace& trace, const Rational& p) {
  const Graph& g = *trace.parent;
  const std::vector<EdgeId>& star = trace.m_star.edge_ids();
  if (star.size() > 20) {
    throw std::invalid_argument("exact enumeration refuses |M*| > 20");
  }
  std::vector<Rational> acc(g.num_vertices(), 0);
  std::vector<char> in_mp(g.num_edges(), 0);
  std::vector<char> mp_covers(g.num_vertices(), 0);

  // Per-edge rational yhat values reused across outcomes.
  std::vector<Rational> x_exact(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (trace.count[e] > 0) x_exact[e] = Rational(trace.count[e], trace.t);
  }

  const std::uint64_t outcomes = std::uint64_t{1} << star.size();
  for (std::uint64_t mask = 0; mask < outcomes; ++mask) {
    Rational weight = 1;
    for (std::size_t i = 0; i < star.size(); ++i) {
      bool chosen = (mask >> i) & 1;
      weight *= chosen ? p : (1 - p);
      in_mp[star[i]] = chosen;
      const Edge& ed = g.edge(star[i]);
      mp_covers[ed.u] = chosen;
      mp_covers[ed.v] = chosen;
    }
    auto add = [&](EdgeId e, const Rational& v) {
      if (v == 0) return;
      acc[g.edge(e).u] += weight * v;
      acc[g.edge(e).v] += weight * v;
    };
    for (EdgeId e : star) add(e, in_mp[e] ? Rational(1) : x_exact[e]);
    for (const auto& [e, unused] : trace.x.entries()) {
      (void)unused;
      if (trace.in_m_star[e]) continue;
      const Edge& ed = g.edge(e);
      if (mp_covers[ed.u] || mp_covers[ed.v]) continue;
      int c = (trace.m_star.covers(ed.u) ? 1 : 0) + (trace.m_star.covers(ed.v) ? 1 : 0);
      // (1-p) * x_e / (1-p)^c
      Rational v = x_exact[e];
      if (c == 0) {
        v *= (1 - p);
      } else if (c == 2) {
        v /= (1 - p);
      }
      add(e, v);
    }
  }
  return acc;
}

std::vector<double> overflow_probability(const PeelingTrace& trace, double p, double epsilon,
                                         int trials, std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const Graph& g = *trace.parent;
  std::vector<double> freq(g.num_vertices(), 0.0);
  std::vector<double> load(g.num_vertices(), 0.0);
  std::vector<char> mp_covers(g.num_vertices(), 0);
  std::vector<char> in_mp(g.num_edges(), 0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  for (int trial = 0; trial < trials; ++trial) {
    std::fill(load.begin(), load.end(), 0.0);
    std::fill(mp_covers.begin(), mp_covers.end(), 0);
    for (EdgeId e : trace.m_star.edge_ids()) {
      in_mp[e] = unif(rng) < p;
      if (in_mp[e]) {
        mp_covers[g.edge(e).u] = 1;
        mp_covers[g.edge(e).v] = 1;
      }
    }
    for (EdgeId e : trace.m_star.edge_ids()) {
      double v = in_mp[e] ? 1.0 : trace.x.weight(e);
      load[g.edge(e).u] += v;
      load[g.edge(e).v] += v;
    }
    for (const auto& [e, xe] : trace.x.entries()) {
      if (trace.in_m_star[e]) continue;
      const Edge& ed = g.edge(e);
      if (mp_covers[ed.u] || mp_covers[ed.v]) continue;
      int c = (trace.m_star.covers(ed.u) ? 1 : 0) + (trace.m_star.covers(ed.v) ? 1 : 0);
      double v = (1.0 - p) * xe / std::pow(1.0 - p, c);
      load[ed.u] += v;
      load[ed.v] += v;
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (load[v] > 1.0 + epsilon) freq[v] += 1.0;
    }
  }
  for (double& f : freq) f /= trials;
  return freq;
}

namespace {

struct AugmentSearch {
  const Graph& g;
  std::vector<EdgeId> edges;
  std::vector<char> used_vertex;
  std::vector<EdgeId> current, best;
  long long best_twice = -1;
  long long nodes = 0;

  explicit AugmentSearch(const Graph& graph) : g(graph), used_vertex(graph.num_vertices(), 0) {}

  long long mu_without_current() {
    std::vector<VertexId> removed;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (used_vertex[v]) removed.push_back(v);
    }
    VertexRemoval r = remove_vertices(g, removed);
    return max_matching_auto(r.graph, EdgeSubset::full(r.graph)).size();
  }

  long long rest_matching_bound(std::size_t idx) {
    std::vector<EdgeId> compatible;
    for (std::size_t i = idx; i < edges.size(); ++i) {
      const Edge& ed = g.edge(edges[i]);
      if (!used_vertex[ed.u] && !used_vertex[ed.v]) compatible.push_back(edges[i]);
    }
    if (compatible.empty()) return 0;
    return max_matching_general(g, EdgeSubset::of(g, std::move(compatible))).size();
  }

  void evaluate() {
    long long twice = 2 * static_cast<long long>(current.size()) + mu_without_current();
    if (twice > best_twice) {
      best_twice = twice;
      best = current;
    }
  }

  void rec(std::size_t idx) {
    ++nodes;
    long long rest = rest_matching_bound(idx);
    if (rest == 0) {
      evaluate();
      return;
    }
    long long ub = 2 * (static_cast<long long>(current.size()) + rest) + mu_without_current();
    if (ub <= best_twice) return;
    const Edge& ed = g.edge(edges[idx]);
    if (!used_vertex[ed.u] && !used_vertex[ed.v]) {
      used_vertex[ed.u] = used_vertex[ed.v] = 1;
      current.push_back(edges[idx]);
      rec(idx + 1);
      current.pop_back();
      used_vertex[ed.u] = used_vertex[ed.v] = 0;
    }
    rec(idx + 1);
  }
};

}  // namespace

AugmentBoundResult verify_augment_bound(const Graph& g, const EdgeSubset& h, const EdgeSubset& u,
                                        int edge_cap) {
  EdgeSubset hu = h.set_union(u);
  if (hu.size() > edge_cap) {
    throw std::invalid_argument("augment-bound search refuses " + std::to_string(hu.size()) +
                                " edges (cap " + std::to_string(edge_cap) + ")");
  }
  AugmentSearch search(g);
  // Outer-matching edges first: they reach strong incumbents quickly on the
  // layered families. The bound proof does not depend on the order.
  for (EdgeId e : u.edge_ids()) search.edges.push_back(e);
  for (EdgeId e : h.set_difference(u).edge_ids()) search.edges.push_back(e);
  search.rec(0);
  return {search.best_twice, Matching(g, search.best), search.nodes};
}

}  // namespace edcslab
