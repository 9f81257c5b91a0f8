#include "edcslab/matchers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace edcslab {

namespace {

// Adjacency of the subset as (neighbor, edge) lists, ascending per vertex.
std::vector<std::vector<AdjEntry>> subset_adjacency(const Graph& g, const EdgeSubset& edges) {
  std::vector<std::vector<AdjEntry>> adj(g.num_vertices());
  for (EdgeId e : edges.edge_ids()) {
    const Edge& ed = g.edge(e);
    adj[ed.u].push_back({ed.v, e});
    adj[ed.v].push_back({ed.u, e});
  }
  return adj;
}

Matching matching_from_mates(const Graph& g, const EdgeSubset& edges,
                             const std::vector<VertexId>& mate) {
  std::vector<EdgeId> ids;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] > v) {
      auto e = g.find_edge(v, mate[v]);
      if (!e || !edges.contains(*e)) throw std::logic_error("solver produced a non-member edge");
      ids.push_back(*e);
    }
  }
  return Matching(g, std::move(ids));
}

// Hopcroft–Karp state. Left side comes from the bipartition labels.
struct HopcroftKarp {
  const Graph& g;
  std::vector<std::vector<AdjEntry>> adj;
  std::vector<VertexId> left;
  std::vector<VertexId> mate;
  std::vector<int> dist;
  static constexpr int kInf = std::numeric_limits<int>::max();

  HopcroftKarp(const Graph& graph, const EdgeSubset& edges)
      : g(graph),
        adj(subset_adjacency(graph, edges)),
        left(graph.left_vertices()),
        mate(graph.num_vertices(), -1),
        dist(graph.num_vertices(), 0) {}

  bool bfs() {
    std::vector<VertexId> queue;
    for (VertexId u : left) {
      if (mate[u] < 0) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId u = queue[qi];
      for (const AdjEntry& a : adj[u]) {
        VertexId w = mate[a.to];
        if (w < 0) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(VertexId u) {
    for (const AdjEntry& a : adj[u]) {
      VertexId w = mate[a.to];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        mate[u] = a.to;
        mate[a.to] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  void solve() {
    // Greedy seed pass.
    for (VertexId u : left) {
      if (mate[u] >= 0) continue;
      for (const AdjEntry& a : adj[u]) {
        if (mate[a.to] < 0) {
          mate[u] = a.to;
          mate[a.to] = u;
          break;
        }
      }
    }
    while (bfs()) {
      for (VertexId u : left) {
        if (mate[u] < 0) dfs(u);
      }
    }
  }

  // König cover: alternating-reachable set Z from free left vertices;
  // cover = (L \ Z) ∪ (R ∩ Z).
  std::vector<VertexId> cover() const {
    std::vector<char> z(g.num_vertices(), 0);
    std::vector<VertexId> queue;
    for (VertexId u : left) {
      if (mate[u] < 0) {
        z[u] = 1;
        queue.push_back(u);
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId u = queue[qi];  // always a left vertex
      for (const AdjEntry& a : adj[u]) {
        if (z[a.to] || mate[u] == a.to) continue;
        z[a.to] = 1;
        VertexId w = mate[a.to];
        if (w >= 0 && !z[w]) {
          z[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      bool is_left = g.on_left(v);
      if ((is_left && !z[v] && mate[v] >= 0) || (!is_left && z[v])) out.push_back(v);
    }
    return out;
  }
};

// Edmonds' blossom algorithm with base-array contraction.
struct Blossom {
  int n;
  std::vector<std::vector<VertexId>> adj;
  std::vector<VertexId> mate, parent, base;
  std::vector<char> used, in_blossom;

  Blossom(const Graph& g, const EdgeSubset& edges)
      : n(g.num_vertices()),
        adj(n),
        mate(n, -1),
        parent(n, -1),
        base(n),
        used(n, 0),
        in_blossom(n, 0) {
    for (EdgeId e : edges.edge_ids()) {
      const Edge& ed = g.edge(e);
      adj[ed.u].push_back(ed.v);
      adj[ed.v].push_back(ed.u);
    }
  }

  VertexId lowest_common_base(VertexId a, VertexId b) {
    std::vector<char> mark(n, 0);
    VertexId x = a;
    while (true) {
      x = base[x];
      mark[x] = 1;
      if (mate[x] < 0) break;
      x = parent[mate[x]];
    }
    VertexId y = b;
    while (true) {
      y = base[y];
      if (mark[y]) return y;
      y = parent[mate[y]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  }

  bool find_augmenting_path(VertexId root, std::vector<VertexId>& queue) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (VertexId i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    queue.clear();
    queue.push_back(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId v = queue[qi];
      for (VertexId to : adj[v]) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] >= 0 && parent[mate[to]] >= 0)) {
          VertexId cur_base = lowest_common_base(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (VertexId i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (mate[to] < 0) {
            // Flip matched/unmatched along the path ending at `to`.
            VertexId u = to;
            while (u >= 0) {
              VertexId pv = parent[u];
              VertexId next = mate[pv];
              mate[u] = pv;
              mate[pv] = u;
              u = next;
            }
            return true;
          }
          used[mate[to]] = 1;
          queue.push_back(mate[to]);
        }
      }
    }
    return false;
  }

  void solve() {
    // Greedy seed pass.
    for (VertexId v = 0; v < n; ++v) {
      if (mate[v] >= 0) continue;
      for (VertexId to : adj[v]) {
        if (mate[to] < 0) {
          mate[v] = to;
          mate[to] = v;
          break;
        }
      }
    }
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
      if (mate[v] < 0) find_augmenting_path(v, queue);
    }
  }
};

// Branch and bound over edge inclusion; prunes with the free-vertex bound
// and a greedy incumbent.
struct BruteForce {
  const Graph& g;
  std::vector<EdgeId> edge_ids;
  std::vector<char> vertex_used;
  std::vector<EdgeId> current, best;

  BruteForce(const Graph& graph, const EdgeSubset& edges)
      : g(graph), edge_ids(edges.edge_ids()), vertex_used(graph.num_vertices(), 0) {}

  void seed_greedy() {
    std::vector<char> used(g.num_vertices(), 0);
    for (EdgeId e : edge_ids) {
      const Edge& ed = g.edge(e);
      if (!used[ed.u] && !used[ed.v]) {
        used[ed.u] = used[ed.v] = 1;
        best.push_back(e);
      }
    }
  }

  int free_vertices() const {
    int free_count = 0;
    for (char u : vertex_used) free_count += (u == 0);
    return free_count;
  }

  void rec(std::size_t idx, int free_count) {
    std::size_t remaining = edge_ids.size() - idx;
    std::size_t bound = current.size() + std::min<std::size_t>(remaining, free_count / 2);
    if (bound <= best.size()) return;
    if (idx == edge_ids.size()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    const Edge& ed = g.edge(edge_ids[idx]);
    if (!vertex_used[ed.u] && !vertex_used[ed.v]) {
      vertex_used[ed.u] = vertex_used[ed.v] = 1;
      current.push_back(edge_ids[idx]);
      rec(idx + 1, free_count - 2);
      current.pop_back();
      vertex_used[ed.u] = vertex_used[ed.v] = 0;
    }
    rec(idx + 1, free_count);
  }

  Matching run() {
    seed_greedy();
    rec(0, free_vertices());
    return Matching(g, best);
  }
};

}  // namespace

Matching max_matching_bipartite(const Graph& g, const EdgeSubset& edges) {
  if (!g.has_bipartition()) {
    throw std::invalid_argument("bipartite solver requires bipartition labels");
  }
  HopcroftKarp hk(g, edges);
  hk.solve();
  return matching_from_mates(g, edges, hk.mate);
}

Matching max_matching_bipartite(const Graph& g) {
  return max_matching_bipartite(g, EdgeSubset::full(g));
}

KonigResult max_matching_bipartite_with_cover(const Graph& g, const EdgeSubset& edges) {
  if (!g.has_bipartition()) {
    throw std::invalid_argument("bipartite solver requires bipartition labels");
  }
  HopcroftKarp hk(g, edges);
  hk.solve();
  return {matching_from_mates(g, edges, hk.mate), hk.cover()};
}

Matching max_matching_general(const Graph& g, const EdgeSubset& edges) {
  Blossom solver(g, edges);
  solver.solve();
  return matching_from_mates(g, edges, solver.mate);
}

Matching max_matching_general(const Graph& g) {
  return max_matching_general(g, EdgeSubset::full(g));
}

Matching max_matching_auto(const Graph& g, const EdgeSubset& edges) {
  return g.has_bipartition() ? max_matching_bipartite(g, edges) : max_matching_general(g, edges);
}

Matching max_matching_bruteforce(const Graph& g, const EdgeSubset& edges, int edge_cap) {
  if (edges.size() > edge_cap) {
    throw std::invalid_argument("bruteforce matcher: " + std::to_string(edges.size()) +
                                " edges exceeds cap " + std::to_string(edge_cap));
  }
  BruteForce bf(g, edges);
  return bf.run();
}

Matching max_matching_bruteforce(const Graph& g, int edge_cap) {
  return max_matching_bruteforce(g, EdgeSubset::full(g), edge_cap);
}

FractionalMatching::FractionalMatching(const Graph& g,
                                       std::vector<std::pair<EdgeId, double>> weights)
    : parent_(&g), load_(g.num_vertices(), 0.0) {
  std::sort(weights.begin(), weights.end());
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i - 1].first == weights[i].first) {
      throw std::invalid_argument("duplicate edge weight entry");
    }
  }
  for (auto& [e, w] : weights) {
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("edge id out of range");
    if (w < 0.0 || w > 1.0 + 1e-9) {
      throw std::invalid_argument("edge weight outside [0,1]: " + std::to_string(w));
    }
    w = std::min(w, 1.0);
    if (w == 0.0) continue;
    entries_.emplace_back(e, w);
    load_[g.edge(e).u] += w;
    load_[g.edge(e).v] += w;
  }
}

FractionalMatching FractionalMatching::indicator(const Matching& m) {
  std::vector<std::pair<EdgeId, double>> w;
  w.reserve(m.edge_ids().size());
  for (EdgeId e : m.edge_ids()) w.emplace_back(e, 1.0);
  return FractionalMatching(m.parent(), std::move(w));
}

double FractionalMatching::weight(EdgeId e) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(e, -1.0));
  if (it != entries_.end() && it->first == e) return it->second;
  return 0.0;
}

double fractional_size(const FractionalMatching& x) {
  double s = 0.0;
  for (const auto& [e, w] : x.entries()) s += w;
  return s;
}

namespace {

// ESU-style enumeration of connected vertex sets of the support graph.
struct OddSetScan {
  int s_max;
  double tolerance;
  const std::vector<std::vector<std::pair<VertexId, double>>>& adj;
  std::vector<char> in_sub, seen;
  std::vector<VertexId> sub;
  double inside = 0.0;
  long long checked = 0;
  std::vector<BlossomViolation>* out;

  void check() {
    ++checked;
    double bound = std::floor(sub.size() / 2.0);
    if (inside > bound + tolerance) {
      out->push_back({sub, inside, inside - bound});
    }
  }

  void rec(const std::vector<VertexId>& ext, VertexId anchor) {
    if (sub.size() >= 3 && sub.size() % 2 == 1) check();
    if (static_cast<int>(sub.size()) == s_max) return;
    for (std::size_t i = 0; i < ext.size(); ++i) {
      VertexId w = ext[i];
      std::vector<VertexId> next(ext.begin() + i + 1, ext.end());
      std::vector<VertexId> fresh;
      double add = 0.0;
      for (const auto& [u, wt] : adj[w]) {
        if (in_sub[u]) add += wt;
        if (u > anchor && !seen[u]) {
          seen[u] = 1;
          fresh.push_back(u);
          next.push_back(u);
        }
      }
      in_sub[w] = 1;
      sub.push_back(w);
      inside += add;
      rec(next, anchor);
      inside -= add;
      sub.pop_back();
      in_sub[w] = 0;
      for (VertexId u : fresh) seen[u] = 0;
    }
  }
};

}  // namespace

BlossomCheckReport check_blossom_inequalities(const FractionalMatching& x, int s_max,
                                              double tolerance) {
  if (s_max < 3 || s_max > 9) {
    throw std::invalid_argument("s_max must be in [3, 9], got " + std::to_string(s_max));
  }
  const Graph& g = x.parent();
  std::vector<std::vector<std::pair<VertexId, double>>> adj(g.num_vertices());
  for (const auto& [e, w] : x.entries()) {
    const Edge& ed = g.edge(e);
    adj[ed.u].emplace_back(ed.v, w);
    adj[ed.v].emplace_back(ed.u, w);
  }

  BlossomCheckReport report{s_max, tolerance, 0, {}};
  OddSetScan scan{s_max, tolerance, adj, std::vector<char>(g.num_vertices(), 0),
                  std::vector<char>(g.num_vertices(), 0), {}, 0.0, 0, &report.violations};
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (adj[v].empty()) continue;
    std::vector<VertexId> ext;
    for (const auto& [u, wt] : adj[v]) {
      if (u > v && !scan.seen[u]) {
        scan.seen[u] = 1;
        ext.push_back(u);
      }
    }
    scan.in_sub[v] = 1;
    scan.sub.push_back(v);
    scan.rec(ext, v);
    scan.sub.pop_back();
    scan.in_sub[v] = 0;
    for (VertexId u : ext) scan.seen[u] = 0;
  }
  report.sets_checked = scan.checked;
  return report;
}

}  // namespace edcslab
