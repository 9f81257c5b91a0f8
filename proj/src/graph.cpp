#include "edcslab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace edcslab {

namespace {

std::string edge_str(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(VertexId num_vertices, const std::vector<std::pair<VertexId, VertexId>>& edge_list)
    : n_(num_vertices), left_(static_cast<std::size_t>(num_vertices), 0) {
  build(edge_list);
}

Graph::Graph(VertexId num_vertices, const std::vector<std::pair<VertexId, VertexId>>& edge_list,
             const std::vector<VertexId>& left)
    : n_(num_vertices), left_(static_cast<std::size_t>(num_vertices), 0) {
  bipartite_ = true;
  for (VertexId v : left) {
    if (v < 0 || v >= n_) throw std::invalid_argument("left vertex out of range: " + std::to_string(v));
    left_[v] = 1;
  }
  build(edge_list);
  for (const Edge& e : edges_) {
    if (left_[e.u] == left_[e.v]) {
      throw std::invalid_argument("edge does not cross bipartition: " + edge_str(e.u, e.v));
    }
  }
}

void Graph::build(const std::vector<std::pair<VertexId, VertexId>>& edge_list) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::invalid_argument("edge endpoint out of range: " + edge_str(u, v));
    }
    if (u == v) throw std::invalid_argument("self-loop rejected: " + edge_str(u, v));
    edges_.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw std::invalid_argument("parallel edge rejected: " + edge_str(edges_[i].u, edges_[i].v));
    }
  }

  adj_offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_offset_[e.u + 1];
    ++adj_offset_[e.v + 1];
  }
  for (VertexId v = 0; v < n_; ++v) adj_offset_[v + 1] += adj_offset_[v];
  adj_.resize(edges_.size() * 2);
  std::vector<EdgeId> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    adj_[cursor[edges_[e].u]++] = {edges_[e].v, e};
    adj_[cursor[edges_[e].v]++] = {edges_[e].u, e};
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u == v) return std::nullopt;
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& a, const Edge& b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  });
  if (it != edges_.end() && it->u == key.u && it->v == key.v) {
    return static_cast<EdgeId>(it - edges_.begin());
  }
  return std::nullopt;
}

std::vector<VertexId> Graph::left_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v) {
    if (left_[v]) out.push_back(v);
  }
  return out;
}

EdgeSubset::EdgeSubset(const Graph& g, std::vector<EdgeId> ids)
    : parent_(&g), ids_(std::move(ids)), member_(static_cast<std::size_t>(g.num_edges()), 0) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  for (EdgeId e : ids_) {
    if (e < 0 || e >= g.num_edges()) {
      throw std::invalid_argument("edge id out of range: " + std::to_string(e));
    }
    member_[e] = 1;
  }
}

EdgeSubset EdgeSubset::empty(const Graph& g) { return EdgeSubset(g, {}); }

EdgeSubset EdgeSubset::full(const Graph& g) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) ids[e] = e;
  return EdgeSubset(g, std::move(ids));
}

EdgeSubset EdgeSubset::of(const Graph& g, std::vector<EdgeId> ids) {
  return EdgeSubset(g, std::move(ids));
}

EdgeSubset EdgeSubset::set_union(const EdgeSubset& other) const {
  std::vector<EdgeId> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  return EdgeSubset(*parent_, std::move(out));
}

EdgeSubset EdgeSubset::set_difference(const EdgeSubset& other) const {
  std::vector<EdgeId> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out));
  return EdgeSubset(*parent_, std::move(out));
}

EdgeSubset EdgeSubset::set_intersection(const EdgeSubset& other) const {
  std::vector<EdgeId> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
  return EdgeSubset(*parent_, std::move(out));
}

int degree_in(const EdgeSubset& subset, VertexId v) {
  const Graph& g = subset.parent();
  if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
  int d = 0;
  for (const AdjEntry& a : g.neighbors(v)) {
    if (subset.contains(a.edge)) ++d;
  }
  return d;
}

Matching::Matching(const Graph& g, std::vector<EdgeId> ids)
    : parent_(&g), ids_(std::move(ids)), mate_(static_cast<std::size_t>(g.num_vertices()), -1) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  for (EdgeId e : ids_) {
    if (e < 0 || e >= g.num_edges()) {
      throw std::invalid_argument("edge id out of range: " + std::to_string(e));
    }
    const Edge& ed = g.edge(e);
    if (mate_[ed.u] >= 0 || mate_[ed.v] >= 0) {
      throw std::invalid_argument("not a matching: edge " + edge_str(ed.u, ed.v) +
                                  " shares a vertex with another member");
    }
    mate_[ed.u] = ed.v;
    mate_[ed.v] = ed.u;
  }
}

bool Matching::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

VertexRemoval remove_vertices(const Graph& g, const std::vector<VertexId>& removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : removed) {
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
    gone[v] = 1;
  }
  std::vector<VertexId> old_to_new(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<VertexId> new_to_old;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) {
      old_to_new[v] = static_cast<VertexId>(new_to_old.size());
      new_to_old.push_back(v);
    }
  }
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (const Edge& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) kept.emplace_back(old_to_new[e.u], old_to_new[e.v]);
  }
  if (g.has_bipartition()) {
    std::vector<VertexId> left;
    for (VertexId v : new_to_old) {
      if (g.on_left(v)) left.push_back(old_to_new[v]);
    }
    return {Graph(static_cast<VertexId>(new_to_old.size()), kept, left), std::move(old_to_new),
            std::move(new_to_old)};
  }
  return {Graph(static_cast<VertexId>(new_to_old.size()), kept), std::move(old_to_new),
          std::move(new_to_old)};
}

bool is_vertex_cover(const EdgeSubset& subset, const std::vector<VertexId>& cover) {
  const Graph& g = subset.parent();
  std::vector<char> in_cover(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : cover) {
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
    in_cover[v] = 1;
  }
  for (EdgeId e : subset.edge_ids()) {
    const Edge& ed = g.edge(e);
    if (!in_cover[ed.u] && !in_cover[ed.v]) return false;
  }
  return true;
}

}  // namespace edcslab
