#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace edcslab {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Canonical edge: u < v.
struct Edge {
  VertexId u;
  VertexId v;
};

struct AdjEntry {
  VertexId to;
  EdgeId edge;
};

// Immutable simple graph. Edges are stored once in canonical (min,max)
// orientation, sorted lexicographically; edge ids are positions in that
// list, so ids are deterministic for a given edge set. Self-loops and
// parallel edges are rejected at construction with a diagnostic.
// Instances are safe to share across threads once constructed.
class Graph {
 public:
  Graph(VertexId num_vertices, const std::vector<std::pair<VertexId, VertexId>>& edge_list);
  // Bipartite variant: `left` lists the left-side vertices; every edge must
  // cross the bipartition.
  Graph(VertexId num_vertices, const std::vector<std::pair<VertexId, VertexId>>& edge_list,
        const std::vector<VertexId>& left);

  VertexId num_vertices() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const AdjEntry> neighbors(VertexId v) const {
    return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
  }
  VertexId degree(VertexId v) const { return adj_offset_[v + 1] - adj_offset_[v]; }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  bool has_bipartition() const { return bipartite_; }
  bool on_left(VertexId v) const { return left_[v] != 0; }
  std::vector<VertexId> left_vertices() const;

 private:
  void build(const std::vector<std::pair<VertexId, VertexId>>& edge_list);

  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeId> adj_offset_;
  std::vector<AdjEntry> adj_;
  bool bipartite_ = false;
  std::vector<char> left_;
};

// Subset of a parent graph's edges. Supports O(1) membership and set
// algebra; adjacency is iterated through the parent graph.
class EdgeSubset {
 public:
  static EdgeSubset empty(const Graph& g);
  static EdgeSubset full(const Graph& g);
  static EdgeSubset of(const Graph& g, std::vector<EdgeId> ids);

  const Graph& parent() const { return *parent_; }
  bool contains(EdgeId e) const { return member_[e] != 0; }
  EdgeId size() const { return static_cast<EdgeId>(ids_.size()); }
  bool is_empty() const { return ids_.empty(); }
  // Sorted ascending.
  const std::vector<EdgeId>& edge_ids() const { return ids_; }

  EdgeSubset set_union(const EdgeSubset& other) const;
  EdgeSubset set_difference(const EdgeSubset& other) const;
  EdgeSubset set_intersection(const EdgeSubset& other) const;

  bool operator==(const EdgeSubset& other) const { return ids_ == other.ids_; }

 private:
  EdgeSubset(const Graph& g, std::vector<EdgeId> ids);

  const Graph* parent_;
  std::vector<EdgeId> ids_;
  std::vector<char> member_;
};

// Number of subset edges incident to v.
int degree_in(const EdgeSubset& subset, VertexId v);

// Edge subset whose members are pairwise vertex-disjoint; verified at
// construction.
class Matching {
 public:
  Matching(const Graph& g, std::vector<EdgeId> ids);

  const Graph& parent() const { return *parent_; }
  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<EdgeId>& edge_ids() const { return ids_; }
  VertexId mate(VertexId v) const { return mate_[v]; }
  bool covers(VertexId v) const { return mate_[v] >= 0; }
  bool contains(EdgeId e) const;
  EdgeSubset as_subset() const { return EdgeSubset::of(*parent_, ids_); }

 private:
  const Graph* parent_;
  std::vector<EdgeId> ids_;
  std::vector<VertexId> mate_;
};

// Induced subgraph on V \ removed, with the vertex renumbering used.
struct VertexRemoval {
  Graph graph;
  std::vector<VertexId> old_to_new;  // -1 for removed vertices
  std::vector<VertexId> new_to_old;
};

VertexRemoval remove_vertices(const Graph& g, const std::vector<VertexId>& removed);

// True iff every subset edge has at least one endpoint in `cover`.
bool is_vertex_cover(const EdgeSubset& subset, const std::vector<VertexId>& cover);

}  // namespace edcslab
