#pragma once

#include <random>
#include <string>
#include <vector>

#include "edcslab/graph.hpp"

namespace edcslab {

// Layered bipartite family: `groups` equally sized groups A_1..A_g on the
// left and B_1..B_g on the right. Consecutive pairs (A_i, B_i) carry
// perfect matchings M_i; the shifted pairs (A_i, B_{i+1}) are complete
// bipartite blocks K_i. Vertex layout: A_i = [ (i-1)m, i*m ),
// B_i = [ g*m + (i-1)m, g*m + i*m ).
struct LayeredSpec {
  int groups = 0;
  int m = 0;
  std::vector<std::vector<EdgeId>> matching_edges;  // M_1..M_g
  std::vector<std::vector<EdgeId>> block_edges;     // K_1..K_{g-1}

  VertexId a_vertex(int group, int index) const;  // group is 1-based
  VertexId b_vertex(int group, int index) const;
};

struct LayeredInstance {
  Graph graph;
  LayeredSpec spec;
};

// Three groups: M_1, M_2, M_3 perfect matchings; K_1 = A_1 x B_2 and
// K_2 = A_2 x B_3 complete. 6m vertices, 3m + 2m^2 edges, mu = 3m.
LayeredInstance gen_three_layer(int m);

// Four groups: M_1..M_4, K_1..K_3. 8m vertices, 4m + 3m^2 edges, mu = 4m.
LayeredInstance gen_four_layer(int m);

// H that is (beta/2)-regular on every complete block, assembled from beta/2
// disjoint perfect matchings of each block (circulant shifts, rotated by a
// seeded offset). Middle-matching edges then have edge-degree exactly beta
// and stay out of the underfull set, while the outer matchings fall below
// any threshold above beta/2. Requires beta even, beta/2 <= m; when k > 0
// is supplied the three-layer admissibility bound beta <= |V|/(12k) is
// enforced in addition, and four-layer instances enforce beta <= |V|/4.
EdgeSubset adversarial_h(const Graph& g, const LayeredSpec& spec, int beta, std::mt19937_64& rng,
                         int k = 0);

enum class RandomFamily { gnp, bipartite_gnp, planted_matching };

RandomFamily random_family_from_string(const std::string& name);
std::string to_string(RandomFamily family);

// Reproducible random instances.
//  gnp:              G(n, density)
//  bipartite_gnp:    parts of size n/2, each cross pair present w.p. density
//  planted_matching: bipartite, planted perfect matching plus density noise
Graph gen_random(RandomFamily family, VertexId n, double density, std::uint64_t seed);

// JSON sidecar describing the group layout; written next to generated
// edge-list files.
std::string layered_sidecar_json(const LayeredSpec& spec);

}  // namespace edcslab
