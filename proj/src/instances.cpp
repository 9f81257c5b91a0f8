#include "edcslab/instances.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace edcslab {

VertexId LayeredSpec::a_vertex(int group, int index) const {
  return static_cast<VertexId>((group - 1) * m + index);
}

VertexId LayeredSpec::b_vertex(int group, int index) const {
  return static_cast<VertexId>(groups * m + (group - 1) * m + index);
}

namespace {

LayeredInstance gen_layered(int groups, int m) {
  if (m < 1) throw std::invalid_argument("group size must be >= 1");
  LayeredSpec spec;
  spec.groups = groups;
  spec.m = m;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i <= groups; ++i) {
    for (int j = 0; j < m; ++j) edges.emplace_back(spec.a_vertex(i, j), spec.b_vertex(i, j));
  }
  for (int i = 1; i < groups; ++i) {
    for (int ja = 0; ja < m; ++ja) {
      for (int jb = 0; jb < m; ++jb) {
        edges.emplace_back(spec.a_vertex(i, ja), spec.b_vertex(i + 1, jb));
      }
    }
  }
  std::vector<VertexId> left(static_cast<std::size_t>(groups) * m);
  for (std::size_t v = 0; v < left.size(); ++v) left[v] = static_cast<VertexId>(v);
  Graph g(static_cast<VertexId>(2 * groups * m), edges, left);

  spec.matching_edges.resize(groups);
  for (int i = 1; i <= groups; ++i) {
    for (int j = 0; j < m; ++j) {
      spec.matching_edges[i - 1].push_back(*g.find_edge(spec.a_vertex(i, j), spec.b_vertex(i, j)));
    }
  }
  spec.block_edges.resize(groups - 1);
  for (int i = 1; i < groups; ++i) {
    for (int ja = 0; ja < m; ++ja) {
      for (int jb = 0; jb < m; ++jb) {
        spec.block_edges[i - 1].push_back(
            *g.find_edge(spec.a_vertex(i, ja), spec.b_vertex(i + 1, jb)));
      }
    }
  }
  return {std::move(g), std::move(spec)};
}

}  // namespace

LayeredInstance gen_three_layer(int m) { return gen_layered(3, m); }

LayeredInstance gen_four_layer(int m) { return gen_layered(4, m); }

EdgeSubset adversarial_h(const Graph& g, const LayeredSpec& spec, int beta, std::mt19937_64& rng,
                         int k) {
  if (beta % 2 != 0) throw std::invalid_argument("adversarial_h requires even beta");
  if (beta / 2 > spec.m) {
    throw std::invalid_argument("adversarial_h requires beta/2 <= m");
  }
  if (spec.groups == 3 && k > 0 && beta > g.num_vertices() / (12 * k)) {
    throw std::invalid_argument("three-layer family requires beta <= |V|/(12k)");
  }
  if (spec.groups == 4 && beta > g.num_vertices() / 4) {
    throw std::invalid_argument("four-layer family requires beta <= |V|/4");
  }

  std::vector<EdgeId> ids;
  for (int block = 1; block < spec.groups; ++block) {
    int rot = static_cast<int>(rng() % static_cast<std::uint64_t>(spec.m));
    for (int shift = 0; shift < beta / 2; ++shift) {
      for (int j = 0; j < spec.m; ++j) {
        VertexId a = spec.a_vertex(block, j);
        VertexId b = spec.b_vertex(block + 1, (j + rot + shift) % spec.m);
        ids.push_back(*g.find_edge(a, b));
      }
    }
  }
  return EdgeSubset::of(g, std::move(ids));
}

RandomFamily random_family_from_string(const std::string& name) {
  if (name == "gnp") return RandomFamily::gnp;
  if (name == "bipartite-gnp") return RandomFamily::bipartite_gnp;
  if (name == "planted-matching") return RandomFamily::planted_matching;
  throw std::invalid_argument("unknown random family: " + name);
}

std::string to_string(RandomFamily family) {
  switch (family) {
    case RandomFamily::gnp: return "gnp";
    case RandomFamily::bipartite_gnp: return "bipartite-gnp";
    case RandomFamily::planted_matching: return "planted-matching";
  }
  return "?";
}

namespace {

// Samples pair indices 0..total-1 independently with probability p by
// geometric skipping.
template <typename Emit>
void sample_pairs(long long total, double p, std::mt19937_64& rng, Emit emit) {
  if (p <= 0.0 || total <= 0) return;
  if (p >= 1.0) {
    for (long long i = 0; i < total; ++i) emit(i);
    return;
  }
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double log1mp = std::log1p(-p);
  long long i = -1;
  while (true) {
    double u = unif(rng);
    double skip = std::floor(std::log(1.0 - u) / log1mp);
    if (skip > static_cast<double>(total)) break;
    i += 1 + static_cast<long long>(skip);
    if (i >= total) break;
    emit(i);
  }
}

}  // namespace

Graph gen_random(RandomFamily family, VertexId n, double density, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;

  switch (family) {
    case RandomFamily::gnp: {
      long long total = static_cast<long long>(n) * (n - 1) / 2;
      sample_pairs(total, density, rng, [&](long long idx) {
        // idx-th pair in the row-major upper triangle.
        VertexId u = 0;
        long long row = static_cast<long long>(n) - 1;
        while (idx >= row) {
          idx -= row;
          --row;
          ++u;
        }
        edges.emplace_back(u, static_cast<VertexId>(u + 1 + idx));
      });
      return Graph(n, edges);
    }
    case RandomFamily::bipartite_gnp: {
      VertexId half = n / 2;
      long long total = static_cast<long long>(half) * half;
      sample_pairs(total, density, rng, [&](long long idx) {
        edges.emplace_back(static_cast<VertexId>(idx / half),
                           static_cast<VertexId>(half + idx % half));
      });
      std::vector<VertexId> left(half);
      for (VertexId v = 0; v < half; ++v) left[v] = v;
      return Graph(static_cast<VertexId>(2 * half), edges, left);
    }
    case RandomFamily::planted_matching: {
      VertexId half = n / 2;
      std::vector<char> present(static_cast<std::size_t>(half) * half, 0);
      for (VertexId v = 0; v < half; ++v) {
        edges.emplace_back(v, static_cast<VertexId>(half + v));
        present[static_cast<std::size_t>(v) * half + v] = 1;
      }
      long long total = static_cast<long long>(half) * half;
      sample_pairs(total, density, rng, [&](long long idx) {
        if (!present[idx]) {
          present[idx] = 1;
          edges.emplace_back(static_cast<VertexId>(idx / half),
                             static_cast<VertexId>(half + idx % half));
        }
      });
      std::vector<VertexId> left(half);
      for (VertexId v = 0; v < half; ++v) left[v] = v;
      return Graph(static_cast<VertexId>(2 * half), edges, left);
    }
  }
  throw std::invalid_argument("unknown random family");
}

std::string layered_sidecar_json(const LayeredSpec& spec) {
  nlohmann::ordered_json j;
  j["family"] = spec.groups == 3 ? "three-layer" : "four-layer";
  j["groups"] = spec.groups;
  j["m"] = spec.m;
  nlohmann::ordered_json ranges;
  for (int i = 1; i <= spec.groups; ++i) {
    ranges["A" + std::to_string(i)] = {spec.a_vertex(i, 0), spec.a_vertex(i, spec.m - 1) + 1};
    ranges["B" + std::to_string(i)] = {spec.b_vertex(i, 0), spec.b_vertex(i, spec.m - 1) + 1};
  }
  j["vertex_ranges"] = ranges;
  return j.dump(2) + "\n";
}

}  // namespace edcslab
