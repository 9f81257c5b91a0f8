#include "edcslab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edcslab {

Graph read_edge_list(std::istream& in) {
  std::string line;
  long long n = -1, m = -1;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream head(line);
    if (!(head >> n >> m) || n < 0 || m < 0) {
      throw std::runtime_error("edge list: bad header at line " + std::to_string(line_no));
    }
    break;
  }
  if (n < 0) throw std::runtime_error("edge list: missing header");

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  bool has_left = false;
  std::vector<VertexId> left;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == 'b') {
      std::istringstream body(line.substr(1));
      VertexId v;
      while (body >> v) left.push_back(v);
      has_left = true;
      continue;
    }
    std::istringstream body(line);
    long long u, v;
    if (!(body >> u >> v)) {
      throw std::runtime_error("edge list: bad edge at line " + std::to_string(line_no));
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw std::runtime_error("edge list: header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  }
  if (has_left) return Graph(static_cast<VertexId>(n), edges, left);
  return Graph(static_cast<VertexId>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (g.has_bipartition()) {
    out << 'b';
    for (VertexId v : g.left_vertices()) out << ' ' << v;
    out << '\n';
  }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(g, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace edcslab
