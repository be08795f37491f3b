#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kempe {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
// Neighbour lists are kept sorted; graphs with n <= 64 also carry a packed
// adjacency bit-matrix so adjacency tests are a single mask.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws std::invalid_argument on self-loops, parallel edges or ids out of range.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Bit row of v; only meaningful when has_bit_matrix().
  std::uint64_t row(Vertex v) const { return rows_[v]; }
  bool has_bit_matrix() const noexcept { return n_ <= 64; }

  // Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> rows_;
};

// Result of an operation that renumbers vertices: old id -> new id, -1 when removed.
struct VertexMap {
  std::vector<Vertex> forward;
  // new id -> a representative old id
  std::vector<Vertex> backward;
};

Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);

// Induced subgraph on `vertices`; new id i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

std::pair<Graph, VertexMap> remove_vertex(const Graph& g, Vertex v);

// Replaces non-adjacent x and y by one vertex adjacent to N(x) u N(y).
// Vertices other than y keep their relative order; y maps onto x's new id.
// Throws std::invalid_argument if x == y or x ~ y.
std::pair<Graph, VertexMap> identify_vertices(const Graph& g, Vertex x, Vertex y);

// Component label per vertex (labels 0.. in order of least member) and count.
struct Components {
  std::vector<int> label;
  int count = 0;
};
Components connected_components(const Graph& g);
// Same, ignoring the vertices flagged in `removed`.
Components connected_components(const Graph& g, const std::vector<bool>& removed);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g, int k);
inline bool is_cubic(const Graph& g) { return is_regular(g, 3); }
int max_degree(const Graph& g);

struct Triangle {
  Vertex a, b, c;  // a < b < c
  friend bool operator==(const Triangle&, const Triangle&) = default;
};
std::vector<Triangle> triangles(const Graph& g);

// Named small graphs used throughout the tests and the corpus.
namespace named {
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);
// Top triangle 0,1,2; bottom triangle 3,4,5; spokes i -- i+3.
Graph prism();
Graph claw();     // centre 0, leaves 1,2,3
Graph diamond();  // spine 0-1, tips 2,3
Graph house();    // roof 0; 1-2 base of the triangle; square 1-3-4-2
Graph net();      // triangle 0,1,2; pendants 3-0, 4-1, 5-2
Graph petersen();
}  // namespace named

}  // namespace kempe
