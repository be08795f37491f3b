#include "kempe/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kempe {

Graph::Graph(int n) : n_(n), adj_(n), rows_(n <= 64 ? n : 0, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range");
    if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("parallel edge");
  }
  m_ = edges.size();
  if (has_bit_matrix()) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : adj_[v]) rows_[v] |= std::uint64_t{1} << w;
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (has_bit_matrix()) return (rows_[u] >> v) & 1U;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  auto e = g.edges();
  e.emplace_back(u, v);
  return Graph(g.order(), e);
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  auto e = g.edges();
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::find(e.begin(), e.end(), key);
  if (it == e.end()) throw std::invalid_argument("edge not present");
  e.erase(it);
  return Graph(g.order(), e);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (pos[vertices[i]] != -1) throw std::invalid_argument("duplicate vertex in subset");
    pos[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (pos[w] > static_cast<int>(i)) e.emplace_back(static_cast<int>(i), pos[w]);
  return Graph(static_cast<int>(vertices.size()), e);
}

std::pair<Graph, VertexMap> remove_vertex(const Graph& g, Vertex v) {
  VertexMap map;
  map.forward.assign(g.order(), -1);
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    map.forward[u] = static_cast<int>(keep.size());
    keep.push_back(u);
  }
  map.backward = keep;
  return {induced_subgraph(g, keep), std::move(map)};
}

std::pair<Graph, VertexMap> identify_vertices(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("cannot identify a vertex with itself");
  if (g.adjacent(x, y)) throw std::invalid_argument("cannot identify adjacent vertices");
  VertexMap map;
  map.forward.assign(g.order(), -1);
  int next = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == y) continue;
    map.forward[u] = next++;
    map.backward.push_back(u);
  }
  map.forward[y] = map.forward[x];
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    Vertex a = map.forward[u], b = map.forward[v];
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return {Graph(next, e), std::move(map)};
}

Components connected_components(const Graph& g, const std::vector<bool>& removed) {
  Components c;
  c.label.assign(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (c.label[s] != -1 || (!removed.empty() && removed[s])) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (c.label[w] != -1 || (!removed.empty() && removed[w])) continue;
        c.label[w] = c.count;
        stack.push_back(w);
      }
    }
    ++c.count;
  }
  return c;
}

Components connected_components(const Graph& g) { return connected_components(g, {}); }

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

bool is_regular(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b))
        if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
    }
  return out;
}

namespace named {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph prism() {
  const Edge e[] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, e);
}

Graph claw() {
  const Edge e[] = {{0, 1}, {0, 2}, {0, 3}};
  return Graph(4, e);
}

Graph diamond() {
  const Edge e[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return Graph(4, e);
}

Graph house() {
  const Edge e[] = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 2}};
  return Graph(5, e);
}

Graph net() {
  const Edge e[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

}  // namespace named

}  // namespace kempe
