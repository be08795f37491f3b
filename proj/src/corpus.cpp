#include "kempe/corpus.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "kempe/graph_io.hpp"

namespace kempe {

namespace {

// Level-by-level search for the greatest adjacency string. Columns have fixed
// length, so the greatest string's first j columns are the greatest possible
// j-column prefix; every partial labelling achieving it is kept.
std::vector<Vertex> canonical_labelling(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};
  std::vector<std::vector<Vertex>> frontier;
  for (Vertex v = 0; v < n; ++v) frontier.push_back({v});
  for (int j = 1; j < n; ++j) {
    std::vector<std::vector<Vertex>> next;
    std::vector<bool> best;
    for (const auto& perm : frontier) {
      std::vector<bool> used(n, false);
      for (Vertex v : perm) used[v] = true;
      for (Vertex v = 0; v < n; ++v) {
        if (used[v]) continue;
        std::vector<bool> col(j);
        for (int i = 0; i < j; ++i) col[i] = g.adjacent(perm[i], v);
        if (!next.empty()) {
          if (col < best) continue;
          if (best < col) next.clear();
        }
        best = col;
        auto ext = perm;
        ext.push_back(v);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return frontier.front();
}

}  // namespace

Graph canonical_graph(const Graph& g) {
  const auto perm = canonical_labelling(g);
  std::vector<Vertex> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[perm[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
  return Graph(g.order(), edges);
}

std::string canonical_form(const Graph& g) { return encode_graph6(canonical_graph(g)); }

std::vector<Graph> gen_cubic(int n) {
  if (n % 2 != 0 || n < 4 || n > 10)
    throw std::invalid_argument("gen_cubic: n must be even with 4 <= n <= 10");

  // Vertices are completed in order; each new neighbour is either an already
  // reached vertex or the next unreached one, which keeps every partial graph
  // connected through a breadth-first tree and removes most relabellings.
  std::vector<std::vector<Vertex>> adj(n);
  int reached = 1;
  std::set<std::string> seen;
  std::vector<Graph> out;

  std::function<void(Vertex)> extend = [&](Vertex i) {
    if (i == n) {
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
          if (u < v) edges.emplace_back(u, v);
      Graph g(n, edges);
      if (seen.insert(canonical_form(g)).second) out.push_back(canonical_graph(g));
      return;
    }
    if (i >= reached) return;
    const int need = 3 - static_cast<int>(adj[i].size());
    if (need == 0) {
      extend(i + 1);
      return;
    }
    std::vector<Vertex> pool;
    for (Vertex j = i + 1; j < reached; ++j)
      if (adj[j].size() < 3 && std::find(adj[i].begin(), adj[i].end(), j) == adj[i].end())
        pool.push_back(j);
    // Choose r reached partners (a combination of pool) and need - r fresh ones.
    std::vector<Vertex> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
      const int fresh = need - static_cast<int>(pick.size());
      if (reached + fresh <= n) {
        const int saved = reached;
        std::vector<Vertex> partners = pick;
        for (int f = 0; f < fresh; ++f) partners.push_back(reached++);
        for (Vertex j : partners) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
        extend(i + 1);
        for (Vertex j : partners) {
          adj[i].pop_back();
          adj[j].pop_back();
        }
        reached = saved;
      }
      if (static_cast<int>(pick.size()) == need) return;
      for (std::size_t t = from; t < pool.size(); ++t) {
        pick.push_back(pool[t]);
        choose(t + 1);
        pick.pop_back();
      }
    };
    choose(0);
  };
  extend(0);

  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return encode_graph6(a) < encode_graph6(b); });
  return out;
}

bool admits(const CorpusSpec& spec, const Graph& g) {
  if (spec.require_cubic && !is_cubic(g)) return false;
  if (spec.require_connected && !is_connected(g)) return false;
  if (spec.exclude_k4 && is_k4(g)) return false;
  if (spec.exclude_prism && is_prism(g)) return false;
  return true;
}

std::vector<Graph> load_corpus(const CorpusSpec& spec) {
  std::vector<Graph> all;
  if (spec.path) {
    all = load_graphs(*spec.path);
  } else {
    if (spec.n_min > spec.n_max) throw std::invalid_argument("corpus: empty order range");
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
      if (n % 2) continue;
      auto part = gen_cubic(n);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  std::vector<Graph> out;
  for (auto& g : all)
    if (admits(spec, g)) out.push_back(std::move(g));
  return out;
}

StructureReport analyze_structure(const Graph& g) {
  StructureReport r;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.cubic = is_cubic(g);
  r.connected = is_connected(g);
  r.k4 = is_k4(g);
  r.prism = is_prism(g);
  r.degeneracy = degeneracy(g).d;
  r.triangles = triangles(g).size();
  if (r.connected && g.order() >= 4) {
    r.separator = find_min_separator(g, 2);
    r.three_connected = !r.separator.has_value();
  }
  r.claw = find_claw(g);
  r.net = find_net(g);
  r.house = find_induced_motif(g, Motif::house);
  r.diamond = find_induced_motif(g, Motif::diamond);
  return r;
}

}  // namespace kempe
