#include "kempe/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kempe {

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

// Calls f on every size-r subset of 0..n-1 in lexicographic order until f returns true.
bool for_each_subset(int n, int r, const std::function<bool(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return false;
  while (true) {
    if (f(idx)) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<Separator> find_min_separator(const Graph& g, int max_size) {
  if (!is_connected(g)) throw std::invalid_argument("find_min_separator: graph is disconnected");
  // A separator of size r leaves at least two vertices behind.
  for (int r = 1; r <= std::min(max_size, g.order() - 2); ++r) {
    std::optional<std::vector<Vertex>> first, first_clique;
    for_each_subset(g.order(), r, [&](const std::vector<Vertex>& s) {
      std::vector<bool> removed(g.order(), false);
      for (Vertex v : s) removed[v] = true;
      if (connected_components(g, removed).count <= 1) return false;
      if (!first) first = s;
      if (is_clique(g, s)) {
        first_clique = s;
        return true;
      }
      return false;
    });
    if (!first) continue;
    Separator sep;
    sep.vertices = first_clique ? *first_clique : *first;
    sep.is_clique = first_clique.has_value();
    std::vector<bool> removed(g.order(), false);
    for (Vertex v : sep.vertices) removed[v] = true;
    const auto comps = connected_components(g, removed);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (removed[v]) continue;
      (comps.label[v] == 0 ? sep.side_a : sep.side_b).push_back(v);
    }
    return sep;
  }
  return std::nullopt;
}

bool is_three_connected(const Graph& g) {
  if (g.order() < 4 || !is_connected(g)) return false;
  return !find_min_separator(g, 2).has_value();
}

DegeneracyOrdering degeneracy(const Graph& g) {
  const int n = g.order();
  DegeneracyOrdering out;
  std::vector<int> deg(n);
  std::vector<bool> gone(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
    out.d = std::max(out.d, deg[best]);
    out.order.push_back(best);
    gone[best] = true;
    for (Vertex w : g.neighbors(best))
      if (!gone[w]) --deg[w];
  }
  return out;
}

std::optional<ClawEmbedding> find_claw(const Graph& g) {
  for (Vertex w = 0; w < g.order(); ++w) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
            return ClawEmbedding{w, nb[i], nb[j], nb[k]};
      }
  }
  return std::nullopt;
}

std::optional<NetEmbedding> find_net(const Graph& g) {
  for (const auto& t : triangles(g)) {
    const Vertex tri[3] = {t.a, t.b, t.c};
    auto outside = [&](Vertex v) {
      std::vector<Vertex> out;
      for (Vertex w : g.neighbors(v))
        if (w != t.a && w != t.b && w != t.c) out.push_back(w);
      return out;
    };
    const auto oa = outside(tri[0]), ob = outside(tri[1]), oc = outside(tri[2]);
    // Each pendant must see exactly one triangle vertex and no other pendant.
    auto private_to = [&](Vertex p, int owner) {
      for (int i = 0; i < 3; ++i)
        if (i != owner && g.adjacent(p, tri[i])) return false;
      return true;
    };
    for (Vertex pa : oa) {
      if (!private_to(pa, 0)) continue;
      for (Vertex pb : ob) {
        if (pb == pa || !private_to(pb, 1) || g.adjacent(pa, pb)) continue;
        for (Vertex pc : oc) {
          if (pc == pa || pc == pb || !private_to(pc, 2)) continue;
          if (g.adjacent(pa, pc) || g.adjacent(pb, pc)) continue;
          return NetEmbedding{tri[0], tri[1], tri[2], pa, pb, pc};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<MotifEmbedding> find_induced_motif(const Graph& g, Motif motif) {
  const int n = g.order();
  if (motif == Motif::diamond) {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b : g.neighbors(a)) {
        if (b <= a) continue;
        std::vector<Vertex> common;
        for (Vertex c : g.neighbors(a))
          if (c != b && g.adjacent(b, c)) common.push_back(c);
        for (std::size_t i = 0; i < common.size(); ++i)
          for (std::size_t j = i + 1; j < common.size(); ++j)
            if (!g.adjacent(common[i], common[j]))
              return MotifEmbedding{motif, {a, b, common[i], common[j]}};
      }
    return std::nullopt;
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.neighbors(x))
      for (Vertex z : g.neighbors(x)) {
        if (z <= y || !g.adjacent(y, z)) continue;
        for (Vertex w : g.neighbors(y)) {
          if (w == x || w == z || g.adjacent(w, x) || g.adjacent(w, z)) continue;
          for (Vertex s : g.neighbors(z)) {
            if (s == x || s == y || s == w || g.adjacent(s, x) || g.adjacent(s, y)) continue;
            if (g.adjacent(w, s)) return MotifEmbedding{motif, {x, y, z, w, s}};
          }
        }
      }
  return std::nullopt;
}

bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  std::vector<Vertex> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex t = 0; t < n; ++t) {
      if (used[t] || a.degree(v) != b.degree(t)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(image[u], t);
      if (!ok) continue;
      image[v] = t;
      used[t] = true;
      if (extend(v + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return extend(0);
}

bool is_k4(const Graph& g) { return g.order() == 4 && g.size() == 6; }

bool is_prism(const Graph& g) {
  return g.order() == 6 && g.size() == 9 && isomorphic(g, named::prism());
}

}  // namespace kempe
