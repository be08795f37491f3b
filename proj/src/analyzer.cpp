#include "kempe/analyzer.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "kempe/graph_io.hpp"
#include "kempe/parallel.hpp"
#include "kempe/structure.hpp"
#include "kempe/union_find.hpp"

namespace kempe {

std::vector<std::pair<KempeMove, Coloring>> kempe_neighbors(const Graph& g, const Coloring& c) {
  std::vector<std::pair<KempeMove, Coloring>> out;
  const int n = g.order();
  std::vector<int> label(n);
  std::vector<Vertex> stack;
  for (Color a = 1; a <= c.k(); ++a)
    for (Color b = a + 1; b <= c.k(); ++b) {
      std::fill(label.begin(), label.end(), -1);
      for (Vertex s = 0; s < n; ++s) {
        if (label[s] != -1 || (c[s] != a && c[s] != b)) continue;
        Coloring next = c;
        auto& col = next.mutable_colors();
        label[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
          Vertex v = stack.back();
          stack.pop_back();
          col[v] = c[v] == a ? b : a;
          for (Vertex w : g.neighbors(v))
            if (label[w] == -1 && (c[w] == a || c[w] == b)) {
              label[w] = s;
              stack.push_back(w);
            }
        }
        out.emplace_back(KempeMove(s, a, b), std::move(next));
      }
    }
  return out;
}

KempePartition kempe_classes(const Graph& g, int k, std::size_t ceiling) {
  KempePartition p;
  p.colorings = enumerate_colorings(g, k, ceiling);
  p.report.graph_id = encode_graph6(g);
  p.report.k = k;
  p.report.colorings = p.colorings.size();

  const auto& all = p.colorings;
  UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& [move, next] : kempe_neighbors(g, all[i])) {
      auto it = std::lower_bound(all.begin(), all.end(), next);
      uf.unite(i, static_cast<std::size_t>(it - all.begin()));
    }

  // Classes keyed by root; the first member seen is the least colouring.
  std::map<std::size_t, std::size_t> root_to_tmp;
  std::vector<std::size_t> tmp_size, tmp_rep;
  std::vector<std::size_t> tmp_of(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto [it, fresh] = root_to_tmp.try_emplace(uf.find(i), tmp_size.size());
    if (fresh) {
      tmp_size.push_back(0);
      tmp_rep.push_back(i);
    }
    tmp_of[i] = it->second;
    ++tmp_size[it->second];
  }
  std::vector<std::size_t> order(tmp_size.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return tmp_size[x] > tmp_size[y]; });
  std::vector<int> final_of(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    final_of[order[r]] = static_cast<int>(r);
    p.report.sizes.push_back(tmp_size[order[r]]);
    p.report.representatives.push_back(all[tmp_rep[order[r]]]);
  }
  p.report.classes = order.size();
  p.class_of.resize(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) p.class_of[i] = final_of[tmp_of[i]];
  return p;
}

namespace {

struct ColorsHash {
  std::size_t operator()(const std::vector<Color>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Color c : v) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

std::optional<KempeSequence> bfs_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                      std::size_t ceiling) {
  if (alpha.k() != beta.k() || alpha.order() != g.order() || beta.order() != g.order())
    throw std::invalid_argument("bfs_path: colourings do not fit the graph");
  if (!is_proper(g, alpha) || !is_proper(g, beta))
    throw std::invalid_argument("bfs_path: colourings must be proper");
  KempeSequence out{alpha, {}};
  if (alpha == beta) return out;

  struct Parent {
    std::size_t from;
    KempeMove move;
  };
  std::vector<Coloring> states{alpha};
  std::vector<Parent> parent{{0, {}}};
  std::unordered_map<std::vector<Color>, std::size_t, ColorsHash> seen;
  seen.emplace(alpha.colors(), 0);
  for (std::size_t head = 0; head < states.size(); ++head) {
    const Coloring cur = states[head];
    for (auto& [move, next] : kempe_neighbors(g, cur)) {
      if (seen.count(next.colors())) continue;
      if (states.size() >= ceiling)
        throw CeilingExceeded("bfs_path visited more than " + std::to_string(ceiling) +
                              " colourings");
      seen.emplace(next.colors(), states.size());
      parent.push_back({head, move});
      const bool done = next == beta;
      states.push_back(std::move(next));
      if (done) {
        for (std::size_t at = states.size() - 1; at != 0; at = parent[at].from)
          out.moves.push_back(parent[at].move);
        std::reverse(out.moves.begin(), out.moves.end());
        return out;
      }
    }
  }
  return std::nullopt;
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::k4: return "K4";
    case GraphKind::prism: return "prism";
    case GraphKind::other: return "other";
  }
  return "other";
}

Verdict verify_graph(const Graph& g, std::size_t ceiling) {
  Verdict v;
  v.graph6 = encode_graph6(g);
  v.n = g.order();
  if (!is_cubic(g) || !is_connected(g)) {
    v.skipped = true;
    v.error = !is_cubic(g) ? "graph is not cubic" : "graph is not connected";
    return v;
  }
  v.kind = is_k4(g) ? GraphKind::k4 : is_prism(g) ? GraphKind::prism : GraphKind::other;
  const auto part = kempe_classes(g, 3, ceiling);
  v.colorings = part.report.colorings;
  v.classes = part.report.classes;
  v.sizes = part.report.sizes;
  switch (v.kind) {
    case GraphKind::k4: v.pass = v.colorings == 0; break;
    case GraphKind::prism: v.pass = v.classes == 2; break;
    case GraphKind::other: v.pass = v.classes == 1; break;
  }
  return v;
}

std::vector<Verdict> verify_theorem(const std::vector<Graph>& corpus, int jobs,
                                    std::size_t ceiling) {
  std::vector<Verdict> out(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    try {
      out[i] = verify_graph(corpus[i], ceiling);
    } catch (const CeilingExceeded& e) {
      out[i].graph6 = encode_graph6(corpus[i]);
      out[i].n = corpus[i].order();
      out[i].skipped = true;
      out[i].error = e.what();
    }
  });
  return out;
}

VerifySummary summarize(const std::vector<Verdict>& verdicts) {
  VerifySummary s;
  s.graphs = verdicts.size();
  for (const auto& v : verdicts) {
    if (v.skipped) ++s.skipped;
    else if (v.pass) ++s.passed;
    else ++s.failed;
  }
  return s;
}

std::string VerifySummary::text() const {
  std::string t = std::to_string(graphs) + " graphs, " + std::to_string(passed) + " PASS";
  if (failed) t += ", " + std::to_string(failed) + " FAIL";
  if (skipped) t += ", " + std::to_string(skipped) + " SKIPPED";
  return t;
}

}  // namespace kempe
