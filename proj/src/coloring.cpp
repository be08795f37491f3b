#include "kempe/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace kempe {

Coloring::Coloring(int k, std::vector<Color> colors) : k_(k), colors_(std::move(colors)) {
  if (k < 1) throw std::invalid_argument("colour count must be positive");
  for (Color c : colors_)
    if (c < 1 || c > k)
      throw std::invalid_argument("colour " + std::to_string(c) + " outside 1.." +
                                  std::to_string(k));
}

std::string to_string(const Coloring& c) {
  std::ostringstream os;
  os << '(';
  for (int v = 0; v < c.order(); ++v) os << (v ? "," : "") << c[v];
  os << ')';
  return os.str();
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.order() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

KempeMove::KempeMove(Vertex anchor, Color c1, Color c2)
    : anchor(anchor), a(std::min(c1, c2)), b(std::max(c1, c2)) {
  if (c1 == c2) throw InvalidMove("Kempe move needs two distinct colours");
}

std::vector<Vertex> chain_of(const Graph& g, const std::vector<Color>& colors, Vertex x, Color a,
                             Color b, const std::vector<bool>* active) {
  if (colors[x] != a && colors[x] != b)
    throw InvalidMove("vertex " + std::to_string(x) + " has colour " + std::to_string(colors[x]) +
                      ", not in {" + std::to_string(a) + "," + std::to_string(b) + "}");
  std::vector<Vertex> out{x};
  std::vector<bool> seen(g.order(), false);
  seen[x] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex w : g.neighbors(out[head])) {
      if (seen[w] || (active && !(*active)[w])) continue;
      if (colors[w] != a && colors[w] != b) continue;
      seen[w] = true;
      out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> kempe_chain(const Graph& g, const Coloring& c, Vertex x, Color a, Color b) {
  if (x < 0 || x >= c.order()) throw InvalidMove("anchor out of range");
  return chain_of(g, c.colors(), x, a, b);
}

std::vector<Vertex> apply_move(const Graph& g, std::vector<Color>& colors, const KempeMove& m,
                               const std::vector<bool>* active) {
  auto chain = chain_of(g, colors, m.anchor, m.a, m.b, active);
  for (Vertex v : chain) colors[v] = colors[v] == m.a ? m.b : m.a;
  return chain;
}

Coloring kempe_change(const Graph& g, const Coloring& c, const KempeMove& m) {
  if (m.anchor < 0 || m.anchor >= c.order()) throw InvalidMove("anchor out of range");
  if (m.a < 1 || m.b > c.k()) throw InvalidMove("move colours outside 1..k");
  Coloring out = c;
  apply_move(g, out.mutable_colors(), m);
  return out;
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int k, std::size_t ceiling) {
  const int n = g.order();
  std::vector<Coloring> out;
  std::vector<Color> cur(n, 0);
  // Iterative backtracking: vertex v tries colours ascending, checking earlier neighbours.
  int v = 0;
  if (n == 0) return {Coloring(k, {})};
  while (v >= 0) {
    bool placed = false;
    for (Color c = cur[v] + 1; c <= k; ++c) {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (w >= v) break;
        if (cur[w] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        cur[v] = c;
        placed = true;
        break;
      }
    }
    if (!placed) {
      cur[v] = 0;
      --v;
      continue;
    }
    if (v == n - 1) {
      if (out.size() >= ceiling)
        throw CeilingExceeded("more than " + std::to_string(ceiling) + " colourings");
      out.emplace_back(k, cur);
    } else {
      ++v;
    }
  }
  return out;
}

std::optional<Match> colorings_match(const Graph& g, const Coloring& alpha, const Coloring& beta) {
  for (Vertex w = 0; w < g.order(); ++w) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (alpha[nb[i]] == alpha[nb[j]] && beta[nb[i]] == beta[nb[j]])
          return Match{nb[i], nb[j], w};
  }
  return std::nullopt;
}

Validation validate(const Graph& g, const KempeSequence& s) {
  Validation r;
  r.end = s.start;
  if (s.start.order() != g.order() || !is_proper(g, s.start)) {
    r.ok = false;
    r.failed_at = s.moves.size();
    r.reason = "start colouring is not proper";
    return r;
  }
  auto& colors = r.end.mutable_colors();
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    const auto& m = s.moves[i];
    if (m.anchor < 0 || m.anchor >= g.order() || m.a < 1 || m.b > s.start.k() || m.a == m.b ||
        (colors[m.anchor] != m.a && colors[m.anchor] != m.b)) {
      r.ok = false;
      r.failed_at = i;
      r.reason = "move " + std::to_string(i) + " is not applicable";
      return r;
    }
    auto chain = apply_move(g, colors, m);
    for (Vertex v : chain)
      for (Vertex w : g.neighbors(v))
        if (colors[v] == colors[w]) {
          r.ok = false;
          r.failed_at = i;
          r.reason = "move " + std::to_string(i) + " produced an improper colouring";
          return r;
        }
  }
  return r;
}

Coloring replay(const Graph& g, const KempeSequence& s) {
  auto r = validate(g, s);
  if (!r.ok) throw InvalidMove(r.reason);
  return r.end;
}

std::vector<KempeMove> reversed(std::vector<KempeMove> moves) {
  std::reverse(moves.begin(), moves.end());
  return moves;
}

Coloring canonical_class(const Coloring& c) {
  std::vector<Color> relabel(c.k() + 1, 0);
  Color next = 1;
  std::vector<Color> out(c.order());
  for (int v = 0; v < c.order(); ++v) {
    if (relabel[c[v]] == 0) relabel[c[v]] = next++;
    out[v] = relabel[c[v]];
  }
  return Coloring(c.k(), std::move(out));
}

}  // namespace kempe
