#include "kempe/solver.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "kempe/analyzer.hpp"
#include "kempe/structure.hpp"

namespace kempe {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw SolverInvariantError(what);
}

void enter(SolveTrace* trace, const char* label) {
  if (trace) trace->enter(label);
}

void note(SolveTrace* trace, const char* kind, std::vector<Vertex> vertices) {
  if (trace) trace->note(kind, std::move(vertices));
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

Color third(Color a, Color b) { return 6 - a - b; }

void append(std::vector<KempeMove>& out, const std::vector<KempeMove>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

Coloring restrict_to(const Coloring& c, std::span<const Vertex> vertices) {
  std::vector<Color> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(c[v]);
  return Coloring(c.k(), std::move(out));
}

void check_pair(const Graph& g, const Coloring& alpha, const Coloring& beta) {
  if (alpha.order() != g.order() || beta.order() != g.order())
    throw std::invalid_argument("colouring size does not match the graph");
  if (alpha.k() != beta.k()) throw std::invalid_argument("colourings use different k");
  if (!is_proper(g, alpha) || !is_proper(g, beta))
    throw std::invalid_argument("colourings must be proper");
}

int degree_in(const Graph& g, const std::vector<Vertex>& chain, Vertex v) {
  int d = 0;
  for (Vertex w : g.neighbors(v)) d += contains(chain, w);
  return d;
}

// A chain is a path when it is connected with max degree <= 2 and not a cycle.
bool is_path(const Graph& g, const std::vector<Vertex>& chain) {
  int ends = 0;
  for (Vertex v : chain) {
    const int d = degree_in(g, chain, v);
    if (d > 2) return false;
    ends += d <= 1;
  }
  return chain.size() == 1 || ends == 2;
}

// First degree-3 vertex of the chain met by a breadth-first walk from `from`.
std::optional<Vertex> closest_branch(const Graph& g, const std::vector<Vertex>& chain,
                                     Vertex from) {
  std::vector<Vertex> queue{from};
  std::set<Vertex> seen{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (degree_in(g, chain, v) >= 3) return v;
    for (Vertex w : g.neighbors(v))
      if (contains(chain, w) && seen.insert(w).second) queue.push_back(w);
  }
  return std::nullopt;
}

// A colouring being walked by Kempe changes, recording each move.
struct Walk {
  const Graph& g;
  std::vector<Color> col;
  std::vector<KempeMove> moves;

  Walk(const Graph& g, const Coloring& c) : g(g), col(c.colors()) {}

  std::vector<Vertex> chain(Vertex x, Color a, Color b) const { return chain_of(g, col, x, a, b); }

  void exchange(Vertex x, Color a, Color b) {
    KempeMove m(x, a, b);
    apply_move(g, col, m);
    moves.push_back(m);
  }

  // True when all neighbours of v share one colour, making {v} a chain.
  bool recolourable(Vertex v) const {
    auto nb = g.neighbors(v);
    return std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return col[w] == col[nb[0]]; });
  }

  void recolour(Vertex v) {
    require(recolourable(v), "vertex " + std::to_string(v) + " cannot be recoloured");
    const Color target = third(col[v], col[g.neighbors(v)[0]]);
    exchange(v, col[v], target);
  }

  Coloring coloring() const { return Coloring(3, col); }
};

// ---------------------------------------------------------------------------
// Degenerate connector

std::vector<KempeMove> peel(const Graph& g, const std::vector<Vertex>& order, std::size_t i,
                            const std::vector<Color>& start, const std::vector<Color>& target,
                            int k, std::vector<bool>& active) {
  if (i == order.size()) return {};
  const Vertex v = order[i];
  active[v] = false;
  const auto inner = peel(g, order, i + 1, start, target, k, active);

  std::vector<KempeMove> out;
  std::vector<Color> cur = start;
  for (const auto& m : inner) {
    const auto sub = chain_of(g, cur, m.anchor, m.a, m.b, &active);
    active[v] = true;
    if (cur[v] == m.a || cur[v] == m.b) {
      bool touches = false;
      for (Vertex w : g.neighbors(v)) touches |= active[w] && contains(sub, w);
      if (touches) {
        // Move v out of the way when a third colour is free; otherwise v is a
        // leaf of G(a, b) and simply rides along with the chain.
        std::vector<bool> used(k + 1, false);
        for (Vertex w : g.neighbors(v))
          if (active[w]) used[cur[w]] = true;
        for (Color e = 1; e <= k; ++e)
          if (e != m.a && e != m.b && !used[e]) {
            KempeMove shift(v, cur[v], e);
            apply_move(g, cur, shift, &active);
            out.push_back(shift);
            break;
          }
      }
    }
    const auto lifted = apply_move(g, cur, m, &active);
    require(lifted.size() == sub.size() ||
                (lifted.size() == sub.size() + 1 && contains(lifted, v)),
            "degenerate lift produced an unexpected chain");
    out.push_back(m);
    active[v] = false;
  }
  active[v] = true;
  if (cur[v] != target[v]) {
    KempeMove fix(v, cur[v], target[v]);
    require(apply_move(g, cur, fix, &active).size() == 1, "final recolouring is not a single vertex");
    out.push_back(fix);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Clique gluing

struct SideLift {
  const Graph& g;
  std::vector<Color>& cur;
  std::vector<KempeMove>& out;

  void emit(const KempeMove& m) {
    apply_move(g, cur, m);
    out.push_back(m);
  }

  // Replays a witness of g[x_side] on g. Whenever a chain reaches the clique,
  // every other (a, b)-chain of the far side is exchanged first so that the far
  // side only ever undergoes a global colour transposition.
  void run(std::span<const Vertex> x_side, const std::vector<bool>& in_x,
           const std::vector<bool>& in_y, const std::vector<bool>& in_s,
           const std::vector<KempeMove>& local) {
    for (const auto& lm : local) {
      const KempeMove m(x_side[lm.anchor], lm.a, lm.b);
      const auto chain = chain_of(g, cur, m.anchor, m.a, m.b, &in_x);
      const bool touches =
          std::any_of(chain.begin(), chain.end(), [&](Vertex v) { return in_s[v]; });
      if (touches) {
        std::vector<bool> seen(g.order(), false);
        std::vector<Vertex> far;
        for (Vertex y = 0; y < g.order(); ++y) {
          if (!in_y[y] || in_s[y] || seen[y] || (cur[y] != m.a && cur[y] != m.b)) continue;
          const auto comp = chain_of(g, cur, y, m.a, m.b, &in_y);
          bool hits_s = false;
          for (Vertex c : comp) {
            seen[c] = true;
            hits_s |= in_s[c];
          }
          if (!hits_s) far.push_back(comp.front());
        }
        for (Vertex y : far) emit(KempeMove(y, m.a, m.b));
      }
      emit(m);
    }
  }
};

}  // namespace

const std::vector<std::string>& documented_cases() {
  static const std::vector<std::string> cases = {
      "dispatch.identical",   "dispatch.components",    "dispatch.prism",
      "dispatch.separator",   "dispatch.claw_free",     "dispatch.claw",
      "degenerate.peel",      "glue.clique",            "glue.permute",
      "separator.clique",     "separator.pair",         "separator.reselect",
      "separator.split_pair", "separator.join_distinct", "matching.degenerate",
      "matching.identify",    "net.alike",              "net.alike.match",
      "net.alike.swap",       "net.distinct",           "net.distinct.single",
      "net.distinct.double",  "triple.match",           "triple.repartner",
      "claw.recolour_leaf",   "claw.split_chain",       "claw.case1",
      "claw.case2.1",         "claw.case2.2",           "claw.case2.2.match",
      "claw.case2.2.1",       "claw.case2.2.2",         "claw.case3.1",
      "claw.case3.2.1",       "claw.case3.2.1.split",   "claw.case3.2.1.branch",
      "claw.case3.2.1.path",  "claw.case3.2.1.to_case1", "claw.case3.2.2.split",
      "claw.case3.2.2.short", "claw.case3.2.2.branch",  "claw.case4.branch",
      "claw.case4.1",         "claw.case4.2",           "claw.case4.2.shared",
  };
  return cases;
}

std::vector<KempeMove> degenerate_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                       SolveTrace* trace) {
  check_pair(g, alpha, beta);
  const auto ord = degeneracy(g);
  if (ord.d > alpha.k() - 1)
    throw std::invalid_argument("degenerate_path: degeneracy " + std::to_string(ord.d) +
                                " exceeds k - 1");
  if (alpha == beta) return {};
  enter(trace, "degenerate.peel");
  std::vector<bool> active(g.order(), true);
  return peel(g, ord.order, 0, alpha.colors(), beta.colors(), alpha.k(), active);
}

std::vector<KempeMove> glue_clique_paths(const Graph& g, std::span<const Vertex> side_a,
                                         std::span<const Vertex> side_b, const Coloring& alpha,
                                         const Coloring& beta, const SideSolver& solve_side,
                                         SolveTrace* trace) {
  check_pair(g, alpha, beta);
  const int n = g.order();
  std::vector<bool> in_a(n, false), in_b(n, false), in_s(n, false);
  for (Vertex v : side_a) in_a[v] = true;
  for (Vertex v : side_b) in_b[v] = true;
  std::vector<Vertex> shared;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_a[v] && !in_b[v]) throw std::invalid_argument("glue: sides do not cover the graph");
    if (in_a[v] && in_b[v]) {
      in_s[v] = true;
      shared.push_back(v);
    }
  }
  for (std::size_t i = 0; i < shared.size(); ++i)
    for (std::size_t j = i + 1; j < shared.size(); ++j)
      if (!g.adjacent(shared[i], shared[j]))
        throw std::invalid_argument("glue: intersection is not complete");
  for (auto [u, v] : g.edges())
    if ((in_a[u] && !in_b[u] && in_b[v] && !in_a[v]) || (in_a[v] && !in_b[v] && in_b[u] && !in_a[u]))
      throw std::invalid_argument("glue: edge between the private parts of the sides");

  enter(trace, "glue.clique");
  note(trace, "clique", shared);
  std::vector<KempeMove> out;
  std::vector<Color> cur = alpha.colors();
  SideLift lift{g, cur, out};

  const Graph ga = induced_subgraph(g, side_a);
  lift.run(side_a, in_a, in_b, in_s,
           solve_side(ga, restrict_to(Coloring(alpha.k(), cur), side_a), restrict_to(beta, side_a)));
  const Graph gb = induced_subgraph(g, side_b);
  lift.run(side_b, in_b, in_a, in_s,
           solve_side(gb, restrict_to(Coloring(alpha.k(), cur), side_b), restrict_to(beta, side_b)));

  // Side a now carries beta up to a colour permutation fixing the clique's
  // colours; undo it with transpositions, each a set of chains avoiding the clique.
  std::vector<bool> a_only(n, false);
  for (Vertex v = 0; v < n; ++v) a_only[v] = in_a[v] && !in_s[v];
  while (true) {
    Vertex off = -1;
    for (Vertex v : side_a)
      if (cur[v] != beta[v]) {
        off = v;
        break;
      }
    if (off < 0) break;
    enter(trace, "glue.permute");
    const Color c = cur[off], d = beta[off];
    std::vector<bool> seen(n, false);
    std::vector<Vertex> anchors;
    for (Vertex v : side_a) {
      if (seen[v] || (cur[v] != c && cur[v] != d)) continue;
      require(!in_s[v], "glue: permutation touches the clique");
      const auto comp = chain_of(g, cur, v, c, d, &a_only);
      for (Vertex x : comp) seen[x] = true;
      anchors.push_back(comp.front());
    }
    for (Vertex v : anchors) lift.emit(KempeMove(v, c, d));
  }
  require(cur == beta.colors(), "glue: did not reach the target colouring");
  return out;
}

KempeSequence restrict_sequence(const Graph& g, const Graph& super, const KempeSequence& s) {
  if (g.order() != super.order()) throw std::invalid_argument("restrict: vertex sets differ");
  for (auto [u, v] : g.edges())
    if (!super.adjacent(u, v)) throw std::invalid_argument("restrict: g is not a subgraph");
  KempeSequence out{s.start, {}};
  std::vector<Color> cur = s.start.colors();
  for (const auto& m : s.moves) {
    const auto big = chain_of(super, cur, m.anchor, m.a, m.b);
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> anchors{m.anchor};
    for (Vertex x : chain_of(g, cur, m.anchor, m.a, m.b)) seen[x] = true;
    for (Vertex v : big) {
      if (seen[v]) continue;
      for (Vertex x : chain_of(g, cur, v, m.a, m.b)) seen[x] = true;
      anchors.push_back(v);
    }
    for (Vertex v : anchors) {
      KempeMove sub(v, m.a, m.b);
      apply_move(g, cur, sub);
      out.moves.push_back(sub);
    }
  }
  return out;
}

KempeSequence identify_lift(const Graph& g, Vertex x, Vertex y, const KempeSequence& s) {
  auto [gp, map] = identify_vertices(g, x, y);
  if (s.start.order() != gp.order())
    throw std::invalid_argument("identify_lift: sequence is not on the identified graph");
  const Vertex z = map.forward[x];
  std::vector<Color> start(g.order());
  for (Vertex v = 0; v < g.order(); ++v) start[v] = s.start[map.forward[v]];
  KempeSequence out{Coloring(s.start.k(), start), {}};
  if (!is_proper(g, out.start)) throw std::invalid_argument("identify_lift: lifted start is improper");

  std::vector<Color> cur = start;
  std::vector<Color> curp = s.start.colors();
  for (const auto& m : s.moves) {
    const auto chain = apply_move(gp, curp, m);
    if (!contains(chain, z)) {
      KempeMove lifted(map.backward[m.anchor], m.a, m.b);
      require(apply_move(g, cur, lifted).size() == chain.size(), "identify_lift: chain size changed");
      out.moves.emplace_back(lifted);
    } else {
      KempeMove first(x, m.a, m.b);
      apply_move(g, cur, first);
      out.moves.push_back(first);
      if (cur[y] != cur[x]) {
        KempeMove second(y, m.a, m.b);
        apply_move(g, cur, second);
        out.moves.push_back(second);
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    require(cur[v] == curp[map.forward[v]], "identify_lift: lifted colouring diverged");
  return out;
}

std::vector<KempeMove> matching_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                     SolveTrace* trace) {
  check_pair(g, alpha, beta);
  if (alpha == beta) return {};
  const auto match = colorings_match(g, alpha, beta);
  if (!match) throw std::invalid_argument("matching_path: colourings do not match");
  const int k = alpha.k();
  if (degeneracy(g).d <= k - 1) {
    enter(trace, "matching.degenerate");
    return degenerate_path(g, alpha, beta, trace);
  }
  enter(trace, "matching.identify");
  note(trace, "identify", {match->x, match->y, match->common});
  auto [gp, map] = identify_vertices(g, match->x, match->y);
  require(degeneracy(gp).d <= k - 1, "identified graph is not (k-1)-degenerate");
  auto contract = [&](const Coloring& c) {
    std::vector<Color> out(gp.order());
    for (Vertex v = 0; v < g.order(); ++v) out[map.forward[v]] = c[v];
    return Coloring(k, std::move(out));
  };
  const Coloring ap = contract(alpha), bp = contract(beta);
  KempeSequence inner{ap, degenerate_path(gp, ap, bp, trace)};
  return identify_lift(g, match->x, match->y, inner).moves;
}

std::vector<KempeMove> split_separator_pair(const Graph& g, Vertex x, Vertex y, Vertex x1,
                                            Vertex y1, const Coloring& c) {
  Walk walk(g, c);
  if (c[x] != c[y]) return {};
  const Color p = c[x], q = c[y1], r = third(p, q);
  if (walk.col[x1] == r) {
    walk.exchange(x1, q, r);
    require(walk.col[x] == p && walk.col[y] == p && walk.col[y1] == q,
            "split: first change disturbed the separator");
  }
  require(walk.col[x1] == q, "split: x1 not coloured like y1");
  require(!contains(walk.chain(x, p, r), y), "split: y lies on the chain of x");
  walk.exchange(x, p, r);
  return walk.moves;
}

std::vector<KempeMove> separator_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                      SolveTrace* trace) {
  check_pair(g, alpha, beta);
  if (!is_cubic(g) || !is_connected(g))
    throw std::invalid_argument("separator_path: graph must be connected and cubic");
  if (alpha == beta) return {};
  const auto sep = find_min_separator(g, 2);
  if (!sep) throw std::invalid_argument("separator_path: graph is 3-connected");
  note(trace, "separator", sep->vertices);

  const SideSolver sides = [trace](const Graph& side, const Coloring& a, const Coloring& b) {
    return degenerate_path(side, a, b, trace);
  };
  auto with = [](std::vector<Vertex> side, std::initializer_list<Vertex> extra) {
    side.insert(side.end(), extra.begin(), extra.end());
    std::sort(side.begin(), side.end());
    return side;
  };

  if (sep->is_clique) {
    enter(trace, "separator.clique");
    std::vector<Vertex> a = sep->side_a, b = sep->side_b;
    for (Vertex v : sep->vertices) {
      a.push_back(v);
      b.push_back(v);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return glue_clique_paths(g, a, b, alpha, beta, sides, trace);
  }

  enter(trace, "separator.pair");
  Vertex x = sep->vertices[0], y = sep->vertices[1];
  std::vector<Vertex> side1 = sep->side_a, side2 = sep->side_b;
  auto in = [](const std::vector<Vertex>& side, Vertex v) {
    return std::find(side.begin(), side.end(), v) != side.end();
  };
  auto count_in = [&](const std::vector<Vertex>& side, Vertex v) {
    int c = 0;
    for (Vertex w : g.neighbors(v)) c += in(side, w);
    return c;
  };
  auto only_neighbor_in = [&](const std::vector<Vertex>& side, Vertex v) {
    for (Vertex w : g.neighbors(v))
      if (in(side, w)) return w;
    throw SolverInvariantError("separator vertex has no neighbour on the side");
  };

  if (count_in(side1, x) == count_in(side1, y)) {
    // Both have one neighbour on some side; swap x for that neighbour.
    enter(trace, "separator.reselect");
    if (count_in(side1, x) == 2) std::swap(side1, side2);
    const Vertex x1 = only_neighbor_in(side1, x);
    require(!g.adjacent(x1, y), "reselected separator is a clique");
    side1.erase(std::find(side1.begin(), side1.end(), x1));
    side2.push_back(x);
    std::sort(side2.begin(), side2.end());
    x = x1;
    note(trace, "separator", {std::min(x, y), std::max(x, y)});
  }
  if (count_in(side1, x) == 2) std::swap(x, y);
  require(count_in(side1, x) == 1 && count_in(side1, y) == 2 && count_in(side2, y) == 1,
          "separator vertices do not split 1/2");
  const Vertex x1 = only_neighbor_in(side1, x);
  const Vertex y1 = only_neighbor_in(side2, y);

  auto split = [&](const Coloring& c) {
    if (c[x] == c[y]) enter(trace, "separator.split_pair");
    auto moves = split_separator_pair(g, x, y, x1, y1, c);
    return std::pair{moves, replay(g, KempeSequence{c, moves})};
  };
  const auto [a_moves, from] = split(alpha);
  const auto [b_moves, to] = split(beta);

  enter(trace, "separator.join_distinct");
  const Graph plus = add_edge(g, x, y);
  const auto a = with(side1, {x, y}), b = with(side2, {x, y});
  const auto mid = glue_clique_paths(plus, a, b, from, to, sides, trace);
  const auto restricted = restrict_sequence(g, plus, KempeSequence{from, mid});

  std::vector<KempeMove> out = a_moves;
  append(out, restricted.moves);
  append(out, reversed(b_moves));
  return out;
}

namespace {

struct NetSolver {
  const Graph& g;
  NetEmbedding net;
  SolveTrace* trace;
  std::array<Vertex, 3> t, p;

  NetSolver(const Graph& g, NetEmbedding e, SolveTrace* trace)
      : g(g), net(e), trace(trace), t{e.x, e.y, e.z}, p{e.xp, e.yp, e.zp} {}

  bool has_alike(const Coloring& c) const {
    return c[p[0]] == c[p[1]] || c[p[0]] == c[p[2]] || c[p[1]] == c[p[2]];
  }

  // a colours two pendants alike.
  std::vector<KempeMove> alike_case(const Coloring& a, const Coloring& b) const {
    enter(trace, "net.alike");
    int i = 0, j = 1;
    if (a[p[0]] == a[p[2]]) j = 2;
    else if (a[p[1]] == a[p[2]]) i = 1, j = 2;
    const int k3 = 3 - i - j;
    const Vertex z = t[k3], zp = p[k3];
    require(a[z] == a[p[i]], "net: t-vertex opposite the alike pendants has another colour");
    Vertex x = t[i], y = t[j];
    if (a[x] != a[zp]) std::swap(x, y);
    require(a[x] == a[zp], "net: third pendant matches neither t-vertex");
    if (b[zp] == b[x]) {
      enter(trace, "net.alike.match");
      return matching_path(g, a, b, trace);
    }
    require(b[zp] == b[y], "net: third pendant under beta matches neither t-vertex");
    enter(trace, "net.alike.swap");
    Walk walk(g, a);
    const auto chain = walk.chain(x, a[x], a[y]);
    require(chain == std::vector<Vertex>{std::min(x, y), std::max(x, y)},
            "net: chain through the triangle is not {x, y}");
    walk.exchange(x, a[x], a[y]);
    require(walk.col[zp] == walk.col[y], "net: swap did not align y with z'");
    auto out = walk.moves;
    append(out, matching_path(g, walk.coloring(), b, trace));
    return out;
  }

  // All pendants distinct under c: one or two changes making two of them alike.
  Walk make_alike(const Coloring& c) const {
    enter(trace, "net.distinct");
    // next[i]: index of the t-vertex whose colour pendant i carries.
    std::array<int, 3> next{};
    for (int i = 0; i < 3; ++i) {
      next[i] = -1;
      for (int j = 0; j < 3; ++j)
        if (j != i && c[t[j]] == c[p[i]]) next[i] = j;
      require(next[i] >= 0, "net: pendant colour not found on the triangle");
    }
    require(next[next[next[0]]] == 0, "net: pendant colours are not a 3-cycle");
    // (X, Y, Z) labelled so that X' ~ colour(Y), Y' ~ colour(Z), Z' ~ colour(X).
    std::array<int, 3> rot{0, next[0], next[next[0]]};

    Walk walk(g, c);
    for (int r = 0; r < 3; ++r) {
      const int xi = rot[r], yi = rot[(r + 1) % 3], zi = rot[(r + 2) % 3];
      const auto path = walk.chain(p[xi], c[t[xi]], c[t[yi]]);
      if (!contains(path, p[zi])) {
        enter(trace, "net.distinct.single");
        walk.exchange(p[xi], c[t[xi]], c[t[yi]]);
        require(walk.col[p[xi]] == walk.col[p[zi]], "net: single exchange missed");
        return walk;
      }
    }

    enter(trace, "net.distinct.double");
    const Vertex X = t[rot[0]], Y = t[rot[1]], Z = t[rot[2]];
    const Vertex Xp = p[rot[0]], Yp = p[rot[1]], Zp = p[rot[2]];
    const Color c1 = c[X], c2 = c[Y], c3 = c[Z];
    const auto p12 = walk.chain(Xp, c1, c2);
    const auto p23 = walk.chain(Yp, c2, c3);
    require(contains(p12, Zp) && contains(p23, Xp), "net: expected pendant paths missing");
    std::optional<Vertex> xpp;
    for (Vertex w : g.neighbors(Xp))
      if (w != X && contains(p12, w)) xpp = w;
    require(xpp.has_value(), "net: x'' not found");
    walk.exchange(Xp, c1, c2);
    const auto q23 = walk.chain(Yp, c2, c3);
    std::vector<Vertex> expected;
    for (Vertex v : p23)
      if (v != Xp && v != Y && v != Z) expected.push_back(v);
    expected.push_back(*xpp);
    std::sort(expected.begin(), expected.end());
    require(q23 == expected, "net: Q23 differs from (P23 + x'') - {x', y, z}");
    walk.exchange(Yp, c2, c3);
    require(walk.col[Yp] == walk.col[Zp], "net: double exchange did not align y' and z'");
    return walk;
  }

  std::vector<KempeMove> run(const Coloring& alpha, const Coloring& beta) const {
    if (has_alike(alpha)) return alike_case(alpha, beta);
    if (has_alike(beta)) return reversed(alike_case(beta, alpha));
    const Walk w = make_alike(alpha);
    auto out = w.moves;
    append(out, alike_case(w.coloring(), beta));
    return out;
  }
};

}  // namespace

std::vector<KempeMove> net_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                SolveTrace* trace) {
  check_pair(g, alpha, beta);
  if (alpha == beta) return {};
  const auto net = find_net(g);
  if (!net) throw std::invalid_argument("net_path: graph has no induced net");
  note(trace, "net", {net->x, net->y, net->z, net->xp, net->yp, net->zp});
  return NetSolver(g, *net, trace).run(alpha, beta);
}

MatchedPair reduce_to_matching(const Graph& g, std::span<const Vertex, 3> triple,
                               const Coloring& alpha, const Coloring& beta,
                               const RepartnerFn& repartner, SolveTrace* trace) {
  (void)g;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  auto alike = [&](const Coloring& c, int pi) {
    return c[triple[pairs[pi].first]] == c[triple[pairs[pi].second]];
  };
  auto common = [&](const Coloring& a, const Coloring& b) {
    for (int pi = 0; pi < 3; ++pi)
      if (alike(a, pi) && alike(b, pi)) return true;
    return false;
  };

  MatchedPair out;
  out.left = alpha;
  out.right = beta;
  if (common(alpha, beta)) {
    enter(trace, "triple.match");
    return out;
  }
  enter(trace, "triple.repartner");
  const auto r1 = repartner(alpha, beta);
  if (r1.connected) {
    out.connected = true;
    out.alpha_moves = r1.moves;
    out.left = beta;
    return out;
  }
  require(r1.end != alpha || common(r1.end, beta), "repartner made no progress");
  if (common(r1.end, beta)) {
    out.left = r1.end;
    out.alpha_moves = r1.moves;
    return out;
  }
  const auto r2 = repartner(beta, alpha);
  if (r2.connected) {
    out.connected = true;
    out.alpha_moves = reversed(r2.moves);
    out.left = out.right = beta;
    return out;
  }
  if (common(alpha, r2.end)) {
    out.right = r2.end;
    out.beta_moves = r2.moves;
    return out;
  }
  require(common(r1.end, r2.end), "repartnered colourings do not match");
  out.left = r1.end;
  out.alpha_moves = r1.moves;
  out.right = r2.end;
  out.beta_moves = r2.moves;
  return out;
}

namespace {

// Moves c until the third leaf of the claw agrees with one of the two leaves
// that c colours alike, or connects c to `ref` directly.
class ClawRepartner {
 public:
  ClawRepartner(const Graph& g, ClawEmbedding claw, SolveTrace* trace)
      : g_(g), w_(claw.center), leaves_{claw.s, claw.u, claw.v}, trace_(trace) {}

  Repartner operator()(const Coloring& c, const Coloring& ref) const {
    Vertex u = -1, v = -1, s = -1;
    for (int i = 0; i < 3 && u < 0; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (c[leaves_[i]] == c[leaves_[j]]) {
          u = leaves_[i];
          v = leaves_[j];
          s = leaves_[3 - i - j];
          break;
        }
    require(u >= 0, "claw leaves are pairwise distinct");

    Walk walk(g_, c);
    std::set<std::vector<Color>> visited;
    while (true) {
      auto& col = walk.col;
      if (col[s] == col[u] || col[s] == col[v]) return {false, walk.coloring(), walk.moves};
      require(visited.insert(col).second, "claw case analysis revisited a colouring");
      if (auto done = step(walk, u, v, s, ref)) return *done;
    }
  }

 private:
  const Graph& g_;
  Vertex w_;
  std::array<Vertex, 3> leaves_;
  SolveTrace* trace_;

  std::pair<Vertex, Vertex> others(Vertex x) const {
    std::vector<Vertex> o;
    for (Vertex y : g_.neighbors(x))
      if (y != w_) o.push_back(y);
    require(o.size() == 2, "claw leaf is not of degree 3");
    return {o[0], o[1]};
  }

  Repartner connect(Walk& walk, const Coloring& from, const Coloring& ref,
                    std::vector<KempeMove> tail = {}) const {
    require(colorings_match(g_, from, ref).has_value(), "expected matching colourings");
    auto moves = walk.moves;
    append(moves, matching_path(g_, from, ref, trace_));
    append(moves, tail);
    return {true, ref, std::move(moves)};
  }

  // One pass of the case analysis; returns a result when finished, nullopt to
  // continue from the new colouring.
  std::optional<Repartner> step(Walk& walk, Vertex u, Vertex v, Vertex s,
                                const Coloring& ref) const {
    auto& col = walk.col;
    const Vertex w = w_;
    const Color c1 = col[u], c2 = col[s], c3 = col[w];
    require(col[v] == c1 && c3 == third(c1, c2), "claw colouring out of normal form");

    for (Vertex x : {u, v, s})
      if (walk.recolourable(x)) {
        enter(trace_, "claw.recolour_leaf");
        walk.recolour(x);
        return std::nullopt;
      }

    const auto f12 = walk.chain(s, c1, c2);
    if (!contains(f12, u) || !contains(f12, v)) {
      enter(trace_, "claw.split_chain");
      walk.exchange(s, c1, c2);
      return std::nullopt;
    }

    auto [u1, u2] = others(u);
    auto [v1, v2] = others(v);
    auto [s1, s2] = others(s);
    const bool u_alike = col[u1] == col[u2];
    const bool v_alike = col[v1] == col[v2];
    const bool s_alike = col[s1] == col[s2];

    if (!u_alike && !v_alike && !s_alike) {
      enter(trace_, "claw.case1");
      require(degree_in(g_, f12, u) == 1 && degree_in(g_, f12, v) == 1 &&
                  degree_in(g_, f12, s) == 1,
              "case 1: leaves are not ends of the (1,2)-chain");
      const auto x = closest_branch(g_, f12, u);
      require(x.has_value(), "case 1: chain has no branch vertex");
      walk.recolour(*x);
      require(!contains(walk.chain(s, c1, c2), u), "case 1: u still on the chain of s");
      walk.exchange(s, c1, c2);
      return std::nullopt;
    }

    if (s_alike) {
      require(col[s1] == c1, "case 2: neighbours of s not coloured like u");
      if (u_alike || v_alike) {
        if (!u_alike) {
          std::swap(u, v);
          std::tie(u1, u2) = std::pair{v1, v2};
        }
        enter(trace_, "claw.case2.1");
        require(col[u1] == c2 && col[u2] == c2, "case 2.1: neighbours of u not coloured like s");
        require(walk.chain(s, c2, c3) == sorted_pair(s, w), "case 2.1: (2,3)-chain of s is not {s, w}");
        walk.exchange(s, c2, c3);
        walk.recolour(u);
        return std::nullopt;
      }
      return case2_2(walk, u, v, s, ref);
    }

    if (u_alike != v_alike) {
      if (!u_alike) std::swap(u, v);
      return case3(walk, u, v, s);
    }
    return case4(walk, u, v, s);
  }

  static std::vector<Vertex> sorted_pair(Vertex a, Vertex b) {
    return {std::min(a, b), std::max(a, b)};
  }

  std::optional<Repartner> case2_2(Walk& walk, Vertex u, Vertex v, Vertex s,
                                   const Coloring& ref) const {
    enter(trace_, "claw.case2.2");
    auto& col = walk.col;
    const Vertex w = w_;
    const Color c2 = col[s], c3 = col[w];
    // Name the neighbours so that u1, v1 carry colour 2 and u2, v2 colour 3.
    auto split = [&](Vertex x) {
      auto [a, b] = others(x);
      if (col[a] != c2) std::swap(a, b);
      require(col[a] == c2 && col[b] == c3, "case 2.2: leaf neighbours not coloured 2 and 3");
      return std::pair{a, b};
    };
    auto [u1, u2] = split(u);
    auto [v1, v2] = split(v);
    auto [s1, s2] = others(s);

    Color a = ref[s1], b = ref[s2];
    if (a == b) {
      enter(trace_, "claw.case2.2.match");
      return connect(walk, walk.coloring(), ref);
    }
    const Color cc = third(a, b);
    require(ref[s] == cc, "case 2.2: reference colour of s");
    if (ref[w] == b) {
      std::swap(s1, s2);
      std::swap(a, b);
    }
    require(ref[w] == a, "case 2.2: reference colour of w");
    if (ref[u] == ref[v]) {
      enter(trace_, "claw.case2.2.match");
      return connect(walk, walk.coloring(), ref);
    }
    if (ref[u] != b) {
      std::swap(u, v);
      std::swap(u1, v1);
      std::swap(u2, v2);
    }
    require(ref[u] == b && ref[v] == cc, "case 2.2: reference colours of u and v");
    if (ref[u2] == a || ref[v2] == a) {
      enter(trace_, "claw.case2.2.match");
      return connect(walk, walk.coloring(), ref);
    }
    require(ref[u2] == cc && ref[v2] == b, "case 2.2: reference colours of u2 and v2");
    if (ref[u1] == a || ref[v1] == a) {
      enter(trace_, "claw.case2.2.1");
      require(walk.chain(s, c2, c3) == sorted_pair(s, w), "case 2.2.1: (2,3)-chain of s is not {s, w}");
      walk.exchange(s, c2, c3);
      return connect(walk, walk.coloring(), ref);
    }
    enter(trace_, "claw.case2.2.2");
    require(ref[u1] == cc && ref[v1] == b, "case 2.2.2: reference colours of u1 and v1");
    require(chain_of(g_, ref.colors(), w, a, b) == sorted_pair(u, w),
            "case 2.2.2: reference (a,b)-chain of w is not {u, w}");
    const KempeMove back(w, a, b);
    const Coloring ref2 = kempe_change(g_, ref, back);
    return connect(walk, walk.coloring(), ref2, {back});
  }

  std::optional<Repartner> case3(Walk& walk, Vertex u, Vertex v, Vertex s) const {
    auto& col = walk.col;
    const Vertex w = w_;
    const Color c1 = col[u], c2 = col[s], c3 = col[w];
    auto [u1, u2] = others(u);
    require(col[u1] == c2 && col[u2] == c2, "case 3: neighbours of u not coloured 2");
    auto [s1, s2] = others(s);
    if (col[s1] != c1) std::swap(s1, s2);
    require(col[s1] == c1 && col[s2] == c3, "case 3: neighbours of s not coloured 1 and 3");

    const auto f12 = walk.chain(s, c1, c2);
    require(degree_in(g_, f12, s) == 1 && degree_in(g_, f12, v) == 1,
            "case 3: s and v are not ends of the (1,2)-chain");
    if (!is_path(g_, f12)) {
      enter(trace_, "claw.case3.1");
      const auto t = closest_branch(g_, f12, s);
      require(t.has_value(), "case 3.1: no branch vertex");
      walk.recolour(*t);
      require(!contains(walk.chain(s, c1, c2), v), "case 3.1: v still on the chain of s");
      walk.exchange(s, c1, c2);
      return std::nullopt;
    }

    const auto f13 = walk.chain(s2, c1, c3);
    const bool s1_on = contains(f13, s1);
    if (s1_on && is_path(g_, f13) && degree_in(g_, f13, s1) == 1 && degree_in(g_, f13, s2) == 1) {
      enter(trace_, "claw.case3.2.1");
      // t: the vertex two steps from s along the (1,2)-path s, s1, t, ...
      std::optional<Vertex> t;
      for (Vertex x : g_.neighbors(s1))
        if (x != s && contains(f12, x)) t = x;
      require(t.has_value(), "case 3.2.1: path too short");
      walk.exchange(s2, c1, c3);
      if (!contains(walk.chain(v, c1, c2), s)) {
        enter(trace_, "claw.case3.2.1.split");
        walk.exchange(v, c1, c2);
        return std::nullopt;
      }
      const auto g12 = walk.chain(s, c1, c2);
      if (!is_path(g_, g12)) {
        enter(trace_, "claw.case3.2.1.branch");
        const auto b = closest_branch(g_, g12, s);
        require(b.has_value(), "case 3.2.1: no branch vertex");
        walk.recolour(*b);
        require(!contains(walk.chain(s, c1, c2), v), "case 3.2.1: v still on the chain of s");
        walk.exchange(s, c1, c2);
        return std::nullopt;
      }
      enter(trace_, "claw.case3.2.1.path");
      require(contains(g12, u) && contains(g12, *t), "case 3.2.1: new (1,2)-path lost u or t");
      std::vector<Vertex> four{w, s, s1, *t};
      std::sort(four.begin(), four.end());
      require(walk.chain(w, c2, c3) == four, "case 3.2.1: (2,3)-chain of w is not {w, s, s1, t}");
      walk.exchange(w, c2, c3);
      if (*t != u1 && *t != u2) {
        walk.recolour(u);
        return std::nullopt;
      }
      enter(trace_, "claw.case3.2.1.to_case1");
      return std::nullopt;
    }

    if (!s1_on) {
      enter(trace_, "claw.case3.2.2.split");
      walk.exchange(s2, c1, c3);
      return std::nullopt;
    }
    require(degree_in(g_, f13, s1) == 1, "case 3.2.2: s1 is not an end of the (1,3)-chain");
    if (degree_in(g_, f13, s2) == 2) {
      enter(trace_, "claw.case3.2.2.short");
      std::vector<Vertex> three{w, s, s2};
      std::sort(three.begin(), three.end());
      require(walk.chain(s, c2, c3) == three, "case 3.2.2: (2,3)-chain of s is not {w, s, s2}");
      walk.exchange(s, c2, c3);
      walk.recolour(u);
      return std::nullopt;
    }
    enter(trace_, "claw.case3.2.2.branch");
    const auto x = closest_branch(g_, f13, s2);
    require(x.has_value(), "case 3.2.2: no branch vertex");
    walk.recolour(*x);
    require(!contains(walk.chain(s2, c1, c3), s1), "case 3.2.2: s1 still on the chain of s2");
    walk.exchange(s2, c1, c3);
    return std::nullopt;
  }

  std::optional<Repartner> case4(Walk& walk, Vertex u, Vertex v, Vertex s) const {
    auto& col = walk.col;
    const Vertex w = w_;
    const Color c1 = col[u], c2 = col[s], c3 = col[w];
    auto [u1, u2] = others(u);
    auto [v1, v2] = others(v);
    require(col[u1] == c2 && col[u2] == c2 && col[v1] == c2 && col[v2] == c2,
            "case 4: neighbours of u and v not coloured 2");

    const auto f23 = walk.chain(s, c2, c3);
    if (!is_path(g_, f23)) {
      enter(trace_, "claw.case4.branch");
      const auto t = closest_branch(g_, f23, s);
      require(t.has_value(), "case 4: no branch vertex");
      walk.recolour(*t);
      return std::nullopt;
    }

    std::vector<Vertex> S{u1, u2, v1, v2};
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    std::vector<Vertex> on;
    for (Vertex x : S)
      if (contains(f23, x)) on.push_back(x);

    // After exchanging {w, u, v}, a vertex of S whose other neighbours all carry
    // colour 3 sees only colour 3 and can be recoloured.
    auto lift_through = [&](const char* label, const std::vector<Vertex>& candidates) {
      enter(trace_, label);
      std::optional<Vertex> pick;
      for (Vertex x : candidates) {
        bool ok = true;
        for (Vertex y : g_.neighbors(x))
          if (y != u && y != v && col[y] != c3) ok = false;
        if (ok) {
          pick = x;
          break;
        }
      }
      require(pick.has_value(), std::string(label) + ": no vertex of S to recolour");
      std::vector<Vertex> three{w, u, v};
      std::sort(three.begin(), three.end());
      require(walk.chain(w, c1, c3) == three, "case 4: (1,3)-chain of w is not {w, u, v}");
      walk.exchange(w, c1, c3);
      walk.recolour(*pick);
    };

    if (on.size() >= 2) {
      lift_through("claw.case4.1", on);
      return std::nullopt;
    }
    const bool u_clear = !contains(f23, u1) && !contains(f23, u2);
    const bool v_clear = !contains(f23, v1) && !contains(f23, v2);
    if (!u_clear && !v_clear) {
      // The single vertex of S on the chain is a common neighbour of u and v.
      lift_through("claw.case4.2.shared", on);
      return std::nullopt;
    }
    enter(trace_, "claw.case4.2");
    if (!u_clear) {
      std::swap(u, v);
      std::swap(u1, v1);
      std::swap(u2, v2);
    }
    walk.exchange(u1, c2, c3);
    if (col[u2] == c2) walk.exchange(u2, c2, c3);
    require(col[w] == c3 && col[s] == c2, "case 4.2: exchanges reached w or s");
    walk.recolour(u);
    return std::nullopt;
  }
};

}  // namespace

std::vector<KempeMove> claw_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                 SolveTrace* trace) {
  check_pair(g, alpha, beta);
  if (alpha == beta) return {};
  const auto claw = find_claw(g);
  if (!claw) throw std::invalid_argument("claw_path: graph is claw-free");
  note(trace, "claw", {claw->center, claw->s, claw->u, claw->v});
  const std::array<Vertex, 3> triple{claw->s, claw->u, claw->v};
  const ClawRepartner repartner(g, *claw, trace);
  const auto mp = reduce_to_matching(
      g, triple, alpha, beta,
      [&](const Coloring& c, const Coloring& ref) { return repartner(c, ref); }, trace);
  if (mp.connected) return mp.alpha_moves;
  auto out = mp.alpha_moves;
  append(out, matching_path(g, mp.left, mp.right, trace));
  append(out, reversed(mp.beta_moves));
  return out;
}

namespace {

std::vector<KempeMove> solve_connected(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                       SolveTrace& trace) {
  if (alpha == beta) return {};
  if (is_k4(g)) throw std::invalid_argument("K4 has no 3-colourings");
  if (is_prism(g)) {
    trace.enter("dispatch.prism");
    auto p = bfs_path(g, alpha, beta);
    if (!p) throw NotEquivalent("prism colourings lie in different Kempe classes");
    return p->moves;
  }
  if (!is_three_connected(g)) {
    trace.enter("dispatch.separator");
    return separator_path(g, alpha, beta, &trace);
  }
  if (!find_claw(g)) {
    trace.enter("dispatch.claw_free");
    return net_path(g, alpha, beta, &trace);
  }
  trace.enter("dispatch.claw");
  return claw_path(g, alpha, beta, &trace);
}

}  // namespace

SolveResult solve(const Graph& g, const Coloring& alpha, const Coloring& beta) {
  if (!is_cubic(g)) throw std::invalid_argument("solve: graph is not cubic");
  check_pair(g, alpha, beta);
  if (alpha.k() != 3) throw std::invalid_argument("solve: only 3-colourings are supported");

  SolveResult r;
  r.witness.start = alpha;
  if (alpha == beta) {
    r.trace.enter("dispatch.identical");
    return r;
  }
  const auto comps = connected_components(g);
  if (comps.count == 1) {
    r.witness.moves = solve_connected(g, alpha, beta, r.trace);
  } else {
    r.trace.enter("dispatch.components");
    for (int c = 0; c < comps.count; ++c) {
      std::vector<Vertex> part;
      for (Vertex v = 0; v < g.order(); ++v)
        if (comps.label[v] == c) part.push_back(v);
      const Graph sub = induced_subgraph(g, part);
      for (const auto& m : solve_connected(sub, restrict_to(alpha, part), restrict_to(beta, part),
                                           r.trace))
        r.witness.moves.emplace_back(part[m.anchor], m.a, m.b);
    }
  }
  const auto check = validate(g, r.witness);
  require(check.ok, "solver produced an invalid witness: " + check.reason);
  require(check.end == beta, "solver witness does not end at beta");
  return r;
}

}  // namespace kempe
