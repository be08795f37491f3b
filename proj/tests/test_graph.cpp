#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "kempe/graph.hpp"
#include "kempe/graph_io.hpp"
#include "kempe/structure.hpp"
#include "oracles.hpp"

using namespace kempe;

namespace {

std::vector<Graph> random_graphs(int count, int max_n, std::uint64_t seed, double p = 0.35) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng() % (max_n - 1));
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    out.emplace_back(n, edges);
  }
  return out;
}

Graph two_diamonds() {
  // spines 0-1 and 4-5, tips 2,3 and 6,7; tips joined 2-6 and 3-7
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 5}, {4, 6},
                      {4, 7}, {5, 6}, {5, 7}, {2, 6}, {3, 7}};
  return Graph(8, e);
}

}  // namespace

TEST_CASE("graph construction rejects loops, parallel edges and bad ids") {
  std::vector<Edge> loop{{1, 1}}, twice{{0, 1}, {1, 0}}, range{{0, 3}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, twice), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, range), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and matches the neighbour lists") {
  for (const auto& g : random_graphs(40, 12, 3)) {
    for (Vertex u = 0; u < g.order(); ++u) {
      auto nb = g.neighbors(u);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex v = 0; v < g.order(); ++v) {
        const bool listed = std::binary_search(nb.begin(), nb.end(), v);
        CHECK(g.adjacent(u, v) == listed);
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      }
      CHECK_FALSE(g.adjacent(u, u));
    }
  }
}

TEST_CASE("adjacency without the bit matrix") {
  const Graph g = named::cycle(70);
  CHECK_FALSE(g.has_bit_matrix());
  CHECK(g.adjacent(0, 69));
  CHECK(g.adjacent(10, 11));
  CHECK_FALSE(g.adjacent(10, 12));
}

TEST_CASE("graph6 examples") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(k4 == named::complete(4));

  const Graph two = parse_graph6("A?");
  CHECK(two.order() == 2);
  CHECK(two.size() == 0);

  CHECK(parse_graph6(encode_graph6(named::prism())) == named::prism());
  CHECK(parse_graph6(">>graph6<<C~") == k4);
}

TEST_CASE("graph6 agrees with a codec written from the format description") {
  auto graphs = random_graphs(60, 20, 11);
  graphs.push_back(named::petersen());
  graphs.push_back(named::cycle(70));
  graphs.push_back(Graph(0));
  for (const auto& g : graphs) {
    const auto word = encode_graph6(g);
    CHECK(word == oracle::graph6_encode(oracle::matrix(g)));
    CHECK(oracle::graph6_decode(word) == oracle::matrix(g));
    CHECK(parse_graph6(word) == g);
  }
}

TEST_CASE("graph6 decodes the reference corpus") {
  const auto ref = oracle::reference_corpus();
  REQUIRE(ref.size() == 27);
  for (const auto& r : ref) {
    const Graph g = parse_graph6(r.graph6);
    auto edges = r.edges;
    std::sort(edges.begin(), edges.end());
    CHECK(g.edges() == edges);
    CHECK(encode_graph6(g) == r.graph6);
  }
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("C"), FormatError);       // body too short
  CHECK_THROWS_AS(parse_graph6("C~~"), FormatError);     // body too long
  CHECK_THROWS_AS(parse_graph6("C\x7f"), FormatError);   // character above 126
  CHECK_THROWS_AS(parse_graph6("C "), FormatError);      // character below 63
  CHECK_THROWS_AS(parse_graph6("A@"), FormatError);      // nonzero padding bit
  CHECK_THROWS_AS(parse_graph6("~??A"), FormatError);    // long prefix for a small n
}

TEST_CASE("graph6 stream and edge-list input") {
  std::istringstream in(">>graph6<<C~\n\nE{Sw\n");
  const auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 2);
  CHECK(is_prism(gs[1]));

  std::istringstream bad("C~\nC\n");
  CHECK_THROWS_WITH_AS(read_graph6_stream(bad), doctest::Contains("line 2"), FormatError);

  std::istringstream el("4 3\n0 1\n1 2\n2 3\n");
  CHECK(parse_edge_list(el) == named::path(4));
  std::istringstream round(format_edge_list(named::petersen()));
  CHECK(parse_edge_list(round) == named::petersen());

  std::istringstream short_list("3 2\n0 1\n");
  CHECK_THROWS_AS(parse_edge_list(short_list), FormatError);
}

TEST_CASE("minimum separator examples") {
  auto p3 = find_min_separator(named::path(3), 2);
  REQUIRE(p3);
  CHECK(p3->vertices == std::vector<Vertex>{1});

  CHECK_FALSE(find_min_separator(named::prism(), 2));
  CHECK(is_three_connected(named::prism()));

  const Graph dd = two_diamonds();
  auto sep = find_min_separator(dd, 2);
  REQUIRE(sep);
  CHECK(sep->vertices.size() == 2);
  CHECK(oracle::is_separator(oracle::matrix(dd), sep->vertices));

  CHECK_THROWS_AS(find_min_separator(Graph(4), 2), std::invalid_argument);
  CHECK_FALSE(find_min_separator(named::complete(4), 2));
}

TEST_CASE("separators agree with brute force") {
  for (const auto& g : random_graphs(150, 12, 5, 0.3)) {
    if (!is_connected(g) || g.order() < 4) continue;
    const auto m = oracle::matrix(g);
    const auto expect = oracle::min_separator_size(m, 2);
    const auto sep = find_min_separator(g, 2);
    REQUIRE(sep.has_value() == expect.has_value());
    if (!sep) continue;
    CHECK(static_cast<int>(sep->vertices.size()) == *expect);
    CHECK(oracle::is_separator(m, sep->vertices));
    // sides partition V \ S with no edge between them
    std::vector<int> where(g.order(), 0);
    for (Vertex v : sep->vertices) where[v] = 1;
    for (Vertex v : sep->side_a) where[v] = 2;
    for (Vertex v : sep->side_b) where[v] = 3;
    CHECK(std::count(where.begin(), where.end(), 0) == 0);
    CHECK_FALSE(sep->side_a.empty());
    CHECK_FALSE(sep->side_b.empty());
    for (auto [u, v] : g.edges()) CHECK_FALSE(where[u] + where[v] == 5);
    // a clique is preferred whenever some minimum separator is a clique
    bool clique_exists = false;
    if (*expect == 1) clique_exists = true;
    else
      for (auto [u, v] : g.edges())
        clique_exists |= oracle::is_separator(m, {u, v});
    CHECK(sep->is_clique == clique_exists);
  }
}

TEST_CASE("degeneracy examples and brute force") {
  CHECK(degeneracy(named::path(5)).d == 1);
  CHECK(degeneracy(named::prism()).d == 3);
  CHECK(degeneracy(remove_edge(named::complete(4), 0, 1)).d == 2);
  for (const auto& g : random_graphs(120, 9, 9, 0.45)) {
    const auto ord = degeneracy(g);
    CHECK(ord.d == oracle::degeneracy(oracle::matrix(g)));
    // witnessing order
    std::vector<bool> gone(g.order(), false);
    REQUIRE(static_cast<int>(ord.order.size()) == g.order());
    for (Vertex v : ord.order) {
      int later = 0;
      for (Vertex w : g.neighbors(v)) later += !gone[w];
      CHECK(later <= ord.d);
      gone[v] = true;
    }
  }
}

TEST_CASE("claw detection") {
  auto c = find_claw(named::claw());
  REQUIRE(c);
  CHECK(*c == ClawEmbedding{0, 1, 2, 3});
  CHECK_FALSE(find_claw(named::prism()));
  CHECK(find_claw(named::complete_bipartite(3, 3)));

  const auto claw = oracle::matrix(named::claw());
  for (const auto& g : random_graphs(150, 10, 21)) {
    const auto found = find_claw(g);
    CHECK(found.has_value() == oracle::has_induced(oracle::matrix(g), claw));
    if (!found) continue;
    const std::vector<Vertex> vs{found->center, found->s, found->u, found->v};
    CHECK(induced_subgraph(g, vs) == named::claw());
    // lexicographically least by (w, s, u, v)
    bool earlier = false;
    for (Vertex w = 0; w < g.order() && !earlier; ++w) {
      auto nb = g.neighbors(w);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          for (std::size_t k = j + 1; k < nb.size(); ++k) {
            ClawEmbedding e{w, nb[i], nb[j], nb[k]};
            const bool induced = !g.adjacent(e.s, e.u) && !g.adjacent(e.s, e.v) && !g.adjacent(e.u, e.v);
            const auto key = std::tie(e.center, e.s, e.u, e.v);
            earlier |= induced && key < std::tie(found->center, found->s, found->u, found->v);
          }
    }
    CHECK_FALSE(earlier);
  }
}

TEST_CASE("net and motif detection") {
  auto net = find_net(named::net());
  REQUIRE(net);
  CHECK(induced_subgraph(named::net(), std::vector<Vertex>{net->x, net->y, net->z, net->xp, net->yp,
                                                          net->zp}) == named::net());
  CHECK_FALSE(find_net(named::complete(4)));

  auto d = find_induced_motif(named::diamond(), Motif::diamond);
  REQUIRE(d);
  CHECK(induced_subgraph(named::diamond(), d->vertices) == named::diamond());
  CHECK_FALSE(find_induced_motif(named::complete(4), Motif::diamond));
  CHECK_FALSE(find_induced_motif(named::prism(), Motif::diamond));
  // the prism does contain an induced house: a square face plus the opposite roof
  CHECK(find_induced_motif(named::prism(), Motif::house));
  CHECK(oracle::has_induced(oracle::matrix(named::prism()), oracle::matrix(named::house())));

  const auto house = oracle::matrix(named::house());
  const auto diamond = oracle::matrix(named::diamond());
  for (const auto& g : random_graphs(100, 9, 33, 0.4)) {
    const auto m = oracle::matrix(g);
    auto h = find_induced_motif(g, Motif::house);
    auto dd = find_induced_motif(g, Motif::diamond);
    CHECK(h.has_value() == oracle::has_induced(m, house));
    CHECK(dd.has_value() == oracle::has_induced(m, diamond));
    if (h) CHECK(induced_subgraph(g, h->vertices) == named::house());
    if (dd) CHECK(induced_subgraph(g, dd->vertices) == named::diamond());
    if (auto n = find_net(g))
      CHECK(induced_subgraph(g, std::vector<Vertex>{n->x, n->y, n->z, n->xp, n->yp, n->zp}) ==
            named::net());
  }
}

TEST_CASE("identify_vertices") {
  auto [p, map] = identify_vertices(named::cycle(4), 0, 2);
  CHECK(p.order() == 3);
  CHECK(isomorphic(p, named::path(3)));
  CHECK(map.forward[0] == map.forward[2]);
  CHECK(p.degree(map.forward[0]) == 2);

  auto [one, m1] = identify_vertices(Graph(2), 0, 1);
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);

  CHECK_THROWS_AS(identify_vertices(named::prism(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(identify_vertices(named::prism(), 2, 2), std::invalid_argument);

  // prism, identify 0 with 4: N(0) u N(4) = {1, 2, 3, 5}
  auto [q, mq] = identify_vertices(named::prism(), 0, 4);
  CHECK(q.order() == 5);
  CHECK(q.degree(mq.forward[0]) == 4);

  std::mt19937_64 rng(4);
  for (const auto& g : random_graphs(80, 10, 17)) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = 0; y < g.order(); ++y)
        if (x != y && !g.adjacent(x, y)) pairs.emplace_back(x, y);
    if (pairs.empty()) continue;
    auto [x, y] = pairs[rng() % pairs.size()];
    auto [h, mh] = identify_vertices(g, x, y);
    const Vertex z = mh.forward[x];
    CHECK(mh.forward[y] == z);
    std::set<Vertex> un;
    for (Vertex w : g.neighbors(x)) un.insert(w);
    for (Vertex w : g.neighbors(y)) un.insert(w);
    CHECK(h.degree(z) == static_cast<int>(un.size()));
    for (auto [u, v] : g.edges()) CHECK(h.adjacent(mh.forward[u], mh.forward[v]));
    for (auto [u, v] : h.edges()) {
      bool found = false;
      for (auto [a, b] : g.edges())
        found |= (mh.forward[a] == u && mh.forward[b] == v) || (mh.forward[a] == v && mh.forward[b] == u);
      CHECK(found);
    }
  }
}

TEST_CASE("induced subgraph, components and plumbing") {
  const Graph g = named::petersen();
  const std::vector<Vertex> outer{0, 1, 2, 3, 4};
  CHECK(isomorphic(induced_subgraph(g, outer), named::cycle(5)));
  CHECK(is_cubic(g));
  CHECK(is_connected(g));
  CHECK(triangles(g).empty());
  CHECK(triangles(named::complete(4)).size() == 4);

  std::vector<Edge> two{{0, 1}, {2, 3}};
  auto comps = connected_components(Graph(5, two));
  CHECK(comps.count == 3);
  CHECK(comps.label == std::vector<int>{0, 0, 1, 1, 2});

  auto [r, m] = remove_vertex(named::path(3), 1);
  CHECK(r.order() == 2);
  CHECK(r.size() == 0);
  CHECK(m.forward[1] == -1);
  CHECK(add_edge(named::path(3), 0, 2) == named::cycle(3));
}

TEST_CASE("isomorphism and named recognisers agree with brute force") {
  auto graphs = random_graphs(60, 7, 41, 0.5);
  for (std::size_t i = 0; i + 1 < graphs.size(); ++i) {
    const auto& a = graphs[i];
    const auto& b = graphs[i + 1];
    CHECK(isomorphic(a, b) == oracle::isomorphic(oracle::matrix(a), oracle::matrix(b)));
    CHECK(isomorphic(a, a));
  }
  CHECK(is_k4(named::complete(4)));
  CHECK(is_prism(named::prism()));
  CHECK_FALSE(is_prism(named::complete_bipartite(3, 3)));
  CHECK(is_prism(parse_graph6("E{Sw")));
}
