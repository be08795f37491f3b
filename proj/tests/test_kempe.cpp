#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kempe/coloring.hpp"
#include "kempe/corpus.hpp"
#include "kempe/structure.hpp"
#include "oracles.hpp"

using namespace kempe;

namespace {

const Coloring kPrismA(3, {1, 2, 3, 2, 3, 1});

std::vector<Graph> small_graphs(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 40) edges.emplace_back(u, v);
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace

TEST_CASE("colourings and moves validate their arguments") {
  CHECK_THROWS_AS(Coloring(3, {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Coloring(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(Coloring(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(KempeMove(0, 2, 2), InvalidMove);
  const KempeMove m(3, 2, 1);
  CHECK(m.a == 1);
  CHECK(m.b == 2);
  CHECK(is_proper(named::prism(), kPrismA));
  CHECK_FALSE(is_proper(named::prism(), Coloring(3, {1, 1, 3, 2, 3, 1})));
}

TEST_CASE("kempe chain examples") {
  const Graph prism = named::prism();
  CHECK(kempe_chain(prism, kPrismA, 0, 1, 2) == std::vector<Vertex>{0, 1, 3, 5});
  CHECK(kempe_chain(prism, kPrismA, 0, 2, 1) == std::vector<Vertex>{0, 1, 3, 5});
  CHECK_THROWS_AS(kempe_chain(prism, kPrismA, 2, 1, 2), InvalidMove);

  const Graph tri = named::cycle(3);
  CHECK(kempe_chain(tri, Coloring(3, {1, 2, 3}), 0, 1, 2) == std::vector<Vertex>{0, 1});

  // vertex 1 of P3 coloured 2 between two 1s: its (2,3)-chain is just itself
  CHECK(kempe_chain(named::path(3), Coloring(3, {1, 2, 1}), 1, 2, 3) == std::vector<Vertex>{1});
}

TEST_CASE("kempe change examples") {
  const Graph prism = named::prism();
  const Coloring out = kempe_change(prism, kPrismA, KempeMove(0, 1, 2));
  CHECK(out == Coloring(3, {2, 1, 3, 1, 3, 2}));
  CHECK(is_proper(prism, out));
  CHECK(kempe_change(prism, out, KempeMove(0, 1, 2)) == kPrismA);

  const Coloring p3(3, {1, 2, 1});
  CHECK(kempe_change(named::path(3), p3, KempeMove(1, 2, 3)) == Coloring(3, {1, 3, 1}));
}

TEST_CASE("moves preserve properness, are involutions, and chains are well defined") {
  for (int n : {6, 8, 10}) {
    for (const auto& g : gen_cubic(n)) {
      const auto m = oracle::matrix(g);
      for (const auto& c : enumerate_colorings(g, 3)) {
        for (Vertex x = 0; x < g.order(); ++x)
          for (Color b = 1; b <= 3; ++b) {
            if (b == c[x]) continue;
            const KempeMove mv(x, c[x], b);
            const auto chain = kempe_chain(g, c, x, c[x], b);
            const auto expect = oracle::chain(m, c.colors(), x, c[x], b);
            for (Vertex v = 0; v < g.order(); ++v)
              REQUIRE(std::binary_search(chain.begin(), chain.end(), v) == expect[v]);
            const Coloring d = kempe_change(g, c, mv);
            REQUIRE(is_proper(g, d));
            REQUIRE(kempe_change(g, d, mv) == c);
            for (Vertex y : chain) REQUIRE(kempe_chain(g, c, y, mv.a, mv.b) == chain);
          }
      }
    }
  }
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_colorings(named::complete(4), 3).empty());
  CHECK(enumerate_colorings(named::cycle(3), 3).size() == 6);
  CHECK(enumerate_colorings(named::prism(), 3).size() == 12);
  CHECK(enumerate_colorings(named::cycle(4), 3).size() == 18);
  CHECK(enumerate_colorings(Graph(0), 3).size() == 1);
  CHECK_THROWS_AS(enumerate_colorings(Graph(12), 3, 1000), CeilingExceeded);
  CHECK(enumerate_colorings(named::petersen(), 3).size() ==
        static_cast<std::size_t>(oracle::chromatic(named::petersen(), 3)));
}

TEST_CASE("enumeration matches the chromatic polynomial and brute force") {
  for (const auto& g : small_graphs(80, 8, 101)) {
    for (int k : {2, 3, 4}) {
      const auto all = enumerate_colorings(g, k);
      CHECK(static_cast<long long>(all.size()) == oracle::chromatic(g, k));
      const auto brute = oracle::all_colorings(oracle::matrix(g), k);
      REQUIRE(all.size() == brute.size());
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].colors() == brute[i]);
    }
  }
}

TEST_CASE("matching colourings") {
  const Coloring beta(3, {1, 3, 2, 3, 2, 1});
  auto m = colorings_match(named::prism(), kPrismA, beta);
  REQUIRE(m);
  CHECK(*m == Match{1, 3, 0});

  CHECK_FALSE(colorings_match(named::cycle(3), Coloring(3, {1, 2, 3}), Coloring(3, {3, 1, 2})));
  // alpha == beta with two like-coloured vertices sharing a neighbour
  auto self = colorings_match(named::path(3), Coloring(3, {1, 2, 1}), Coloring(3, {1, 2, 1}));
  REQUIRE(self);
  CHECK(*self == Match{0, 2, 1});
}

TEST_CASE("replay and validate") {
  const Graph prism = named::prism();
  CHECK(replay(prism, {kPrismA, {}}) == kPrismA);
  const KempeMove mv(0, 1, 2);
  CHECK(replay(prism, {kPrismA, {mv}}) == kempe_change(prism, kPrismA, mv));

  auto bad = validate(prism, {kPrismA, {mv, KempeMove(4, 1, 2)}});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.failed_at);
  CHECK(*bad.failed_at == 1);  // vertex 4 carries colour 3 after the first move
  CHECK_THROWS_AS(replay(prism, {kPrismA, {mv, KempeMove(4, 1, 2)}}), InvalidMove);

  auto improper = validate(prism, {Coloring(3, {1, 1, 3, 2, 3, 1}), {}});
  CHECK_FALSE(improper.ok);
  CHECK(*improper.failed_at == 0);

  auto range = validate(prism, {kPrismA, {KempeMove(9, 1, 2)}});
  CHECK_FALSE(range.ok);

  std::vector<KempeMove> seq{KempeMove(0, 1, 2), KempeMove(2, 3, 1), KempeMove(4, 1, 2)};
  const Coloring end = replay(prism, {kPrismA, seq});
  CHECK(replay(prism, {end, reversed(seq)}) == kPrismA);
}

TEST_CASE("canonical class") {
  CHECK(canonical_class(Coloring(3, {2, 3, 1})) == Coloring(3, {1, 2, 3}));
  CHECK(canonical_class(Coloring(3, {1, 2, 3})) == Coloring(3, {1, 2, 3}));

  std::set<std::vector<Color>> prism_reps;
  for (const auto& c : enumerate_colorings(named::prism(), 3))
    prism_reps.insert(canonical_class(c).colors());
  CHECK(prism_reps.size() == 2);

  for (const auto& g : small_graphs(30, 7, 55))
    for (int k : {3, 4})
      for (const auto& c : enumerate_colorings(g, k)) {
        const auto canon = canonical_class(c);
        CHECK(canon.colors() == oracle::canonical_class(c.colors(), k));
        CHECK(canonical_class(canon) == canon);
      }
}

TEST_CASE("chains of claw-free cubic graphs are paths or cycles") {
  std::vector<Graph> graphs{named::prism(), oracle::truncate(named::complete(4))};
  for (const auto& g : graphs) {
    REQUIRE_FALSE(find_claw(g));
    for (const auto& c : enumerate_colorings(g, 3))
      for (Vertex x = 0; x < g.order(); ++x)
        for (Color b = 1; b <= 3; ++b) {
          if (b == c[x]) continue;
          const auto chain = kempe_chain(g, c, x, c[x], b);
          for (Vertex v : chain) {
            int d = 0;
            for (Vertex w : g.neighbors(v)) d += std::binary_search(chain.begin(), chain.end(), w);
            CHECK(d <= 2);
          }
        }
  }
}
