#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kempe/graph_io.hpp"
#include "kempe/json_io.hpp"
#include "oracles.hpp"

using namespace kempe;

namespace {

bool same(const Separator& a, const Separator& b) {
  return a.vertices == b.vertices && a.side_a == b.side_a && a.side_b == b.side_b &&
         a.is_clique == b.is_clique;
}

void check_structure_round_trip(const Graph& g) {
  const auto r = analyze_structure(g);
  const auto back = structure_from_json(parse_json(structure_to_json(r).dump()));
  CHECK(back.graph6 == r.graph6);
  CHECK(back.n == r.n);
  CHECK(back.m == r.m);
  CHECK(back.cubic == r.cubic);
  CHECK(back.connected == r.connected);
  CHECK(back.three_connected == r.three_connected);
  CHECK(back.k4 == r.k4);
  CHECK(back.prism == r.prism);
  CHECK(back.degeneracy == r.degeneracy);
  CHECK(back.triangles == r.triangles);
  CHECK(back.separator.has_value() == r.separator.has_value());
  if (r.separator) CHECK(same(*back.separator, *r.separator));
  CHECK(back.claw == r.claw);
  CHECK(back.net == r.net);
  CHECK(back.house == r.house);
  CHECK(back.diamond == r.diamond);
  CHECK(structure_to_json(back) == structure_to_json(r));
}

}  // namespace

TEST_CASE("colourings, moves and sequences round trip") {
  const Coloring c(3, {1, 2, 3, 2, 3, 1});
  CHECK(coloring_to_json(c).dump() == R"({"k":3,"colors":[1,2,3,2,3,1]})");
  CHECK(coloring_from_json(parse_json(coloring_to_json(c).dump())) == c);

  const KempeMove m(4, 3, 1);
  CHECK(move_to_json(m).dump() == R"({"anchor":4,"a":1,"b":3})");
  CHECK(move_from_json(move_to_json(m)) == m);

  std::mt19937_64 rng(6);
  const Graph g = named::petersen();
  const auto all = enumerate_colorings(g, 3);
  for (int t = 0; t < 50; ++t) {
    KempeSequence s{all[rng() % all.size()], {}};
    for (int i = 0; i < 6; ++i)
      s.moves.emplace_back(static_cast<Vertex>(rng() % 10), 1 + static_cast<int>(rng() % 2), 3);
    CHECK(sequence_from_json(parse_json(sequence_to_json(s).dump())) == s);
  }
}

TEST_CASE("traces round trip") {
  SolveTrace t;
  t.enter("dispatch.claw");
  t.note("claw", {0, 3, 4, 5});
  t.enter("triple.match");
  const Json j = trace_to_json(t, 7);
  CHECK(j["moves"] == 7);
  CHECK(j["cases"].size() == 2);
  CHECK(trace_from_json(parse_json(j.dump())) == t);
  CHECK(trace_from_json(trace_to_json(SolveTrace{}, 0)) == SolveTrace{});
}

TEST_CASE("verdicts, summaries and class reports round trip") {
  std::vector<Graph> graphs{named::prism(), named::complete(4), named::complete_bipartite(3, 3),
                            named::cycle(5), named::petersen()};
  const auto verdicts = verify_theorem(graphs, 1, 100);
  for (const auto& v : verdicts) {
    const Json j = verdict_to_json(v);
    const auto back = verdict_from_json(parse_json(j.dump()));
    CHECK(back.graph6 == v.graph6);
    CHECK(back.n == v.n);
    CHECK(back.kind == v.kind);
    CHECK(back.colorings == v.colorings);
    CHECK(back.classes == v.classes);
    CHECK(back.sizes == v.sizes);
    CHECK(back.pass == v.pass);
    CHECK(back.skipped == v.skipped);
    CHECK(back.error == v.error);
    CHECK(verdict_to_json(back) == j);
  }
  CHECK(verdict_to_json(verdicts[0])["verdict"] == "PASS");
  CHECK(verdict_to_json(verdicts[3])["verdict"] == "SKIPPED");

  const auto s = summarize(verdicts);
  const auto sb = summary_from_json(parse_json(summary_to_json(s).dump()));
  CHECK(sb.graphs == s.graphs);
  CHECK(sb.passed == s.passed);
  CHECK(sb.skipped == s.skipped);
  CHECK(sb.text() == s.text());

  for (const auto& g : graphs) {
    const auto r = kempe_classes(g, 3).report;
    const Json j = class_report_to_json(r);
    const auto back = class_report_from_json(parse_json(j.dump()));
    CHECK(back.graph_id == r.graph_id);
    CHECK(back.sizes == r.sizes);
    CHECK(back.representatives == r.representatives);
    CHECK(class_report_to_json(back) == j);
  }
  const auto prism = class_report_to_json(kempe_classes(named::prism(), 3).report);
  CHECK(prism["classes"] == 2);
  CHECK(prism["sizes"] == Json::array({6, 6}));
}

TEST_CASE("structure reports round trip") {
  check_structure_round_trip(named::prism());
  check_structure_round_trip(named::complete_bipartite(3, 3));
  check_structure_round_trip(named::path(4));
  check_structure_round_trip(named::house());
  check_structure_round_trip(oracle::truncate(named::complete(4)));
  check_structure_round_trip(Graph(3));
}

TEST_CASE("malformed documents raise FormatError") {
  CHECK_THROWS_AS(parse_json("{\"k\": 3,"), FormatError);
  CHECK_THROWS_AS(coloring_from_json(parse_json("[1,2,3]")), FormatError);
  CHECK_THROWS_AS(coloring_from_json(parse_json(R"({"colors":[1,2]})")), FormatError);
  CHECK_THROWS_AS(coloring_from_json(parse_json(R"({"k":3,"colors":[1,4]})")), FormatError);
  CHECK_THROWS_AS(coloring_from_json(parse_json(R"({"k":0,"colors":[]})")), FormatError);
  CHECK_THROWS_AS(coloring_from_json(parse_json(R"({"k":"3","colors":[1]})")), FormatError);
  CHECK_THROWS_AS(coloring_from_json(parse_json(R"({"k":3,"colors":[1.5]})")), FormatError);
  CHECK_THROWS_AS(move_from_json(parse_json(R"({"anchor":0,"a":2,"b":2})")), FormatError);
  CHECK_THROWS_AS(move_from_json(parse_json(R"({"anchor":-1,"a":1,"b":2})")), FormatError);
  CHECK_THROWS_AS(sequence_from_json(parse_json(
                      R"({"start":{"k":3,"colors":[1,2]},"moves":[{"anchor":5,"a":1,"b":2}]})")),
                  FormatError);
  CHECK_THROWS_AS(trace_from_json(parse_json(R"({"cases":[1],"moves":0,"subproblems":[]})")),
                  FormatError);
  CHECK_THROWS_AS(verdict_from_json(parse_json(
                      R"({"graph6":"E{Sw","n":6,"colorings":12,"classes":2,"sizes":[6,6],"verdict":"MAYBE","kind":"prism"})")),
                  FormatError);
  CHECK_THROWS_AS(summary_from_json(parse_json(
                      R"({"summary":"2 graphs, 2 PASS","graphs":2,"passed":1,"failed":0,"skipped":0})")),
                  FormatError);
  CHECK_THROWS_AS(class_report_from_json(parse_json(
                      R"({"graph6":"E{Sw","k":3,"colorings":12,"classes":2,"sizes":[6],"representatives":[]})")),
                  FormatError);
}
