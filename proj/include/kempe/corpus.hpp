#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kempe/graph.hpp"
#include "kempe/structure.hpp"

namespace kempe {

// graph6 word of the relabelling whose adjacency string (graph6 bit order) is
// lexicographically greatest. Equal exactly for isomorphic graphs.
std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

// All connected cubic graphs on n vertices, one per isomorphism class, each in
// canonical labelling, ordered by canonical word. n must be even, 4 <= n <= 10.
std::vector<Graph> gen_cubic(int n);

struct CorpusSpec {
  // Generated corpus over an even range of orders, unless `path` is set.
  int n_min = 6;
  int n_max = 10;
  std::optional<std::string> path;

  bool require_connected = true;
  bool require_cubic = true;
  bool exclude_k4 = false;
  bool exclude_prism = false;
};

std::vector<Graph> load_corpus(const CorpusSpec& spec);
bool admits(const CorpusSpec& spec, const Graph& g);

struct StructureReport {
  std::string graph6;
  int n = 0;
  std::size_t m = 0;
  bool cubic = false;
  bool connected = false;
  bool three_connected = false;
  bool k4 = false;
  bool prism = false;
  int degeneracy = 0;
  std::size_t triangles = 0;
  std::optional<Separator> separator;  // minimum separator of size <= 2 (connected graphs only)
  std::optional<ClawEmbedding> claw;
  std::optional<NetEmbedding> net;
  std::optional<MotifEmbedding> house;
  std::optional<MotifEmbedding> diamond;
};

StructureReport analyze_structure(const Graph& g);

}  // namespace kempe
