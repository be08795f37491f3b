#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

struct ClassReport {
  std::string graph_id;  // graph6 word
  int k = 0;
  std::size_t colorings = 0;
  std::size_t classes = 0;
  std::vector<std::size_t> sizes;           // descending
  std::vector<Coloring> representatives;    // least colouring of each class, aligned with sizes
};

struct KempePartition {
  ClassReport report;
  std::vector<Coloring> colorings;  // lexicographic order
  std::vector<int> class_of;        // index into report.sizes
};

// Partitions C_k(G) into Kempe classes (components of the one-move relation).
KempePartition kempe_classes(const Graph& g, int k, std::size_t ceiling = kDefaultCeiling);

// Every colouring reachable from c by one Kempe change, one per distinct
// (chain, pair); each chain is named by its least vertex.
std::vector<std::pair<KempeMove, Coloring>> kempe_neighbors(const Graph& g, const Coloring& c);

// Shortest witness from alpha to beta, or nullopt when they are not Kempe
// equivalent. Throws CeilingExceeded if the search visits more than `ceiling` colourings.
std::optional<KempeSequence> bfs_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                      std::size_t ceiling = kDefaultCeiling);

enum class GraphKind { k4, prism, other };

struct Verdict {
  std::string graph6;
  int n = 0;
  GraphKind kind = GraphKind::other;
  std::size_t colorings = 0;
  std::size_t classes = 0;
  std::vector<std::size_t> sizes;
  bool pass = false;
  bool skipped = false;
  std::string error;  // why a graph was skipped
};

struct VerifySummary {
  std::size_t graphs = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::string text() const;
};

// Checks the cubic 3-colouring dichotomy on each graph: K4 has no colourings,
// the prism has two classes, every other connected cubic graph has one.
// Non-cubic or disconnected graphs are reported as skipped.
Verdict verify_graph(const Graph& g, std::size_t ceiling = kDefaultCeiling);

std::vector<Verdict> verify_theorem(const std::vector<Graph>& corpus, int jobs = 1,
                                    std::size_t ceiling = kDefaultCeiling);
VerifySummary summarize(const std::vector<Verdict>& verdicts);

std::string to_string(GraphKind kind);

}  // namespace kempe
