#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// A structural object the solver relied on, e.g. {"separator", {x, y}}.
struct Subproblem {
  std::string kind;
  std::vector<Vertex> vertices;
  friend bool operator==(const Subproblem&, const Subproblem&) = default;
};

struct SolveTrace {
  std::vector<std::string> cases;
  std::vector<Subproblem> subproblems;

  void enter(std::string label) { cases.push_back(std::move(label)); }
  void note(std::string kind, std::vector<Vertex> vertices) {
    subproblems.push_back({std::move(kind), std::move(vertices)});
  }
  friend bool operator==(const SolveTrace&, const SolveTrace&) = default;
};

// Every label the solver can record.
const std::vector<std::string>& documented_cases();

struct SolveResult {
  KempeSequence witness;
  SolveTrace trace;
};

// Raised when the inputs are valid colourings that are not Kempe equivalent
// (the two classes of the prism).
class NotEquivalent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A local structural claim of the case analysis did not hold. Never expected;
// indicates a bug rather than bad input.
class SolverInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Witness from alpha to beta for 3-colourings of a cubic graph. Disconnected
// graphs are handled component by component. Throws std::invalid_argument on
// non-cubic input or improper colourings, NotEquivalent for prism pairs in
// different classes.
SolveResult solve(const Graph& g, const Coloring& alpha, const Coloring& beta);

// Connector for graphs of degeneracy at most k - 1, built by peeling a
// degeneracy ordering and lifting the witness of the remainder one vertex at a time.
std::vector<KempeMove> degenerate_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                       SolveTrace* trace = nullptr);

// Produces a witness between two colourings of a side graph (in side-local ids).
using SideSolver =
    std::function<std::vector<KempeMove>(const Graph& side, const Coloring&, const Coloring&)>;

// g is the union of g[side_a] and g[side_b]; their intersection must be a clique
// and no edge may join side_a \ side_b to side_b \ side_a.
std::vector<KempeMove> glue_clique_paths(const Graph& g, std::span<const Vertex> side_a,
                                         std::span<const Vertex> side_b, const Coloring& alpha,
                                         const Coloring& beta, const SideSolver& solve_side,
                                         SolveTrace* trace = nullptr);

// Rewrites a witness on `super` (same vertices, more edges) as one on g: each
// super-chain is exchanged as the g-chains it splits into.
KempeSequence restrict_sequence(const Graph& g, const Graph& super, const KempeSequence& s);

// Lifts a witness on the graph obtained by identifying non-adjacent x and y to g.
// Each move becomes one move, or two when x and y fall in different g-chains.
KempeSequence identify_lift(const Graph& g, Vertex x, Vertex y, const KempeSequence& s);

// Witness between matching colourings of a 3-connected graph of maximum degree k.
std::vector<KempeMove> matching_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                     SolveTrace* trace = nullptr);

// For a non-adjacent separator {x, y} of a cubic graph where x1 is the only
// neighbour of x on one side and y1 the only neighbour of y on the other:
// at most two changes after which x and y are coloured differently.
std::vector<KempeMove> split_separator_pair(const Graph& g, Vertex x, Vertex y, Vertex x1,
                                            Vertex y1, const Coloring& c);

// Cubic graphs with a separator of size <= 2.
std::vector<KempeMove> separator_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                      SolveTrace* trace = nullptr);

// 3-connected claw-free cubic graphs other than K4 and the prism, via an induced net.
std::vector<KempeMove> net_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                SolveTrace* trace = nullptr);

// Result of moving a colouring until it colours a different pair of a triple
// alike, or of connecting it directly to the reference colouring.
struct Repartner {
  bool connected = false;        // moves lead to the reference colouring itself
  Coloring end;
  std::vector<KempeMove> moves;  // from the input colouring to `end`
};

// Given c, returns either a Kempe-equivalent colouring that colours alike a
// different pair of the triple, or a witness from c to `reference`.
using RepartnerFn = std::function<Repartner(const Coloring& c, const Coloring& reference)>;

// Two Kempe-equivalent stand-ins for alpha and beta that match on a pair of `triple`.
struct MatchedPair {
  bool connected = false;  // alpha_moves alone already reach beta
  Coloring left, right;
  std::vector<KempeMove> alpha_moves;  // alpha -> left
  std::vector<KempeMove> beta_moves;   // beta -> right
};

// `triple` shares a common neighbour and every colouring colours two of it alike.
MatchedPair reduce_to_matching(const Graph& g, std::span<const Vertex, 3> triple,
                               const Coloring& alpha, const Coloring& beta,
                               const RepartnerFn& repartner, SolveTrace* trace = nullptr);

// 3-connected cubic graphs containing an induced claw.
std::vector<KempeMove> claw_path(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                 SolveTrace* trace = nullptr);

}  // namespace kempe
