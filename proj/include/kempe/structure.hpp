#pragma once

#include <optional>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

// A vertex set whose removal increases the number of components, together with
// two nonempty sides covering V \ S with no edge between them.
struct Separator {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Vertex> side_a;    // the component of G - S holding the least vertex
  std::vector<Vertex> side_b;    // every other vertex of G - S
  bool is_clique = false;
};

// Minimum separator of size <= max_size, preferring a clique among the
// minimum ones, lexicographically least otherwise. Sizes above n - 2 are not
// tried. Throws std::invalid_argument on disconnected input.
std::optional<Separator> find_min_separator(const Graph& g, int max_size);

// 3-connected in the sense: n >= 4 and no separator of size <= 2.
bool is_three_connected(const Graph& g);

struct DegeneracyOrdering {
  int d = 0;
  // Elimination order: order[i] has at most d neighbours in order[i+1..].
  std::vector<Vertex> order;
};

// Repeatedly removes a minimum-degree vertex (least id on ties).
DegeneracyOrdering degeneracy(const Graph& g);

struct ClawEmbedding {
  Vertex center, s, u, v;  // s < u < v
  friend bool operator==(const ClawEmbedding&, const ClawEmbedding&) = default;
};

struct NetEmbedding {
  Vertex x, y, z;     // triangle
  Vertex xp, yp, zp;  // pendant on x, y, z respectively
  friend bool operator==(const NetEmbedding&, const NetEmbedding&) = default;
};

enum class Motif { house, diamond };

// Vertices listed in the role order of the named graphs in kempe::named:
//   diamond: spine a, b (adjacent, a < b), tips c < d (non-adjacent)
//   house:   roof x, base y < z, then w ~ y and s ~ z with w ~ s
struct MotifEmbedding {
  Motif motif;
  std::vector<Vertex> vertices;
  friend bool operator==(const MotifEmbedding&, const MotifEmbedding&) = default;
};

std::optional<ClawEmbedding> find_claw(const Graph& g);
std::optional<NetEmbedding> find_net(const Graph& g);
std::optional<MotifEmbedding> find_induced_motif(const Graph& g, Motif motif);

// Exhaustive isomorphism test; intended for small graphs (n <= 10).
bool isomorphic(const Graph& a, const Graph& b);
bool is_k4(const Graph& g);
bool is_prism(const Graph& g);

}  // namespace kempe
