#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

using Color = int;

// Assignment vertex -> colour in 1..k. Properness is a property relative to a
// graph and is checked by is_proper(); the constructor only checks the range.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int k, std::vector<Color> colors);

  int k() const noexcept { return k_; }
  int order() const noexcept { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const noexcept { return colors_; }

  // Unchecked write access for algorithms that maintain properness themselves.
  std::vector<Color>& mutable_colors() noexcept { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring& a, const Coloring& b) {
    return a.colors_ <=> b.colors_;
  }

 private:
  int k_ = 0;
  std::vector<Color> colors_;
};

std::string to_string(const Coloring& c);

bool is_proper(const Graph& g, const Coloring& c);

// Exchange of the (a, b)-chain containing `anchor`; a < b after normalisation.
struct KempeMove {
  Vertex anchor = 0;
  Color a = 1;
  Color b = 2;

  KempeMove() = default;
  KempeMove(Vertex anchor, Color c1, Color c2);
  friend bool operator==(const KempeMove&, const KempeMove&) = default;
};

struct KempeSequence {
  Coloring start;
  std::vector<KempeMove> moves;
  friend bool operator==(const KempeSequence&, const KempeSequence&) = default;
};

class InvalidMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vertices of the (a, b)-component containing x, sorted ascending.
// Throws InvalidMove when c(x) is not a or b.
std::vector<Vertex> kempe_chain(const Graph& g, const Coloring& c, Vertex x, Color a, Color b);

Coloring kempe_change(const Graph& g, const Coloring& c, const KempeMove& m);

// In-place variant over a bare colour array; returns the exchanged chain.
// Vertices with active[v] == false are treated as absent from the graph.
std::vector<Vertex> apply_move(const Graph& g, std::vector<Color>& colors, const KempeMove& m,
                               const std::vector<bool>* active = nullptr);
std::vector<Vertex> chain_of(const Graph& g, const std::vector<Color>& colors, Vertex x, Color a,
                             Color b, const std::vector<bool>* active = nullptr);

class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCeiling = 2'000'000;

// All proper k-colourings in lexicographic order (vertex 0 most significant).
std::vector<Coloring> enumerate_colorings(const Graph& g, int k,
                                          std::size_t ceiling = kDefaultCeiling);

struct Match {
  Vertex x, y, common;
  friend bool operator==(const Match&, const Match&) = default;
};

// First (by common neighbour, then pair) x, y sharing a neighbour with
// alpha(x) == alpha(y) and beta(x) == beta(y).
std::optional<Match> colorings_match(const Graph& g, const Coloring& alpha, const Coloring& beta);

Coloring replay(const Graph& g, const KempeSequence& s);

struct Validation {
  bool ok = true;
  // Index of the offending move; moves.size() when the start colouring is bad.
  std::optional<std::size_t> failed_at;
  std::string reason;
  Coloring end;
};

// Replays s checking the start colouring, every move's anchor colour and the
// properness of every intermediate colouring.
Validation validate(const Graph& g, const KempeSequence& s);

// Moves taking the end of `moves` back to its start (each exchange is an involution).
std::vector<KempeMove> reversed(std::vector<KempeMove> moves);

// Least colouring among the k! colour relabelings of c.
Coloring canonical_class(const Coloring& c);

}  // namespace kempe
