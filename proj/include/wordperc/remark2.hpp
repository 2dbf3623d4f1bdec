#pragma once

// Two-layer construction on Z^{d-1} x {0,1}: a column v is good when
// (v,0) is a 0-site and (v,1) is a 1-site. Along a self-avoiding path of good
// columns any word whose runs all have length >= 2 can be spelled by moving
// horizontally within a level and switching level inside a column.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wordperc/embedder.hpp"
#include "wordperc/lattice.hpp"
#include "wordperc/word.hpp"

namespace wordperc {

// Point of Z^{d-1} (a column) or of Z^{d-1} x {0,1} (last coordinate = level).
using GridPoint = std::vector<Coord>;
using GridState = std::function<int(const GridPoint&)>;

// Bernoulli(p) states from the shared site hash on d coordinates.
GridState hashed_grid(std::uint64_t seed, double p);

bool is_good_column(const GridState& state, const GridPoint& column);

// Shortest path of good columns in [0, side)^dims from the face x_1 = 0 to
// the face x_1 = side - 1, breadth-first with a fixed neighbour order.
std::optional<std::vector<GridPoint>> good_crossing(const GridState& state, int dims, Coord side);

struct LiftedPath {
  std::vector<GridPoint> path;  // points of Z^{d-1} x {0,1}
  std::vector<std::uint8_t> word_prefix;
};

// Lifts the first n digits along a good crossing. Throws std::invalid_argument
// unless the word is 2-stretched; nullopt when no crossing exists or the
// crossing is too short for the prefix.
std::optional<LiftedPath> remark2_embed(const GridState& state, int dims, Coord side,
                                        const Word& word, std::int64_t n);

Verdict verify_lifted(const GridState& state, const LiftedPath& lifted);

bool grid_adjacent(const GridPoint& a, const GridPoint& b);

}  // namespace wordperc
