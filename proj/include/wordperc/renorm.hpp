#pragma once

// Renormalised lattice of good boxes, oriented occupied paths, and extraction
// of an outlet chain (successive outlets joined by disjoint 1- and 0-paths).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wordperc/configuration.hpp"
#include "wordperc/connectivity.hpp"
#include "wordperc/outlets.hpp"

namespace wordperc {

struct RenormVertex {
  Coord i = 0;
  Coord j = 0;

  friend auto operator<=>(const RenormVertex&, const RenormVertex&) = default;
};

// v_L(i,j) = (4iL, 12jL, 0). Throws std::domain_error when i + j is odd.
Site renorm_position(Coord L, const RenormVertex& v);

// Coarse edge: |di| = 1 and |dj| = 1. Oriented steps also need dj = +1.
bool renorm_adjacent(const RenormVertex& a, const RenormVertex& b);

// The block at v_L(i,j) is good. Throws std::domain_error when i + j is odd.
std::optional<GoodBox> is_occupied(const Configuration& config, Coord L, const RenormVertex& v);

using Occupancy = std::function<bool(const RenormVertex&)>;

// Memoised occupancy of a fixed configuration; also remembers the witnesses.
class OccupancyField {
 public:
  OccupancyField(Configuration config, Coord L) : config_(std::move(config)), L_(L) {}

  std::optional<GoodBox> witness(const RenormVertex& v);
  bool operator()(const RenormVertex& v) { return witness(v).has_value(); }
  // Marks v unoccupied for subsequent searches (used when a chain fails there).
  void exclude(const RenormVertex& v) { cache_[v] = std::nullopt; }

  const Configuration& config() const { return config_; }
  Coord L() const { return L_; }

 private:
  Configuration config_;
  Coord L_;
  std::map<RenormVertex, std::optional<GoodBox>> cache_;
};

// Oriented path (i_0,0), (i_1,1), ..., (i_K,K) of occupied vertices with
// |i_{k+1} - i_k| = 1 and |i| <= window. Layers are explored breadth-first;
// ties prefer smaller |i|, then positive i.
std::optional<std::vector<RenormVertex>> find_oriented_path(const Occupancy& occupied,
                                                            std::span<const Coord> start_set,
                                                            Coord steps, Coord window);

struct OutletChain {
  Coord L = 0;
  std::vector<OutletVertices> outlets;
  std::vector<Path> b_paths;  // b_paths[i]: b^i_pp -> b^{i+1}_mp, all 1-sites
  std::vector<Path> w_paths;  // w_paths[i]: w^i_pm -> w^{i+1}_mm, all 0-sites
  std::vector<std::int64_t> lambda_b;
  std::vector<std::int64_t> lambda_w;
  std::int64_t ell_eff = 0;
};

struct ChainFailure {
  std::size_t segment;  // first failing segment (or path vertex when unoccupied)
  std::string reason;
};

using ChainResult = std::variant<OutletChain, ChainFailure>;

// Outlets at v_L(path[t]) + (k_t,0,0) where k_t is the good-box witness.
ChainResult extract_outlet_chain(const Configuration& config, Coord L,
                                 std::span<const RenormVertex> path);

// Connects the given outlet centres greedily, segment by segment. Connector t
// lives in the union of the two blocks and the lower block's glue slab, on the
// upper (z >= 1) or lower (z <= -2) side, avoiding every earlier connector and
// every other outlet site.
ChainResult connect_outlets(const Configuration& config, Coord L,
                            std::span<const RenormVertex> path, std::span<const Site> centers);

// Independent structural check of a chain; returns the first violation.
std::optional<std::string> validate_chain(const Configuration& config, const OutletChain& chain);

// Worst-case connector length (12L-1) * 12L * (2L+1).
std::int64_t ell_bound(Coord L);

}  // namespace wordperc
