#pragma once

// Hand-built configurations with known outlets, good boxes and connectors.

#include <algorithm>
#include <vector>

#include "wordperc/configuration.hpp"
#include "wordperc/outlets.hpp"
#include "wordperc/renorm.hpp"

namespace wordperc::testing {

// Makes the block centred at v good with witness k = 0: 1s on z >= 1, 0s on
// z <= 0 across the block and both glue slabs, and the two centre 1-sites of
// the outlet at v.
inline void plant_good_box(Overlay& overlay, Coord L, const Site& v) {
  const Region block = boxes::block(L).translated(v);
  const Region glue_up = boxes::glue_upper(L).translated(v);
  const Region glue_down = boxes::glue_lower(L).translated(v);
  for (const auto& r : {block, glue_up, glue_down}) {
    if (r.hi.z > v.z) fill(overlay, Region({r.lo.x, r.lo.y, std::max(r.lo.z, v.z + 1)}, r.hi), 1);
    if (r.lo.z <= v.z) fill(overlay, Region(r.lo, {r.hi.x, r.hi.y, std::min(r.hi.z, v.z)}), 0);
  }
  const auto o = OutletVertices::at(v);
  overlay[o.b_pm] = 1;
  overlay[o.b_mm] = 1;
}

// Straight 1-corridor at height z = 1 from b_pp of the outlet at v_L(t) to
// b_mp of the outlet at v_L(t+1), for a step i -> i+1: up 6L in y, across 4L
// in x, up to 12L - 1. It has 16L sites.
inline std::vector<Site> corridor(Coord L, const Site& from) {
  std::vector<Site> out;
  for (Coord y = 0; y <= 6 * L; ++y) out.push_back(from + Site{0, y, 1});
  for (Coord x = 1; x <= 4 * L; ++x) out.push_back(from + Site{x, 6 * L, 1});
  for (Coord y = 6 * L + 1; y <= 12 * L - 1; ++y) out.push_back(from + Site{4 * L, y, 1});
  return out;
}

struct CorridorChain {
  Configuration config;
  std::vector<RenormVertex> path;
  std::vector<Site> centers;
  std::vector<std::vector<Site>> corridors;
};

// Outlets at v_L(t, t) for t = 0..segments on an all-0 background, joined by
// corridors. The lower half stays all 0, so 0-connectors are shortest paths.
inline CorridorChain corridor_chain(Coord L, int segments) {
  Overlay overlay;
  CorridorChain c{Configuration(0, 0.0), {}, {}, {}};
  for (int t = 0; t <= segments; ++t) {
    c.path.push_back({t, t});
    c.centers.push_back(renorm_position(L, {t, t}));
    for (const auto& s : OutletVertices::at(c.centers.back()).ones()) overlay[s] = 1;
  }
  for (int t = 0; t < segments; ++t) {
    c.corridors.push_back(corridor(L, c.centers[static_cast<std::size_t>(t)]));
    for (const auto& s : c.corridors.back()) overlay[s] = 1;
  }
  c.config = Configuration(0, 0.0, std::move(overlay));
  return c;
}

}  // namespace wordperc::testing
