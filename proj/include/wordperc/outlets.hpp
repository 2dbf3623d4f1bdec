#pragma once

// Elementary outlets, L-outlets and good boxes.
//
// An outlet centred at v in Z^3 is a 2x4 block of sites in the plane x = v.x:
// four 1-sites above the centre and four 0-sites below. Stored offsets from v:
//
//            y = -1    y = 0
//   z =  1   b_mp      b_pp     outer 1-sites (start of the upper connectors)
//   z =  0   b_mm      b_pm     centre 1-sites
//   z = -1   w_mp      w_pp     centre 0-sites
//   z = -2   w_mm      w_pm     outer 0-sites (start of the lower connectors)

#include <array>
#include <optional>

#include "wordperc/configuration.hpp"
#include "wordperc/lattice.hpp"

namespace wordperc {

struct OutletVertices {
  Site center;  // v in Z^3 (integer point, not a lattice site)
  Site b_pp, b_mp, b_pm, b_mm;
  Site w_pp, w_mp, w_pm, w_mm;

  static OutletVertices at(const Site& v);

  std::array<Site, 4> ones() const { return {b_pp, b_mp, b_pm, b_mm}; }
  std::array<Site, 4> zeros() const { return {w_pp, w_mp, w_pm, w_mm}; }
  std::array<Site, 8> all() const { return {b_pp, b_mp, b_pm, b_mm, w_pp, w_mp, w_pm, w_mm}; }

  friend bool operator==(const OutletVertices&, const OutletVertices&) = default;
};

bool is_elementary_outlet(const Configuration& config, const Site& v);

// Boxes from the outlet definitions, relative to an outlet at the origin.
namespace boxes {
Region gamma(Coord L);          // (-L,L) x (0,8L) x (0,2L)
Region upper_right(Coord L);    // (-L,L) x (0,8L) x (1,2L+1)
Region upper_left(Coord L);     // (-L,L) x (-8L,0) x (1,2L+1)
Region lower_left(Coord L);     // (-L,L) x (-8L,0) x (-2L-1,-1)
Region lower_right(Coord L);    // (-L,L) x (0,8L) x (-2L-1,-1)
Region block(Coord L);          // (-2L,2L) x (-8L,8L) x (-2L-1,2L+1)
Region glue_upper(Coord L);     // (-6L,6L) x (4L,8L) x (1,2L+1)
Region glue_lower(Coord L);     // (-6L,6L) x (4L,8L) x (-2L-1,-1)
}  // namespace boxes

// A 1-path inside the gamma box joins stored (0,0,0) to its maximal-y layer.
bool gamma_event(const Configuration& config, Coord L);

// Elementary outlet at v plus the four monochromatic escape paths.
bool is_l_outlet(const Configuration& config, const Site& v, Coord L);

// Witness of a good box: the smallest k in (-L, L) with (k,0,0) an L-outlet.
struct GoodBox {
  Coord k;
};

std::optional<GoodBox> is_good_box(const Configuration& config, const Site& v, Coord L);

}  // namespace wordperc
