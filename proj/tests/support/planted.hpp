#pragma once

// Configurations with outlets planted on every block of a renormalised window,
// dense 1s above the outlet plane and dense 0s below it. Used where the
// homogeneous field almost never produces a long chain at desk scale.

#include "wordperc/configuration.hpp"
#include "wordperc/outlets.hpp"
#include "wordperc/renorm.hpp"

namespace wordperc::testing {

struct PlantedField {
  double upper = 0.8;  // z >= 1
  double lower = 0.2;  // z <= -2
  double middle = 0.5;
};

inline Configuration planted(std::uint64_t seed, Coord L, Coord steps, Coord window,
                             PlantedField f = {}) {
  Overlay overlay;
  for (Coord j = 0; j <= steps; ++j) {
    for (Coord i = -window; i <= window; ++i) {
      if ((i + j) % 2 != 0) continue;
      const auto o = OutletVertices::at(renorm_position(L, {i, j}));
      for (const auto& s : o.ones()) overlay[s] = 1;
      for (const auto& s : o.zeros()) overlay[s] = 0;
    }
  }
  auto field = [f](const Site& s) { return s.z >= 1 ? f.upper : s.z <= -2 ? f.lower : f.middle; };
  return Configuration(seed, field, std::move(overlay));
}

}  // namespace wordperc::testing
