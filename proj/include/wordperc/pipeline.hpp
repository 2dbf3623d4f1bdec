#pragma once

// Oriented path search followed by chain extraction, with retries: when a
// segment cannot be connected, the far vertex of that segment is excluded and
// the search runs again.

#include <optional>
#include <string>
#include <vector>

#include "wordperc/renorm.hpp"

namespace wordperc {

struct ChainRequest {
  Coord L = 3;
  Coord steps = 12;
  Coord window = 8;  // |i| bound of the oriented search
  int retries = 4;
};

struct ChainAttempt {
  std::optional<OutletChain> chain;
  std::vector<RenormVertex> path;
  std::string stage;   // "oriented_path" or "chain_extraction" on failure
  std::string reason;
  int attempts = 0;
};

ChainAttempt build_chain(const Configuration& config, const ChainRequest& request);

}  // namespace wordperc
