#include "wordperc/pipeline.hpp"

namespace wordperc {

ChainAttempt build_chain(const Configuration& config, const ChainRequest& request) {
  OccupancyField field(config, request.L);
  std::vector<Coord> starts;
  for (Coord i = -request.window; i <= request.window; ++i) {
    if (i % 2 == 0) starts.push_back(i);
  }

  ChainAttempt attempt;
  for (int round = 0; round <= request.retries; ++round) {
    ++attempt.attempts;
    auto path = find_oriented_path([&](const RenormVertex& v) { return field(v); }, starts,
                                   request.steps, request.window);
    if (!path) {
      attempt.stage = "oriented_path";
      attempt.reason = "no oriented path of occupied blocks within the window";
      return attempt;
    }
    std::vector<Site> centers;
    for (const auto& v : *path) {
      centers.push_back(renorm_position(request.L, v) + Site{field.witness(v)->k, 0, 0});
    }
    auto result = connect_outlets(config, request.L, *path, centers);
    attempt.path = *path;
    if (auto* chain = std::get_if<OutletChain>(&result)) {
      attempt.chain = std::move(*chain);
      attempt.stage.clear();
      attempt.reason.clear();
      return attempt;
    }
    const auto& failure = std::get<ChainFailure>(result);
    attempt.stage = "chain_extraction";
    attempt.reason = failure.reason;
    field.exclude((*path)[failure.segment + 1]);
  }
  return attempt;
}

}  // namespace wordperc
