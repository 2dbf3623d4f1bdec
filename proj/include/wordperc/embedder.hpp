#pragma once

// Embedding binary words along an outlet chain, checking embeddings, and a
// brute-force oracle for small boxes.
//
// Convention: path[i] carries digit xi_{i+1}, so the first digit sits on the
// start site itself.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wordperc/configuration.hpp"
#include "wordperc/connectivity.hpp"
#include "wordperc/renorm.hpp"
#include "wordperc/splice.hpp"
#include "wordperc/word.hpp"

namespace wordperc {

struct EmbeddingResult {
  Path path;
  std::vector<std::uint8_t> word_prefix;
  Site start;
  std::vector<std::size_t> outlet_index_per_run;  // outlet where each run starts
  std::vector<SplicePlan> plans;                  // one per spliced (non-final) run
};

struct EmbedFailure {
  std::size_t run;
  std::string reason;
};

using EmbedResult = std::variant<EmbeddingResult, EmbedFailure>;

struct EmbedOptions {
  // Every run except the last must reach ell_eff^2.
  bool enforce_m0 = true;
  // When the last run is an infinite monochromatic tail, follow the chain to
  // its end instead of stopping at n digits.
  bool extend_tail = false;
};

// Runs alternate between the 1-connectors and the 0-connectors; each run but
// the last is spliced to its exact length and ends on a centre site, and the
// next run starts on the adjacent centre site of the other colour.
EmbedResult embed_word(const Configuration& config, const OutletChain& chain, const Word& word,
                       std::int64_t n, EmbedOptions options = {});

struct Verdict {
  bool ok = true;
  std::optional<std::size_t> index;  // first offending position
  std::string reason;
};

template <class Point, class StateFn, class AdjacentFn>
Verdict check_embedding(std::span<const Point> path, std::span<const std::uint8_t> word,
                        StateFn state, AdjacentFn is_adjacent) {
  if (path.size() != word.size()) {
    return {false, std::nullopt, "path and word prefix differ in length"};
  }
  std::set<Point> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0 && !is_adjacent(path[i - 1], path[i])) return {false, i, "not adjacent"};
    if (!seen.insert(path[i]).second) return {false, i, "repeated vertex"};
    if (state(path[i]) != word[i]) return {false, i, "colour mismatch"};
  }
  return {};
}

Verdict verify_embedding(const Configuration& config, const EmbeddingResult& result);

enum class OracleStatus { found, none, budget_exhausted };

struct OracleResult {
  OracleStatus status = OracleStatus::none;
  Path path;
  std::uint64_t nodes = 0;
};

// Exhaustive depth-first search over self-avoiding paths inside `region`
// spelling the first n digits, from the starts in lexicographic order.
// `budget` caps the number of sites placed on the search path.
OracleResult oracle_embed(const Configuration& config, const Region& region, const Word& word,
                          std::int64_t n, std::span<const Site> starts, std::uint64_t budget,
                          const SiteSet* forbidden = nullptr);

// Embedding "starting from v": the first digit sits on a neighbour of v and the
// path never returns to v.
OracleResult oracle_embed_from(const Configuration& config, const Region& region, const Word& word,
                               std::int64_t n, const Site& v, std::uint64_t budget);

const char* to_string(OracleStatus s);

}  // namespace wordperc
