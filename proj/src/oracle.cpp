#include "wordperc/embedder.hpp"

#include <algorithm>

namespace wordperc {

namespace {

class Search {
 public:
  Search(const Configuration& config, const Region& region, std::vector<std::uint8_t> digits,
         std::uint64_t budget, const SiteSet* forbidden)
      : config_(config),
        region_(region),
        digits_(std::move(digits)),
        budget_(budget),
        forbidden_(forbidden),
        state_(region.size(), 0xFF),
        on_path_(region.size(), 0) {}

  OracleResult run(std::span<const Site> starts) {
    std::vector<Site> ordered(starts.begin(), starts.end());
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
    OracleResult out;
    for (const auto& s : ordered) {
      if (extend(s, 0)) {
        out.status = OracleStatus::found;
        out.path = path_;
        break;
      }
      if (exhausted_) {
        out.status = OracleStatus::budget_exhausted;
        break;
      }
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  int state(const Site& s, std::size_t idx) {
    if (state_[idx] == 0xFF) state_[idx] = static_cast<std::uint8_t>(config_.state(s));
    return state_[idx];
  }

  bool extend(const Site& s, std::size_t depth) {
    if (!region_.contains(s)) return false;
    const auto idx = region_.index(s);
    if (on_path_[idx] || state(s, idx) != digits_[depth]) return false;
    if (forbidden_ && forbidden_->contains(s)) return false;
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    on_path_[idx] = 1;
    path_.push_back(s);
    if (depth + 1 == digits_.size()) return true;
    for (const auto& d : kNeighbourOffsets) {
      if (extend(s + d, depth + 1)) return true;
      if (exhausted_) break;
    }
    path_.pop_back();
    on_path_[idx] = 0;
    return false;
  }

  const Configuration& config_;
  const Region& region_;
  std::vector<std::uint8_t> digits_;
  std::uint64_t budget_;
  const SiteSet* forbidden_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint8_t> on_path_;
  Path path_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

OracleResult oracle_embed(const Configuration& config, const Region& region, const Word& word,
                          std::int64_t n, std::span<const Site> starts, std::uint64_t budget,
                          const SiteSet* forbidden) {
  if (n < 1) throw std::invalid_argument("oracle prefix length must be positive");
  Search search(config, region, materialize(word, n), budget, forbidden);
  return search.run(starts);
}

OracleResult oracle_embed_from(const Configuration& config, const Region& region, const Word& word,
                               std::int64_t n, const Site& v, std::uint64_t budget) {
  std::vector<Site> starts;
  for (const auto& d : kNeighbourOffsets) starts.push_back(v + d);
  const SiteSet forbidden{v};
  return oracle_embed(config, region, word, n, starts, budget, &forbidden);
}

const char* to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::found: return "found";
    case OracleStatus::none: return "none";
    case OracleStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

}  // namespace wordperc
