#include "wordperc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "wordperc/configuration.hpp"
#include "wordperc/connectivity.hpp"
#include "wordperc/embedder.hpp"
#include "wordperc/outlets.hpp"
#include "wordperc/pipeline.hpp"
#include "wordperc/remark2.hpp"
#include "wordperc/renorm.hpp"

namespace wordperc {

namespace {

struct KindName {
  EventKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {EventKind::crossing, "crossing"},
    {EventKind::uniqueness, "uniqueness"},
    {EventKind::gamma, "gamma"},
    {EventKind::elementary_outlet, "elementary_outlet"},
    {EventKind::l_outlet, "l_outlet"},
    {EventKind::good_box, "good_box"},
    {EventKind::occupied, "occupied"},
    {EventKind::chain_extraction, "chain_extraction"},
    {EventKind::embed_success, "embed_success"},
    {EventKind::remark2_crossing, "remark2_crossing"},
    {EventKind::w_inequality, "w_inequality"},
};

}  // namespace

const char* to_string(EventKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "?";
}

EventKind parse_event_kind(std::string_view name) {
  std::string normal(name);
  std::replace(normal.begin(), normal.end(), '-', '_');
  for (const auto& k : kKindNames) {
    if (normal == k.name) return k.kind;
  }
  throw InvalidSpec("unknown event '" + std::string(name) + "'");
}

void validate(const EventSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InvalidSpec("p must lie in [0,1]");
  const char* name = to_string(spec.kind);
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw InvalidSpec(std::string(name) + ": " + what);
  };
  switch (spec.kind) {
    case EventKind::crossing:
    case EventKind::uniqueness:
      need(spec.region.has_value() || spec.scale >= 1, "needs N >= 1 or a region");
      need(spec.t >= 0, "t must be nonnegative");
      need(spec.color == 0 || spec.color == 1, "colour must be 0 or 1");
      if (spec.kind == EventKind::uniqueness) {
        need(spec.t >= 1 || spec.scale >= 1, "needs t >= 1 (or N to default it)");
      }
      break;
    case EventKind::elementary_outlet:
      break;
    case EventKind::gamma:
    case EventKind::l_outlet:
    case EventKind::good_box:
      need(spec.scale >= 1, "needs L >= 1");
      break;
    case EventKind::occupied:
      need(spec.scale >= 1, "needs L >= 1");
      need((spec.i + spec.j) % 2 == 0, "i + j must be even");
      break;
    case EventKind::chain_extraction:
    case EventKind::embed_success:
      need(spec.scale >= 1, "needs L >= 1");
      need(spec.steps >= 1, "needs steps >= 1");
      need(spec.window >= 0, "needs window >= 0");
      if (spec.kind == EventKind::embed_success) {
        need(spec.word.has_value(), "needs a word");
        need(spec.n >= 1, "needs n >= 1");
        spec.word->validate();
      }
      break;
    case EventKind::remark2_crossing:
      need(spec.scale >= 1, "needs a box side >= 1");
      need(spec.dims >= 1, "needs dims >= 1");
      break;
    case EventKind::w_inequality:
      need(spec.scale >= 1, "needs a search radius >= 1");
      need(spec.word.has_value(), "needs a word");
      need(spec.n >= 1, "needs n >= 1");
      need(spec.budget >= 1, "needs a positive budget");
      spec.word->validate();
      break;
  }
}

Region event_region(const EventSpec& spec) {
  if (spec.region) return *spec.region;
  const Coord n = spec.scale;
  return Region({0, 0, 0}, {n, n - 1, n - 1});
}

bool evaluate(const EventSpec& spec, std::uint64_t seed) {
  const Configuration config(seed, spec.p);
  const Site origin{0, 0, 0};
  switch (spec.kind) {
    case EventKind::crossing:
      return crossing(config, event_region(spec), 1);
    case EventKind::uniqueness:
      return uniqueness(config, event_region(spec), spec.t ? spec.t : spec.scale, spec.color);
    case EventKind::gamma:
      return gamma_event(config, spec.scale);
    case EventKind::elementary_outlet:
      return is_elementary_outlet(config, origin);
    case EventKind::l_outlet:
      return is_l_outlet(config, origin, spec.scale);
    case EventKind::good_box:
      return is_good_box(config, origin, spec.scale).has_value();
    case EventKind::occupied:
      return is_occupied(config, spec.scale, {spec.i, spec.j}).has_value();
    case EventKind::chain_extraction:
    case EventKind::embed_success: {
      const auto attempt = build_chain(config, {spec.scale, spec.steps, spec.window, 4});
      if (!attempt.chain) return false;
      if (spec.kind == EventKind::chain_extraction) return true;
      EmbedOptions options;
      options.enforce_m0 = spec.enforce_m0;
      const auto result = embed_word(config, *attempt.chain, *spec.word, spec.n, options);
      return std::holds_alternative<EmbeddingResult>(result);
    }
    case EventKind::remark2_crossing:
      return good_crossing(hashed_grid(seed, spec.p), spec.dims, spec.scale).has_value();
    case EventKind::w_inequality: {
      const Coord r = spec.scale;
      const Region box({-r, -r, -r}, {r, r, r});
      const auto result = oracle_embed_from(config, box, *spec.word, spec.n, origin, spec.budget);
      return result.status == OracleStatus::found;
    }
  }
  return false;
}

Interval wilson(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
  return {std::clamp(std::min(center - half, phat), 0.0, 1.0),
          std::clamp(std::max(center + half, phat), 0.0, 1.0)};
}

EstimateReport estimate(const EventSpec& spec, std::uint64_t trials, std::uint64_t base_seed,
                        const EstimateOptions& options) {
  validate(spec);
  if (trials < 1) throw InvalidSpec("estimate needs at least one trial");
  const auto start = std::chrono::steady_clock::now();

  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(trials)));
  std::atomic<std::uint64_t> next{0};
  std::vector<std::uint64_t> counts(threads, 0);
  auto worker = [&](unsigned w) {
    constexpr std::uint64_t kChunk = 64;
    for (;;) {
      const auto begin = next.fetch_add(kChunk);
      if (begin >= trials) break;
      const auto end = std::min(trials, begin + kChunk);
      for (auto t = begin; t < end; ++t) {
        if (evaluate(spec, hashing::derive_seed(base_seed, t))) ++counts[w];
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }

  EstimateReport report;
  report.spec = spec;
  report.trials = trials;
  for (auto c : counts) report.successes += c;
  report.p_hat = static_cast<double>(report.successes) / static_cast<double>(trials);
  const auto ci = wilson(report.successes, trials);
  report.ci_low = ci.low;
  report.ci_high = ci.high;
  report.seed = base_seed;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (report.successes < options.min_successes) report.flags.push_back("insufficient_successes");
  return report;
}

std::vector<EstimateReport> sweep(const EventSpec& tmpl, const SweepGrid& grid,
                                  std::uint64_t trials, std::uint64_t base_seed,
                                  const EstimateOptions& options) {
  const std::vector<double> ps = grid.ps.empty() ? std::vector<double>{tmpl.p} : grid.ps;
  const std::vector<Coord> scales =
      grid.scales.empty() ? std::vector<Coord>{tmpl.scale} : grid.scales;
  std::vector<EstimateReport> out;
  for (std::size_t si = 0; si < scales.size(); ++si) {
    const auto seed = hashing::derive_seed(base_seed, si, hashing::kSweepDomain);
    for (double p : ps) {
      EventSpec spec = tmpl;
      spec.p = p;
      spec.scale = scales[si];
      out.push_back(estimate(spec, trials, seed, options));
    }
  }
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k].ci_high < out[k - 1].ci_low) out[k].flags.push_back("trend_violation");
  }
  return out;
}

}  // namespace wordperc
