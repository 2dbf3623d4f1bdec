#pragma once

// Monte Carlo estimation of every event the library defines.
//
// Trial t of an estimate evaluates its event on Configuration(derive(base, t), p);
// only success counts are aggregated, so reports do not depend on the thread
// schedule.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordperc/lattice.hpp"
#include "wordperc/word.hpp"

namespace wordperc {

enum class EventKind {
  crossing,
  uniqueness,
  gamma,
  elementary_outlet,
  l_outlet,
  good_box,
  occupied,
  chain_extraction,
  embed_success,
  remark2_crossing,
  w_inequality,
};

const char* to_string(EventKind kind);
// Accepts underscores or hyphens ("elementary-outlet").
EventKind parse_event_kind(std::string_view name);

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// `scale` is N (box side) for crossing/uniqueness, L for the outlet and block
// events, the box side for remark2_crossing and the search radius for
// w_inequality.
struct EventSpec {
  EventKind kind = EventKind::crossing;
  double p = 0.5;
  Coord scale = 0;
  Coord t = 0;      // uniqueness diameter; 0 means t = scale
  int color = 1;    // uniqueness colour
  std::optional<Region> region;  // crossing/uniqueness box override
  std::optional<Word> word;      // embed_success, w_inequality
  std::int64_t n = 0;            // word prefix length
  Coord steps = 12;              // oriented path length
  Coord window = 8;              // oriented search |i| bound
  Coord i = 0;                   // occupied vertex
  Coord j = 0;
  int dims = 4;                  // remark2_crossing: dimension of the column lattice
  std::uint64_t budget = 1'000'000;
  bool enforce_m0 = true;        // embed_success

  friend bool operator==(const EventSpec&, const EventSpec&) = default;
};

// Throws InvalidSpec when parameters are missing or out of range.
void validate(const EventSpec& spec);

// Region a crossing or uniqueness spec is evaluated on unless overridden: the
// sites of the closed real cube [0,N]^3, i.e. x in 0..N and y, z in 0..N-1.
Region event_region(const EventSpec& spec);

bool evaluate(const EventSpec& spec, std::uint64_t seed);

struct Interval {
  double low;
  double high;
};

// Wilson score interval at the given z (95% by default).
Interval wilson(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct EstimateReport {
  EventSpec spec;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;
  std::vector<std::string> flags;  // e.g. "insufficient_successes", "trend_violation"

  double half_width() const { return (ci_high - ci_low) / 2; }
};

struct EstimateOptions {
  unsigned threads = 1;
  std::uint64_t min_successes = 0;  // below this the report is flagged
};

EstimateReport estimate(const EventSpec& spec, std::uint64_t trials, std::uint64_t base_seed,
                        const EstimateOptions& options = {});

struct SweepGrid {
  std::vector<double> ps;      // empty: keep the template's p
  std::vector<Coord> scales;   // empty: keep the template's scale
};

// One report per (scale, p) point, scales outer. Points with the same scale
// share trial seeds, so sweeps over p stay monotone-coupled; different scales
// get independent seeds. A point whose interval lies entirely below the
// previous point's interval is flagged "trend_violation".
std::vector<EstimateReport> sweep(const EventSpec& tmpl, const SweepGrid& grid,
                                  std::uint64_t trials, std::uint64_t base_seed,
                                  const EstimateOptions& options = {});

}  // namespace wordperc
