#include <random>
#include <set>

#include "doctest.h"
#include "support/witness.hpp"
#include "wordperc/montecarlo.hpp"
#include "wordperc/outlets.hpp"

using namespace wordperc;

namespace {

Overlay outlet_overlay(const Site& v) {
  Overlay o;
  const auto ov = OutletVertices::at(v);
  for (const auto& s : ov.ones()) o[s] = 1;
  for (const auto& s : ov.zeros()) o[s] = 0;
  return o;
}

// Outlet at the origin with straight 1-corridors out of b_pp (+y) and b_mp
// (-y) on an all-0 background; the 0-paths are then automatic.
Configuration corridor_outlet(Coord L) {
  Overlay o = outlet_overlay({0, 0, 0});
  for (Coord y = 0; y <= 8 * L - 1; ++y) o[{0, y, 1}] = 1;
  for (Coord y = -8 * L; y <= -1; ++y) o[{0, y, 1}] = 1;
  return Configuration(0, 0.0, o);
}

}  // namespace

TEST_CASE("outlet vertices in stored coordinates") {
  const auto o = OutletVertices::at({4, -2, 7});
  CHECK(o.b_pm == Site{4, -2, 7});
  CHECK(o.b_mm == Site{4, -3, 7});
  CHECK(o.b_pp == Site{4, -2, 8});
  CHECK(o.b_mp == Site{4, -3, 8});
  CHECK(o.w_pp == Site{4, -2, 6});
  CHECK(o.w_mp == Site{4, -3, 6});
  CHECK(o.w_pm == Site{4, -2, 5});
  CHECK(o.w_mm == Site{4, -3, 5});
  const auto sites = o.all();
  const std::set<Site> distinct(sites.begin(), sites.end());
  CHECK(distinct.size() == 8);
}

TEST_CASE("elementary outlet from an explicit pattern") {
  const Site v{3, 1, -2};
  const auto base = outlet_overlay(v);
  CHECK(is_elementary_outlet(Configuration(5, 0.5, base), v));
  for (const auto& s : OutletVertices::at(v).all()) {
    auto flipped = base;
    flipped[s] ^= 1;
    CHECK_FALSE(is_elementary_outlet(Configuration(5, 0.5, flipped), v));
  }
  CHECK_FALSE(is_elementary_outlet(Configuration::constant(1), v));
  CHECK_FALSE(is_elementary_outlet(Configuration::constant(0), v));
}

TEST_CASE("gamma event") {
  CHECK(gamma_event(Configuration::constant(1), 2));
  Overlay hole{{{0, 0, 0}, 0}};
  CHECK_FALSE(gamma_event(Configuration(0, 1.0, hole), 2));
  Overlay line;
  for (Coord y = 0; y <= 15; ++y) line[{0, y, 0}] = 1;
  CHECK(gamma_event(Configuration(0, 0.0, line), 2));
  line.erase({0, 15, 0});
  CHECK_FALSE(gamma_event(Configuration(0, 0.0, line), 2));
}

TEST_CASE("L-outlet from explicit corridors") {
  for (Coord L = 1; L <= 3; ++L) {
    CAPTURE(L);
    CHECK(is_l_outlet(corridor_outlet(L), {0, 0, 0}, L));
    // Only the elementary pattern: no 1-path can leave it.
    CHECK_FALSE(is_l_outlet(Configuration(0, 0.0, outlet_overlay({0, 0, 0})), {0, 0, 0}, L));
  }
  // Cutting either 1-corridor kills it; the 0-side needs a 0-path too.
  Overlay cut = outlet_overlay({0, 0, 0});
  for (Coord y = 0; y <= 15; ++y) cut[{0, y, 1}] = 1;
  CHECK_FALSE(is_l_outlet(Configuration(0, 0.0, cut), {0, 0, 0}, 2));
  Overlay ones_below = outlet_overlay({0, 0, 0});
  for (Coord y = -16; y <= 15; ++y) ones_below[{0, y, 1}] = 1;
  CHECK(is_l_outlet(Configuration(0, 0.0, ones_below), {0, 0, 0}, 2));
  for (Coord x = -1; x <= 1; ++x)
    for (Coord z = -5; z <= -2; ++z) ones_below[{x, 3, z}] = 1;
  CHECK_FALSE(is_l_outlet(Configuration(0, 0.0, ones_below), {0, 0, 0}, 2));
}

TEST_CASE("translation covariance of L-outlets") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<Coord> d(-50, 50);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Site v{d(rng), d(rng), d(rng)};
    const Coord L = 1 + trial % 3;
    Overlay o = outlet_overlay(v);
    const bool plant = trial % 2 == 0;
    auto field = [v, plant](const Site& s) {
      if (!plant) return 0.5;
      return s.z > v.z ? 0.85 : 0.15;
    };
    const Configuration c(rng(), field, o);
    const bool here = is_l_outlet(c, v, L);
    positives += here;
    CHECK(here == is_l_outlet(c.shift(v), {0, 0, 0}, L));
  }
  CHECK(positives > 10);
}

TEST_CASE("reflection with complement maps outlets to outlets") {
  // Reflection z -> -1 - z on stored coordinates is z -> -z on the real lattice.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Configuration c(seed, 0.5);
    const Region box({0, 0, -6}, {20, 20, 6});
    Overlay mirrored;
    for (std::size_t k = 0; k < box.size(); ++k) {
      const Site s = box.site(k);
      mirrored[{s.x, s.y, -1 - s.z}] = static_cast<std::uint8_t>(1 - c.state(s));
    }
    const Configuration m(0, 0.5, mirrored);
    int outlets = 0;
    for (Coord x = 0; x <= 20; ++x)
      for (Coord y = 1; y <= 20; ++y)
        for (Coord z = -4; z <= 4; ++z) {
          const bool a = is_elementary_outlet(c, {x, y, z});
          outlets += a;
          CHECK(a == is_elementary_outlet(m, {x, y, -z}));
        }
    CHECK(outlets > 0);
  }
}

TEST_CASE("good box from a witness overlay") {
  for (Coord L = 1; L <= 3; ++L) {
    CAPTURE(L);
    Overlay o;
    testing::plant_good_box(o, L, {0, 0, 0});
    const Configuration c(99, 0.5, o);
    const auto w = is_good_box(c, {0, 0, 0}, L);
    REQUIRE(w);
    CHECK(w->k == 0);
    CHECK(is_l_outlet(c, {0, 0, 0}, L));

    // Without the centre 1-sites no outlet is left on the axis.
    o[{0, 0, 0}] = 0;
    CHECK_FALSE(is_good_box(Configuration(99, 0.5, o), {0, 0, 0}, L));
  }
}

TEST_CASE("good box picks the smallest witness") {
  const Coord L = 3;
  Overlay o;
  testing::plant_good_box(o, L, {0, 0, 0});
  for (Coord k : {-1, 2}) {
    const auto ov = OutletVertices::at({k, 0, 0});
    o[ov.b_pm] = 1;
    o[ov.b_mm] = 1;
  }
  const auto w = is_good_box(Configuration(1, 0.5, o), {0, 0, 0}, L);
  REQUIRE(w);
  CHECK(w->k == -1);
}

TEST_CASE("good box needs both uniqueness events") {
  const Coord L = 2;
  for (int color : {1, 0}) {
    CAPTURE(color);
    Overlay o;
    testing::plant_good_box(o, L, {0, 0, 0});
    const Region glue = color ? boxes::glue_upper(L) : boxes::glue_lower(L);
    // Clear the slab right of the block and draw a separate long line there.
    fill(o, Region({2 * L, glue.lo.y, glue.lo.z}, glue.hi), 1 - color);
    for (Coord x = 2 * L + 1; x <= glue.hi.x; ++x) {
      o[{x, glue.lo.y, glue.lo.z}] = static_cast<std::uint8_t>(color);
    }
    const Configuration c(1, 0.5, o);
    CHECK(is_l_outlet(c, {0, 0, 0}, L));
    CHECK_FALSE(uniqueness(c, glue, L, color));
    CHECK_FALSE(is_good_box(c, {0, 0, 0}, L));
  }
}

TEST_CASE("event inclusion on identical seeds") {
  int l_outlets = 0, good = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    auto field = [](const Site& s) { return s.z >= 1 ? 0.8 : s.z <= -2 ? 0.2 : 0.5; };
    Overlay o = outlet_overlay({0, 0, 0});
    const Configuration c(seed, field, seed % 2 ? o : Overlay{});
    const Coord L = 2;
    const bool lo = is_l_outlet(c, {0, 0, 0}, L);
    if (lo) {
      ++l_outlets;
      CHECK(is_elementary_outlet(c, {0, 0, 0}));
    }
    if (const auto w = is_good_box(c, {0, 0, 0}, L)) {
      ++good;
      CHECK(is_l_outlet(c, {w->k, 0, 0}, L));
      for (Coord k = -L + 1; k < w->k; ++k) CHECK_FALSE(is_l_outlet(c, {k, 0, 0}, L));
    }
  }
  CHECK(l_outlets > 20);
  CHECK(good > 5);
}

TEST_CASE("L-outlet frequency is positive and below the elementary frequency") {
  EventSpec elem;
  elem.kind = EventKind::elementary_outlet;
  EventSpec lo = elem;
  lo.kind = EventKind::l_outlet;
  lo.scale = 2;
  const std::uint64_t trials = 1'000'000;
  const auto a = estimate(elem, trials, 314, {4});
  const auto b = estimate(lo, trials, 314, {4});
  MESSAGE("elementary " << a.p_hat << ", L-outlet (L=2) " << b.p_hat);
  CHECK(b.successes > 0);
  CHECK(b.successes <= a.successes);
  for (std::uint64_t t = 0; t < 200000; ++t) {
    const auto seed = hashing::derive_seed(314, t);
    if (evaluate(lo, seed)) CHECK(evaluate(elem, seed));
  }
}
