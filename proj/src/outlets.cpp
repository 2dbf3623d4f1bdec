#include "wordperc/outlets.hpp"

#include "wordperc/connectivity.hpp"

namespace wordperc {

OutletVertices OutletVertices::at(const Site& v) {
  OutletVertices o;
  o.center = v;
  o.b_pm = v + Site{0, 0, 0};
  o.b_mm = v + Site{0, -1, 0};
  o.b_pp = v + Site{0, 0, 1};
  o.b_mp = v + Site{0, -1, 1};
  o.w_pp = v + Site{0, 0, -1};
  o.w_mp = v + Site{0, -1, -1};
  o.w_pm = v + Site{0, 0, -2};
  o.w_mm = v + Site{0, -1, -2};
  return o;
}

bool is_elementary_outlet(const Configuration& config, const Site& v) {
  const auto o = OutletVertices::at(v);
  for (const auto& s : o.ones()) {
    if (config.state(s) != 1) return false;
  }
  for (const auto& s : o.zeros()) {
    if (config.state(s) != 0) return false;
  }
  return true;
}

namespace boxes {

namespace {
double d(Coord v) { return static_cast<double>(v); }
}  // namespace

Region gamma(Coord L) { return make_region({-d(L), d(L)}, {0, d(8 * L)}, {0, d(2 * L)}); }
Region upper_right(Coord L) {
  return make_region({-d(L), d(L)}, {0, d(8 * L)}, {1, d(2 * L + 1)});
}
Region upper_left(Coord L) {
  return make_region({-d(L), d(L)}, {-d(8 * L), 0}, {1, d(2 * L + 1)});
}
Region lower_left(Coord L) {
  return make_region({-d(L), d(L)}, {-d(8 * L), 0}, {-d(2 * L + 1), -1});
}
Region lower_right(Coord L) {
  return make_region({-d(L), d(L)}, {0, d(8 * L)}, {-d(2 * L + 1), -1});
}
Region block(Coord L) {
  return make_region({-d(2 * L), d(2 * L)}, {-d(8 * L), d(8 * L)}, {-d(2 * L + 1), d(2 * L + 1)});
}
Region glue_upper(Coord L) {
  return make_region({-d(6 * L), d(6 * L)}, {d(4 * L), d(8 * L)}, {1, d(2 * L + 1)});
}
Region glue_lower(Coord L) {
  return make_region({-d(6 * L), d(6 * L)}, {d(4 * L), d(8 * L)}, {-d(2 * L + 1), -1});
}

}  // namespace boxes

bool gamma_event(const Configuration& config, Coord L) {
  const auto r = boxes::gamma(L);
  return reaches_layer(config, r, 1, {0, 0, 0}, 1, r.hi.y);
}

bool is_l_outlet(const Configuration& config, const Site& v, Coord L) {
  if (!is_elementary_outlet(config, v)) return false;
  const auto local = config.shift(v);
  const auto o = OutletVertices::at({0, 0, 0});
  const auto r1 = boxes::upper_right(L);
  const auto r2 = boxes::upper_left(L);
  const auto r3 = boxes::lower_left(L);
  const auto r4 = boxes::lower_right(L);
  return reaches_layer(local, r1, 1, o.b_pp, 1, r1.hi.y) &&
         reaches_layer(local, r2, 1, o.b_mp, 1, r2.lo.y) &&
         reaches_layer(local, r3, 0, o.w_mm, 1, r3.lo.y) &&
         reaches_layer(local, r4, 0, o.w_pm, 1, r4.hi.y);
}

std::optional<GoodBox> is_good_box(const Configuration& config, const Site& v, Coord L) {
  const auto local = config.shift(v);
  std::optional<GoodBox> witness;
  for (Coord k = -L + 1; k <= L - 1; ++k) {
    if (is_l_outlet(local, {k, 0, 0}, L)) {
      witness = GoodBox{k};
      break;
    }
  }
  if (!witness) return std::nullopt;
  if (!uniqueness(local, boxes::glue_upper(L), L, 1)) return std::nullopt;
  if (!uniqueness(local, boxes::glue_lower(L), L, 0)) return std::nullopt;
  return witness;
}

}  // namespace wordperc
