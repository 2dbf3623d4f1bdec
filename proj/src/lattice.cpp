#include "wordperc/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace wordperc {

std::string to_string(const Site& s) {
  return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + "," + std::to_string(s.z) + ")";
}

Region::Region(Site lo_, Site hi_) : lo(lo_), hi(hi_) {
  for (int a = 0; a < 3; ++a) {
    if (lo[a] > hi[a]) {
      throw EmptyRegionError("empty region on axis " + std::to_string(a) + ": " + to_string(lo) +
                             ".." + to_string(hi));
    }
  }
}

Site Region::site(std::size_t index) const {
  const auto nz = static_cast<std::size_t>(extent(2));
  const auto ny = static_cast<std::size_t>(extent(1));
  const auto z = index % nz;
  const auto y = (index / nz) % ny;
  const auto x = index / (nz * ny);
  return {lo.x + static_cast<Coord>(x), lo.y + static_cast<Coord>(y), lo.z + static_cast<Coord>(z)};
}

Region bounding_union(const Region& a, const Region& b) {
  Site lo, hi;
  for (int ax = 0; ax < 3; ++ax) {
    lo[ax] = std::min(a.lo[ax], b.lo[ax]);
    hi[ax] = std::max(a.hi[ax], b.hi[ax]);
  }
  return Region(lo, hi);
}

namespace {

std::pair<Coord, Coord> integer_axis(OpenInterval iv) {
  return {static_cast<Coord>(std::floor(iv.lo)) + 1, static_cast<Coord>(std::ceil(iv.hi)) - 1};
}

std::pair<Coord, Coord> half_integer_axis(OpenInterval iv) {
  return {static_cast<Coord>(std::floor(iv.lo - 0.5)) + 1,
          static_cast<Coord>(std::ceil(iv.hi - 0.5)) - 1};
}

Coord parse_coord(std::string_view s, std::string_view whole) {
  Coord v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("bad region literal '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Region make_region(OpenInterval x, OpenInterval y, OpenInterval z) {
  const auto [x0, x1] = integer_axis(x);
  const auto [y0, y1] = half_integer_axis(y);
  const auto [z0, z1] = half_integer_axis(z);
  return Region({x0, y0, z0}, {x1, y1, z1});
}

Region parse_region(std::string_view text) {
  Site lo, hi;
  std::string_view rest = text;
  for (int axis = 0; axis < 3; ++axis) {
    const auto comma = rest.find(',');
    if ((axis < 2) == (comma == std::string_view::npos)) {
      throw std::invalid_argument("bad region literal '" + std::string(text) + "'");
    }
    const auto part = rest.substr(0, comma);
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      throw std::invalid_argument("bad region literal '" + std::string(text) + "'");
    }
    lo[axis] = parse_coord(part.substr(0, dots), text);
    hi[axis] = parse_coord(part.substr(dots + 2), text);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return Region(lo, hi);
}

std::string format_region(const Region& r) {
  std::string out;
  for (int a = 0; a < 3; ++a) {
    if (a) out += ',';
    out += std::to_string(r.lo[a]) + ".." + std::to_string(r.hi[a]);
  }
  return out;
}

}  // namespace wordperc
