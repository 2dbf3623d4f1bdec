#pragma once

// Coordinates on the shifted cubic lattice Z^3 + (0, 1/2, 1/2).
//
// A stored triple (x, y, z) names the site (x, y + 1/2, z + 1/2). Two sites are
// nearest neighbours iff their stored triples differ by exactly one in exactly
// one axis, so all lattice arithmetic stays on integers.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordperc {

using Coord = std::int64_t;

struct Site {
  Coord x = 0;
  Coord y = 0;
  Coord z = 0;

  constexpr Coord operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  constexpr Coord& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }

  friend constexpr auto operator<=>(const Site&, const Site&) = default;
  friend constexpr Site operator+(Site a, Site b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Site operator-(Site a, Site b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
};

struct SiteHash {
  std::size_t operator()(const Site& s) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(s.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(s.y) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(s.z) * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Neighbour order used by every deterministic search: +x, -x, +y, -y, +z, -z.
inline constexpr std::array<Site, 6> kNeighbourOffsets{{
    {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};

constexpr bool adjacent(const Site& a, const Site& b) {
  const Coord dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const Coord dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  const Coord dz = a.z > b.z ? a.z - b.z : b.z - a.z;
  return dx + dy + dz == 1;
}

std::string to_string(const Site& s);

class EmptyRegionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inclusive box of stored coordinates.
struct Region {
  Site lo;
  Site hi;

  Region() = default;
  // Throws EmptyRegionError unless lo <= hi componentwise.
  Region(Site lo_, Site hi_);

  Coord extent(int axis) const { return hi[axis] - lo[axis] + 1; }
  std::size_t size() const {
    return static_cast<std::size_t>(extent(0) * extent(1) * extent(2));
  }
  bool contains(const Site& s) const {
    return lo.x <= s.x && s.x <= hi.x && lo.y <= s.y && s.y <= hi.y && lo.z <= s.z && s.z <= hi.z;
  }
  // Flat index; lexicographic (x, y, z) order of sites equals index order.
  std::size_t index(const Site& s) const {
    return static_cast<std::size_t>(((s.x - lo.x) * extent(1) + (s.y - lo.y)) * extent(2) +
                                    (s.z - lo.z));
  }
  Site site(std::size_t index) const;

  Region translated(const Site& v) const { return Region(lo + v, hi + v); }

  friend bool operator==(const Region&, const Region&) = default;
};

// Smallest box containing both (used for connector search areas).
Region bounding_union(const Region& a, const Region& b);

// Open real interval (lo, hi) on one axis of the shifted lattice.
struct OpenInterval {
  double lo;
  double hi;
};

// Converts open real bounds to inclusive stored bounds. On the x axis (integer
// coordinates) (a, b) keeps x in [floor(a)+1, ceil(b)-1]; on y and z the real
// coordinate is v + 1/2, so (a, b) keeps stored v with a < v + 1/2 < b.
Region make_region(OpenInterval x, OpenInterval y, OpenInterval z);

// Region literal "x0..x1,y0..y1,z0..z1" with inclusive stored bounds.
Region parse_region(std::string_view text);
std::string format_region(const Region& r);

}  // namespace wordperc
