#pragma once

// Cluster structure of one colour inside a finite box, plus the crossing and
// uniqueness events and colour-restricted shortest paths built on it.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "wordperc/configuration.hpp"
#include "wordperc/lattice.hpp"

namespace wordperc {

using SiteSet = std::unordered_set<Site, SiteHash>;
using Path = std::vector<Site>;

struct ClusterMeta {
  Site id;  // lexicographically smallest member
  std::size_t size = 0;
  Site box_lo;
  Site box_hi;

  // L-infinity diameter of the member set.
  Coord diameter() const;
};

class ClusterLabeling {
 public:
  ClusterLabeling(Region region, int color, std::vector<std::int32_t> slot,
                  std::vector<ClusterMeta> clusters);

  const Region& region() const { return region_; }
  int color() const { return color_; }
  // Cluster id of s, or nullopt if s is outside the region or has the other colour.
  std::optional<Site> label(const Site& s) const;
  const ClusterMeta* cluster_of(const Site& s) const;
  // Ordered by id.
  const std::vector<ClusterMeta>& clusters() const { return clusters_; }

 private:
  Region region_;
  int color_;
  std::vector<std::int32_t> slot_;  // per flat index, -1 when not of `color`
  std::vector<ClusterMeta> clusters_;
};

ClusterLabeling clusters(const Configuration& config, const Region& region, int color);

// A `color`-path inside r joins its minimal-y and maximal-y layers.
bool crossing(const Configuration& config, const Region& r, int color = 1);

// Every `color` cluster in r with diameter >= t is the same cluster.
bool uniqueness(const Configuration& config, const Region& r, Coord t, int color);

// Breadth-first shortest `color`-path inside `region` from some source to some
// target avoiding `forbidden` (and any site rejected by `admissible`). Sources
// are tried in lexicographic order and neighbours in the fixed
// +x,-x,+y,-y,+z,-z order.
std::optional<Path> find_path(const Configuration& config, const Region& region, int color,
                              std::span<const Site> sources, std::span<const Site> targets,
                              const SiteSet* forbidden = nullptr,
                              const std::function<bool(const Site&)>& admissible = {});

// `color`-path inside `region` from `source` to the layer where axis == value.
bool reaches_layer(const Configuration& config, const Region& region, int color,
                   const Site& source, int axis, Coord value);

}  // namespace wordperc
