#include "wordperc/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace wordperc {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

std::vector<std::uint8_t> region_states(const Configuration& config, const Region& r) {
  std::vector<std::uint8_t> states(r.size());
  std::size_t i = 0;
  for (Coord x = r.lo.x; x <= r.hi.x; ++x)
    for (Coord y = r.lo.y; y <= r.hi.y; ++y)
      for (Coord z = r.lo.z; z <= r.hi.z; ++z)
        states[i++] = static_cast<std::uint8_t>(config.state({x, y, z}));
  return states;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

Coord ClusterMeta::diameter() const {
  return std::max({box_hi.x - box_lo.x, box_hi.y - box_lo.y, box_hi.z - box_lo.z});
}

ClusterLabeling::ClusterLabeling(Region region, int color, std::vector<std::int32_t> slot,
                                 std::vector<ClusterMeta> clusters)
    : region_(region), color_(color), slot_(std::move(slot)), clusters_(std::move(clusters)) {}

std::optional<Site> ClusterLabeling::label(const Site& s) const {
  if (const auto* c = cluster_of(s)) return c->id;
  return std::nullopt;
}

const ClusterMeta* ClusterLabeling::cluster_of(const Site& s) const {
  if (!region_.contains(s)) return nullptr;
  const auto k = slot_[region_.index(s)];
  return k < 0 ? nullptr : &clusters_[static_cast<std::size_t>(k)];
}

ClusterLabeling clusters(const Configuration& config, const Region& region, int color) {
  const auto states = region_states(config, region);
  const auto n = states.size();
  const auto nz = static_cast<std::size_t>(region.extent(2));
  const auto nyz = static_cast<std::size_t>(region.extent(1)) * nz;
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (states[i] != color) continue;
    const Site s = region.site(i);
    if (s.z < region.hi.z && states[i + 1] == color) sets.unite(i, i + 1);
    if (s.y < region.hi.y && states[i + nz] == color) sets.unite(i, i + nz);
    if (s.x < region.hi.x && states[i + nyz] == color) sets.unite(i, i + nyz);
  }

  std::vector<std::int32_t> slot(n, -1);
  std::vector<std::int32_t> root_slot(n, -1);
  std::vector<ClusterMeta> metas;
  for (std::size_t i = 0; i < n; ++i) {
    if (states[i] != color) continue;
    const auto root = sets.find(i);
    const Site s = region.site(i);
    if (root_slot[root] < 0) {
      root_slot[root] = static_cast<std::int32_t>(metas.size());
      metas.push_back({s, 0, s, s});
    }
    auto& m = metas[static_cast<std::size_t>(root_slot[root])];
    ++m.size;
    for (int a = 0; a < 3; ++a) {
      m.box_lo[a] = std::min(m.box_lo[a], s[a]);
      m.box_hi[a] = std::max(m.box_hi[a], s[a]);
    }
    slot[i] = root_slot[root];
  }
  return ClusterLabeling(region, color, std::move(slot), std::move(metas));
}

bool crossing(const Configuration& config, const Region& r, int color) {
  const auto labels = clusters(config, r, color);
  for (const auto& c : labels.clusters()) {
    if (c.box_lo.y == r.lo.y && c.box_hi.y == r.hi.y) return true;
  }
  return false;
}

bool uniqueness(const Configuration& config, const Region& r, Coord t, int color) {
  const auto labels = clusters(config, r, color);
  int large = 0;
  for (const auto& c : labels.clusters()) {
    if (c.diameter() >= t && ++large > 1) return false;
  }
  return true;
}

std::optional<Path> find_path(const Configuration& config, const Region& region, int color,
                              std::span<const Site> sources, std::span<const Site> targets,
                              const SiteSet* forbidden,
                              const std::function<bool(const Site&)>& admissible) {
  const auto n = region.size();
  std::vector<std::uint8_t> is_target(n, 0);
  for (const auto& t : targets) {
    if (region.contains(t)) is_target[region.index(t)] = 1;
  }
  // 0 unknown, 1 open, 2 blocked
  std::vector<std::uint8_t> cell(n, 0);
  auto open = [&](const Site& s, std::size_t idx) {
    if (cell[idx] == 0) {
      const bool ok = config.state(s) == color && !(forbidden && forbidden->contains(s)) &&
                      (!admissible || admissible(s));
      cell[idx] = ok ? 1 : 2;
    }
    return cell[idx] == 1;
  };

  std::vector<Site> ordered(sources.begin(), sources.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::uint8_t> seen(n, 0);
  std::deque<std::size_t> queue;
  for (const auto& s : ordered) {
    if (!region.contains(s)) continue;
    const auto idx = region.index(s);
    if (seen[idx] || !open(s, idx)) continue;
    seen[idx] = 1;
    queue.push_back(idx);
  }

  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    const Site s = region.site(cur);
    if (is_target[cur]) {
      Path path;
      for (auto k = cur; k != kNone; k = parent[k]) path.push_back(region.site(k));
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& d : kNeighbourOffsets) {
      const Site nb = s + d;
      if (!region.contains(nb)) continue;
      const auto idx = region.index(nb);
      if (seen[idx] || !open(nb, idx)) continue;
      seen[idx] = 1;
      parent[idx] = cur;
      queue.push_back(idx);
    }
  }
  return std::nullopt;
}

bool reaches_layer(const Configuration& config, const Region& region, int color,
                   const Site& source, int axis, Coord value) {
  if (!region.contains(source) || config.state(source) != color) return false;
  const auto n = region.size();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Site> stack{source};
  seen[region.index(source)] = 1;
  while (!stack.empty()) {
    const Site s = stack.back();
    stack.pop_back();
    if (s[axis] == value) return true;
    for (const auto& d : kNeighbourOffsets) {
      const Site nb = s + d;
      if (!region.contains(nb)) continue;
      const auto idx = region.index(nb);
      if (seen[idx]) continue;
      seen[idx] = 1;
      if (config.state(nb) == color) stack.push_back(nb);
    }
  }
  return false;
}

}  // namespace wordperc
