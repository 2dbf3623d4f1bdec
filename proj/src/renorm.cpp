#include "wordperc/renorm.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace wordperc {

namespace {

void require_even(const RenormVertex& v) {
  if ((v.i + v.j) % 2 != 0) {
    throw std::domain_error("renormalised vertex (" + std::to_string(v.i) + "," +
                            std::to_string(v.j) + ") has odd i+j");
  }
}

// Smaller |i| first, then positive before negative.
bool prefer(Coord a, Coord b) {
  const auto aa = std::llabs(a), ab = std::llabs(b);
  return aa != ab ? aa < ab : a > b;
}

}  // namespace

Site renorm_position(Coord L, const RenormVertex& v) {
  require_even(v);
  return {4 * v.i * L, 12 * v.j * L, 0};
}

bool renorm_adjacent(const RenormVertex& a, const RenormVertex& b) {
  return std::llabs(a.i - b.i) == 1 && std::llabs(a.j - b.j) == 1;
}

std::optional<GoodBox> is_occupied(const Configuration& config, Coord L, const RenormVertex& v) {
  return is_good_box(config, renorm_position(L, v), L);
}

std::optional<GoodBox> OccupancyField::witness(const RenormVertex& v) {
  if (auto it = cache_.find(v); it != cache_.end()) return it->second;
  auto w = is_occupied(config_, L_, v);
  cache_.emplace(v, w);
  return w;
}

std::optional<std::vector<RenormVertex>> find_oriented_path(const Occupancy& occupied,
                                                            std::span<const Coord> start_set,
                                                            Coord steps, Coord window) {
  if (steps < 1) throw std::invalid_argument("oriented path needs at least one step");
  // parent[j][i] = i of the predecessor on layer j-1
  std::vector<std::map<Coord, Coord>> parent(static_cast<std::size_t>(steps) + 1);

  std::vector<Coord> starts(start_set.begin(), start_set.end());
  std::sort(starts.begin(), starts.end(), prefer);
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  for (Coord i : starts) {
    if (std::llabs(i) > window || i % 2 != 0) continue;
    if (occupied({i, 0})) parent[0].emplace(i, i);
  }

  for (Coord j = 1; j <= steps; ++j) {
    const auto& prev = parent[static_cast<std::size_t>(j - 1)];
    if (prev.empty()) return std::nullopt;
    std::vector<Coord> candidates;
    for (const auto& [i, unused] : prev) {
      for (Coord c : {i - 1, i + 1}) {
        if (std::llabs(c) <= window) candidates.push_back(c);
      }
    }
    std::sort(candidates.begin(), candidates.end(), prefer);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    auto& layer = parent[static_cast<std::size_t>(j)];
    for (Coord c : candidates) {
      if (!occupied({c, j})) continue;
      std::optional<Coord> best;
      for (Coord pred : {c - 1, c + 1}) {
        if (prev.contains(pred) && (!best || prefer(pred, *best))) best = pred;
      }
      layer.emplace(c, *best);
    }
  }

  const auto& last = parent.back();
  if (last.empty()) return std::nullopt;
  Coord end = last.begin()->first;
  for (const auto& [i, unused] : last) {
    if (prefer(i, end)) end = i;
  }
  std::vector<RenormVertex> path(static_cast<std::size_t>(steps) + 1);
  Coord i = end;
  for (Coord j = steps; j >= 0; --j) {
    path[static_cast<std::size_t>(j)] = {i, j};
    i = parent[static_cast<std::size_t>(j)].at(i);
  }
  return path;
}

ChainResult extract_outlet_chain(const Configuration& config, Coord L,
                                 std::span<const RenormVertex> path) {
  std::vector<Site> centers;
  for (std::size_t t = 0; t < path.size(); ++t) {
    const auto witness = is_occupied(config, L, path[t]);
    if (!witness) {
      return ChainFailure{t, "vertex (" + std::to_string(path[t].i) + "," +
                                 std::to_string(path[t].j) + ") is not occupied"};
    }
    centers.push_back(renorm_position(L, path[t]) + Site{witness->k, 0, 0});
  }
  return connect_outlets(config, L, path, centers);
}

ChainResult connect_outlets(const Configuration& config, Coord L,
                            std::span<const RenormVertex> path, std::span<const Site> centers) {
  if (path.size() != centers.size() || path.empty()) {
    throw std::invalid_argument("connect_outlets: path and centres must match and be nonempty");
  }
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    if (!renorm_adjacent(path[t], path[t + 1]) || path[t + 1].j != path[t].j + 1) {
      throw std::invalid_argument("connect_outlets: path is not oriented at step " +
                                  std::to_string(t));
    }
  }

  OutletChain chain;
  chain.L = L;
  for (const auto& c : centers) chain.outlets.push_back(OutletVertices::at(c));

  SiteSet outlet_sites;
  for (const auto& o : chain.outlets) {
    for (const auto& s : o.all()) outlet_sites.insert(s);
  }

  SiteSet used_b, used_w;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    const auto here = renorm_position(L, path[t]);
    const auto next = renorm_position(L, path[t + 1]);
    const Region block_here = boxes::block(L).translated(here);
    const Region block_next = boxes::block(L).translated(next);
    const auto& from = chain.outlets[t];
    const auto& to = chain.outlets[t + 1];

    for (int color : {1, 0}) {
      const Region glue = (color ? boxes::glue_upper(L) : boxes::glue_lower(L)).translated(here);
      const Region span_box = bounding_union(bounding_union(block_here, block_next), glue);
      Site lo = span_box.lo, hi = span_box.hi;
      if (color) {
        lo.z = 1;
      } else {
        hi.z = -2;
      }
      const Region area(lo, hi);
      const Site source = color ? from.b_pp : from.w_pm;
      const Site target = color ? to.b_mp : to.w_mm;
      auto admissible = [&](const Site& s) {
        if (!(block_here.contains(s) || block_next.contains(s) || glue.contains(s))) return false;
        return s == source || s == target || !outlet_sites.contains(s);
      };
      const Site src[1] = {source};
      const Site dst[1] = {target};
      auto& used = color ? used_b : used_w;
      auto found = find_path(config, area, color, src, dst, &used, admissible);
      if (!found) {
        return ChainFailure{t, std::string("no ") + (color ? "1" : "0") +
                                   "-connector between outlets " + std::to_string(t) + " and " +
                                   std::to_string(t + 1)};
      }
      used.insert(found->begin(), found->end());
      auto& lambdas = color ? chain.lambda_b : chain.lambda_w;
      lambdas.push_back(static_cast<std::int64_t>(found->size()));
      chain.ell_eff = std::max(chain.ell_eff, lambdas.back());
      (color ? chain.b_paths : chain.w_paths).push_back(std::move(*found));
    }
  }
  return chain;
}

std::optional<std::string> validate_chain(const Configuration& config, const OutletChain& chain) {
  const auto n = chain.outlets.size();
  if (n == 0) return "chain has no outlets";
  if (chain.b_paths.size() + 1 != n || chain.w_paths.size() + 1 != n ||
      chain.lambda_b.size() + 1 != n || chain.lambda_w.size() + 1 != n) {
    return "connector count does not match outlet count";
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_elementary_outlet(config, chain.outlets[i].center)) {
      return "outlet " + std::to_string(i) + " is not an elementary outlet";
    }
  }

  SiteSet outlet_sites;
  for (const auto& o : chain.outlets) {
    for (const auto& s : o.all()) {
      if (!outlet_sites.insert(s).second) return "outlets overlap at " + to_string(s);
    }
  }

  SiteSet seen;
  std::int64_t ell = 0;
  for (int color : {1, 0}) {
    const auto& paths = color ? chain.b_paths : chain.w_paths;
    const auto& lambdas = color ? chain.lambda_b : chain.lambda_w;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto& p = paths[i];
      const std::string tag = std::string(color ? "b" : "w") + "-connector " + std::to_string(i);
      if (p.empty()) return tag + " is empty";
      const Site start = color ? chain.outlets[i].b_pp : chain.outlets[i].w_pm;
      const Site end = color ? chain.outlets[i + 1].b_mp : chain.outlets[i + 1].w_mm;
      if (p.front() != start || p.back() != end) return tag + " has wrong endpoints";
      if (lambdas[i] != static_cast<std::int64_t>(p.size())) return tag + " has wrong lambda";
      ell = std::max(ell, lambdas[i]);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (config.state(p[k]) != color) return tag + " has wrong colour at " + to_string(p[k]);
        if (k && !adjacent(p[k - 1], p[k])) return tag + " is not nearest-neighbour";
        if (!seen.insert(p[k]).second) return tag + " reuses site " + to_string(p[k]);
        const bool endpoint = p[k] == start || p[k] == end;
        if (!endpoint && outlet_sites.contains(p[k])) {
          return tag + " passes through outlet site " + to_string(p[k]);
        }
      }
    }
  }
  if (ell != chain.ell_eff) return "ell_eff is not the maximal lambda";
  return std::nullopt;
}

std::int64_t ell_bound(Coord L) { return (12 * L - 1) * 12 * L * (2 * L + 1); }

}  // namespace wordperc
