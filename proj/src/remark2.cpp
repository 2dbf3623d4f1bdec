#include "wordperc/remark2.hpp"

#include <deque>
#include <stdexcept>

#include "wordperc/configuration.hpp"

namespace wordperc {

GridState hashed_grid(std::uint64_t seed, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  return [seed, p](const GridPoint& x) { return hashing::uniform(seed, x) < p ? 1 : 0; };
}

bool is_good_column(const GridState& state, const GridPoint& column) {
  GridPoint site = column;
  site.push_back(0);
  if (state(site) != 0) return false;
  site.back() = 1;
  return state(site) == 1;
}

bool grid_adjacent(const GridPoint& a, const GridPoint& b) {
  if (a.size() != b.size()) return false;
  Coord total = 0;
  for (std::size_t k = 0; k < a.size(); ++k) total += a[k] > b[k] ? a[k] - b[k] : b[k] - a[k];
  return total == 1;
}

std::optional<std::vector<GridPoint>> good_crossing(const GridState& state, int dims, Coord side) {
  if (dims < 1 || side < 1) throw std::invalid_argument("good_crossing needs dims, side >= 1");
  std::size_t total = 1;
  for (int k = 0; k < dims; ++k) total *= static_cast<std::size_t>(side);

  // Flat index with axis 0 most significant.
  auto decode = [&](std::size_t idx) {
    GridPoint p(static_cast<std::size_t>(dims));
    for (int k = dims - 1; k >= 0; --k) {
      p[static_cast<std::size_t>(k)] = static_cast<Coord>(idx % static_cast<std::size_t>(side));
      idx /= static_cast<std::size_t>(side);
    }
    return p;
  };
  std::vector<std::size_t> stride(static_cast<std::size_t>(dims));
  std::size_t s = 1;
  for (int k = dims - 1; k >= 0; --k) {
    stride[static_cast<std::size_t>(k)] = s;
    s *= static_cast<std::size_t>(side);
  }

  // 0 unknown, 1 good, 2 bad
  std::vector<std::uint8_t> good(total, 0);
  auto is_good = [&](std::size_t idx) {
    if (good[idx] == 0) good[idx] = is_good_column(state, decode(idx)) ? 1 : 2;
    return good[idx] == 1;
  };

  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(total, kNone);
  std::vector<std::uint8_t> seen(total, 0);
  std::deque<std::size_t> queue;
  const std::size_t face = total / static_cast<std::size_t>(side);
  for (std::size_t idx = 0; idx < face; ++idx) {
    if (is_good(idx)) {
      seen[idx] = 1;
      queue.push_back(idx);
    }
  }
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    const auto p = decode(cur);
    if (p[0] == side - 1) {
      std::vector<GridPoint> path;
      for (auto k = cur; k != kNone; k = parent[k]) path.push_back(decode(k));
      return std::vector<GridPoint>(path.rbegin(), path.rend());
    }
    for (int k = 0; k < dims; ++k) {
      const auto axis = static_cast<std::size_t>(k);
      for (int dir : {1, -1}) {
        const Coord c = p[axis] + dir;
        if (c < 0 || c >= side) continue;
        const auto nb = dir > 0 ? cur + stride[axis] : cur - stride[axis];
        if (seen[nb] || !is_good(nb)) continue;
        seen[nb] = 1;
        parent[nb] = cur;
        queue.push_back(nb);
      }
    }
  }
  return std::nullopt;
}

std::optional<LiftedPath> remark2_embed(const GridState& state, int dims, Coord side,
                                        const Word& word, std::int64_t n) {
  if (!is_m_stretched(word, 2)) throw std::invalid_argument("word is not 2-stretched");
  if (n < 1) throw std::invalid_argument("prefix length must be positive");
  const auto digits = materialize(word, n);
  const auto columns = good_crossing(state, dims, side);
  if (!columns) return std::nullopt;

  LiftedPath out;
  std::size_t col = 0;
  auto lifted = [&](std::size_t c, int level) {
    GridPoint p = (*columns)[c];
    p.push_back(level);
    return p;
  };
  out.path.push_back(lifted(0, digits[0]));
  for (std::size_t t = 1; t < digits.size(); ++t) {
    if (digits[t] == digits[t - 1] && ++col >= columns->size()) return std::nullopt;
    out.path.push_back(lifted(col, digits[t]));
  }
  out.word_prefix = digits;
  return out;
}

Verdict verify_lifted(const GridState& state, const LiftedPath& lifted) {
  return check_embedding<GridPoint>(lifted.path, lifted.word_prefix, state, grid_adjacent);
}

}  // namespace wordperc
