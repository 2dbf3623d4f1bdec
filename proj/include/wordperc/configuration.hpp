#pragma once

// Deterministic Bernoulli site configurations.
//
// Site states come from a counter-based hash, so a configuration is defined
// on the whole lattice without storing anything, two overlapping region
// queries always agree, and configurations with the same seed are coupled
// monotonically in p.
//
// Hash v1 (frozen; changing it changes every seeded result):
//   h  = mix64(seed + 0x9E3779B97F4A7C15 * domain)
//   h  = mix64(h ^ (uint64(c_k) + 0xD1B54A32D192ED03 * (k + 1)))   for each coordinate c_k
//   u  = (h >> 11) * 2^-53
// where mix64 is the SplitMix64 finaliser. A site is 1 iff u < p.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <unordered_map>

#include "wordperc/lattice.hpp"

namespace wordperc {

namespace hashing {

inline constexpr std::uint64_t kSiteDomain = 1;
inline constexpr std::uint64_t kTrialDomain = 2;
inline constexpr std::uint64_t kSweepDomain = 3;

constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t hash_coords(std::uint64_t seed, std::uint64_t domain, std::span<const Coord> coords);

inline double to_unit(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// u(seed, coords) in [0, 1).
inline double uniform(std::uint64_t seed, std::span<const Coord> coords) {
  return to_unit(hash_coords(seed, kSiteDomain, coords));
}

// Seed of trial `index` derived from `base`, domain-separated from sites.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index,
                          std::uint64_t domain = kTrialDomain);

}  // namespace hashing

using Overlay = std::unordered_map<Site, std::uint8_t, SiteHash>;
// Site-dependent parameter for inhomogeneous fields; same hash, so still
// monotone-coupled with homogeneous configurations of the same seed.
using ProbabilityField = std::function<double(const Site&)>;

class Configuration {
 public:
  Configuration(std::uint64_t seed, double p);
  Configuration(std::uint64_t seed, double p, Overlay overlay);
  Configuration(std::uint64_t seed, ProbabilityField field, Overlay overlay = {});

  // Uniform configuration: every hashed site takes `state`.
  static Configuration constant(int state);

  int state(const Site& s) const {
    const Site u = s + offset_;
    int v;
    if (overlay_) {
      auto it = overlay_->find(u);
      v = it != overlay_->end() ? it->second : hashed(u);
    } else {
      v = hashed(u);
    }
    return flipped_ ? 1 - v : v;
  }

  // All states flipped (overlay included).
  Configuration complement() const;
  // state(shift(v), u) == state(u + v).
  Configuration shift(const Site& v) const;

  std::uint64_t seed() const { return seed_; }
  // Nominal p; meaningless for inhomogeneous fields.
  double p() const { return p_; }
  bool inhomogeneous() const { return field_ != nullptr; }
  bool complemented() const { return flipped_; }
  const Site& offset() const { return offset_; }

 private:
  int hashed(const Site& u) const {
    const Coord c[3] = {u.x, u.y, u.z};
    const double threshold = field_ ? (*field_)(u) : p_;
    return hashing::uniform(seed_, c) < threshold ? 1 : 0;
  }

  std::uint64_t seed_;
  double p_;
  std::shared_ptr<const Overlay> overlay_;
  std::shared_ptr<const ProbabilityField> field_;
  Site offset_{};
  bool flipped_ = false;
};

// Convenience for tests and the CLI: `state` written on every site of `r`.
void fill(Overlay& overlay, const Region& r, int state);

}  // namespace wordperc
