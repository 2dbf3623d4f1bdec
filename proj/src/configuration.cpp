#include "wordperc/configuration.hpp"

#include <stdexcept>
#include <string>

namespace wordperc {

namespace hashing {

std::uint64_t hash_coords(std::uint64_t seed, std::uint64_t domain,
                          std::span<const Coord> coords) {
  std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL * domain);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    h = mix64(h ^ (static_cast<std::uint64_t>(coords[k]) + 0xD1B54A32D192ED03ULL * (k + 1)));
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index, std::uint64_t domain) {
  const Coord c[1] = {static_cast<Coord>(index)};
  return hash_coords(base, domain, c);
}

}  // namespace hashing

namespace {

double checked_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0,1], got " + std::to_string(p));
  }
  return p;
}

}  // namespace

Configuration::Configuration(std::uint64_t seed, double p) : seed_(seed), p_(checked_p(p)) {}

Configuration::Configuration(std::uint64_t seed, double p, Overlay overlay)
    : seed_(seed), p_(checked_p(p)) {
  if (!overlay.empty()) {
    overlay_ = std::make_shared<const Overlay>(std::move(overlay));
  }
}

Configuration::Configuration(std::uint64_t seed, ProbabilityField field, Overlay overlay)
    : seed_(seed), p_(0.5) {
  if (!field) throw std::invalid_argument("probability field must be callable");
  field_ = std::make_shared<const ProbabilityField>(std::move(field));
  if (!overlay.empty()) {
    overlay_ = std::make_shared<const Overlay>(std::move(overlay));
  }
}

Configuration Configuration::constant(int state) {
  return Configuration(0, state ? 1.0 : 0.0);
}

Configuration Configuration::complement() const {
  Configuration c = *this;
  c.flipped_ = !flipped_;
  return c;
}

Configuration Configuration::shift(const Site& v) const {
  Configuration c = *this;
  c.offset_ = offset_ + v;
  return c;
}

void fill(Overlay& overlay, const Region& r, int state) {
  for (Coord x = r.lo.x; x <= r.hi.x; ++x)
    for (Coord y = r.lo.y; y <= r.hi.y; ++y)
      for (Coord z = r.lo.z; z <= r.hi.z; ++z) overlay[{x, y, z}] = static_cast<std::uint8_t>(state);
}

}  // namespace wordperc
