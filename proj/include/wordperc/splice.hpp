#pragma once

// Arithmetic of one spliced run: how many connectors to follow, whether a
// parity vertex is needed, and how many two-vertex detours fill the rest.
//
// For a run of length l entering at an outlet, with connector lengths
// lambda_0, lambda_1, ... (vertex counts, extremities included):
//
//   I      = sup { i >= 1 : lambda_0 + ... + lambda_{i-1} <= l - 4 }
//   base   = lambda_0 + ... + lambda_{I-1} + 2 + start_extra
//   pad    = (l - base) mod 2
//   detour = (l - base - pad) / 2            needs detour <= I - 1
//
// With l >= ell^2 and every lambda <= ell the plan always exists once the
// connector list is long enough, and I >= ell - 2.

#include <cstdint>
#include <span>
#include <string>
#include <variant>

namespace wordperc {

struct SplicePlan {
  std::int64_t run_length = 0;
  std::int64_t count = 0;  // I, connectors followed
  std::int64_t lambda_sum = 0;
  std::int64_t base_length = 0;
  int parity_pad = 0;
  std::int64_t detours = 0;
  int start_extra = 0;

  friend bool operator==(const SplicePlan&, const SplicePlan&) = default;
};

struct SpliceInfeasible {
  std::string reason;
};

using SpliceResult = std::variant<SplicePlan, SpliceInfeasible>;

struct SpliceOptions {
  int start_extra = 0;
  // Reject runs shorter than ell^2 up front (throws std::invalid_argument).
  bool enforce_m0 = true;
};

// Throws std::invalid_argument when a lambda lies outside [1, ell_eff] or the
// run violates the ell_eff^2 floor under enforce_m0.
SpliceResult splice_plan(std::span<const std::int64_t> lambdas, std::int64_t run_length,
                         std::int64_t ell_eff, SpliceOptions options = {});

}  // namespace wordperc
