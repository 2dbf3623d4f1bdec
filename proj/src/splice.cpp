#include "wordperc/splice.hpp"

#include <stdexcept>

namespace wordperc {

SpliceResult splice_plan(std::span<const std::int64_t> lambdas, std::int64_t run_length,
                         std::int64_t ell_eff, SpliceOptions options) {
  const std::int64_t l = run_length;
  if (options.start_extra != 0 && options.start_extra != 1) {
    throw std::invalid_argument("start_extra must be 0 or 1");
  }
  if (ell_eff < 1) throw std::invalid_argument("ell_eff must be positive");
  if (options.enforce_m0 && l < ell_eff * ell_eff) {
    throw std::invalid_argument("run length " + std::to_string(l) + " is below ell^2 = " +
                                std::to_string(ell_eff * ell_eff));
  }
  for (auto lambda : lambdas) {
    if (lambda < 1 || lambda > ell_eff) {
      throw std::invalid_argument("connector length " + std::to_string(lambda) +
                                  " outside [1, ell_eff]");
    }
  }

  SplicePlan plan;
  plan.run_length = l;
  plan.start_extra = options.start_extra;
  for (auto lambda : lambdas) {
    if (plan.lambda_sum + lambda > l - 4) break;
    plan.lambda_sum += lambda;
    ++plan.count;
  }
  if (plan.count == 0) {
    return SpliceInfeasible{"first connector does not fit in a run of length " +
                            std::to_string(l)};
  }
  const bool exhausted = plan.count == static_cast<std::int64_t>(lambdas.size());
  if (exhausted && plan.lambda_sum < l - ell_eff - 3) {
    return SpliceInfeasible{"chain exhausted after " + std::to_string(plan.count) +
                            " connectors"};
  }

  plan.base_length = plan.lambda_sum + 2 + plan.start_extra;
  plan.parity_pad = static_cast<int>((l - plan.base_length) % 2);
  plan.detours = (l - plan.base_length - plan.parity_pad) / 2;
  if (plan.detours > plan.count - 1) {
    return SpliceInfeasible{"needs " + std::to_string(plan.detours) + " detours but only " +
                            std::to_string(plan.count - 1) + " intermediary outlets"};
  }
  return plan;
}

}  // namespace wordperc
