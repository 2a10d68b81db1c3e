#pragma once

#include <cstddef>
#include <vector>

#include "mk/measure.hpp"

namespace mk {

/// Bayesian inverse of kappa: Omega ~> X with respect to the prior mu:
/// the conditional kernel of the swapped joint measure mu (x)_m kappa.
/// Rows with zero evidence are uniform over Omega.
Kernel posterior(const Kernel& kappa, const Measure& mu);

struct BayesAtomCheck {
  std::size_t evidence;   // y
  std::size_t cause;      // x
  Scalar posterior;       // posterior(y)({x})
  Scalar formula;         // mu({x}) * d kappa(x) / d (kappa o_m mu) (y)
  bool holds;
};

struct BayesReport {
  std::vector<BayesAtomCheck> checks;
  /// kappa(x) << kappa o_m mu for mu-almost every x. Always true on finite
  /// spaces; reported for completeness.
  bool dominated;
  bool holds;
};

/// Verifies the discrete Bayes formula on every positive-evidence atom.
BayesReport bayesCheck(const Kernel& kappa, const Measure& mu);

/// (kappa o_m mu) (x)_m posterior == swap_* (mu (x)_m kappa).
bool posteriorIdentityHolds(const Kernel& kappa, const Measure& mu);

/// posterior(posterior(kappa, mu), kappa o_m mu)(x) == kappa(x) for every
/// x with mu({x}) > 0.
bool posteriorInvolutionHolds(const Kernel& kappa, const Measure& mu);

}  // namespace mk
