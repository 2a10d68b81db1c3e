#include "mk/bayes.hpp"

#include "mk/algebra.hpp"
#include "mk/disintegration.hpp"
#include "mk/error.hpp"

namespace mk {

Kernel posterior(const Kernel& kappa, const Measure& mu) {
  if (!(mu.space() == kappa.domain())) {
    throw Error(ErrorCode::SpaceMismatch, "posterior: prior on " + mu.space().describe() +
                                              ", kernel from " + kappa.domain().describe());
  }
  const Measure swapped = map(measureCompProd(mu, kappa), swapMap(mu.space(), kappa.codomain()));
  return condKernelMeasure(swapped);
}

BayesReport bayesCheck(const Kernel& kappa, const Measure& mu) {
  const Kernel post = posterior(kappa, mu);
  const Measure evidence = measureComp(kappa, mu);
  BayesReport report{{}, true, true};
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (mu[x].isZero()) continue;
    for (std::size_t y = 0; y < evidence.size(); ++y) {
      if (evidence[y].isZero() && !kappa.at(x, y).isZero()) report.dominated = false;
    }
  }
  std::vector<std::vector<Scalar>> densities;
  densities.reserve(mu.size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    densities.push_back(rnDeriv(kappa.row(x), evidence));
  }
  for (std::size_t y = 0; y < evidence.size(); ++y) {
    if (evidence[y].isZero()) continue;
    for (std::size_t x = 0; x < mu.size(); ++x) {
      const Scalar formula = mu[x] * densities[x][y];
      const Scalar& actual = post.at(y, x);
      const bool ok = formula == actual;
      report.holds = report.holds && ok;
      report.checks.push_back({y, x, actual, formula, ok});
    }
  }
  return report;
}

bool posteriorIdentityHolds(const Kernel& kappa, const Measure& mu) {
  const Kernel post = posterior(kappa, mu);
  const Measure lhs = measureCompProd(measureComp(kappa, mu), post);
  const Measure rhs =
      map(measureCompProd(mu, kappa), swapMap(mu.space(), kappa.codomain()));
  return lhs == rhs;
}

bool posteriorInvolutionHolds(const Kernel& kappa, const Measure& mu) {
  const Kernel post = posterior(kappa, mu);
  const Kernel back = posterior(post, measureComp(kappa, mu));
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (mu[x].isZero()) continue;
    if (!(back.row(x) == kappa.row(x))) return false;
  }
  return true;
}

}  // namespace mk
