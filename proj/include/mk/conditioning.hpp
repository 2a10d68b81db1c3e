#pragma once

#include <utility>

#include "mk/measure.hpp"
#include "mk/random_variable.hpp"

namespace mk {

/// Conditional distribution of Y given X under mu: a kernel X.cod ~> Y.cod
/// with map(mu, (X,Y)) == map(mu, X) (x)_m result. Uniform on X-values of
/// zero mass.
Kernel condDistrib(const RandomVariable& y, const RandomVariable& x, const Measure& mu);

/// Kernel Omega ~> Omega realising conditional expectation given the
/// partition: row(w) is mu restricted to the block of w, normalised
/// (uniform over the block's space when the block has zero mass).
Kernel condExpKernel(const Measure& mu, const PartitionSigma& g);

/// E[f | G] as an exact real random variable.
RealRV condExp(const RealRV& f, const Measure& mu, const PartitionSigma& g);

/// X and Y are independent under kappa(t) for nu-almost every t. Checked on
/// singleton rectangles {a} x {b}, which suffices by finite additivity.
bool kernelIndepFun(const RandomVariable& x, const RandomVariable& y, const Kernel& kappa,
                    const Measure& nu);

/// Independence under a probability measure (throws NotAProbabilityMeasure).
bool indepFun(const RandomVariable& x, const RandomVariable& y, const Measure& mu);

/// Conditional independence given a partition sigma-algebra.
bool condIndepFun(const RandomVariable& x, const RandomVariable& y, const PartitionSigma& g,
                  const Measure& mu);

/// The two sides of: Y indep X given sigma(Z)  <=>  condDistrib(X, (Z,Y))
/// agrees with condDistrib(X, Z) lifted along Y, almost everywhere.
struct CondIndepEquivalence {
  bool condIndep;
  bool condDistribFactorises;
};

CondIndepEquivalence condIndepIffCondDistrib(const RandomVariable& x, const RandomVariable& y,
                                             const RandomVariable& z, const Measure& mu);

}  // namespace mk
