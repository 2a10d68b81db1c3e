#pragma once

#include "mk/measure.hpp"
#include "mk/random_variable.hpp"

// Kernel operations. Notation in comments: `eta . kappa` is composition
// (kappa first), `||` parallel composition, `x` product, `(x)` the
// composition-product. Bracketing is strict: no operation inserts an
// associator on the caller's behalf.
namespace mk {

// Structural kernels.
Kernel deterministic(const RandomVariable& f);
Kernel identityKernel(const Space& space);
Kernel copyKernel(const Space& space);      // X ~> X*X, x -> Dirac(x,x)
Kernel discardKernel(const Space& space);   // X ~> Unit
Kernel constantKernel(const Space& domain, const Measure& mu);
Kernel zeroKernel(const Space& domain, const Space& codomain);
Kernel swapKernel(const Space& a, const Space& b);                      // A*B ~> B*A
Kernel assocKernel(const Space& a, const Space& b, const Space& c);     // A*(B*C) ~> (A*B)*C
Kernel assocInvKernel(const Space& a, const Space& b, const Space& c);  // (A*B)*C ~> A*(B*C)
Kernel fstProjKernel(const Space& a, const Space& b);
Kernel sndProjKernel(const Space& a, const Space& b);
/// kappa: Z ~> X lifted to Z*Y ~> X, ignoring the second coordinate.
Kernel prodMkRight(const Kernel& kappa, const Space& ignored);
/// kappa: Z ~> X lifted to Y*Z ~> X, ignoring the first coordinate.
Kernel prodMkLeft(const Space& ignored, const Kernel& kappa);

/// eta . kappa. Requires kappa.codomain == eta.domain.
Kernel compose(const Kernel& eta, const Kernel& kappa);
/// (kappa || eta)(x,t) = kappa(x) (x) eta(t).
Kernel parallel(const Kernel& kappa, const Kernel& eta);
/// (kappa x eta)(x) = kappa(x) (x) eta(x), computed directly.
Kernel prod(const Kernel& kappa, const Kernel& eta);
/// (kappa || eta) . copy, the defining composite of prod.
Kernel prodViaCopy(const Kernel& kappa, const Kernel& eta);
/// kappa: X ~> Y, eta: X*Y ~> Z; result X ~> Y*Z with
/// weight kappa(x)(y) * eta(x,y)(z).
Kernel compProd(const Kernel& kappa, const Kernel& eta);
/// The same kernel assembled from structural kernels:
/// swap . (eta || id) . assoc . (id || copy) . (id || kappa) . copy.
Kernel compProdViaComposite(const Kernel& kappa, const Kernel& eta);

/// Marginals of a kernel into a product. Throw NotAProductCodomain.
Kernel fst(const Kernel& kappa);
Kernel snd(const Kernel& kappa);

/// Atomwise sum. Requires equal domains and codomains.
Kernel addKernels(const Kernel& a, const Kernel& b);

/// deterministic(f) . kappa without materialising deterministic(f).
Kernel pushforward(const Kernel& kappa, const RandomVariable& f);
/// kappa . deterministic(f) without materialising deterministic(f).
Kernel precompose(const Kernel& kappa, const RandomVariable& f);

/// kappa o_m mu: the measure y -> sum_x mu(x) kappa(x)(y).
Measure measureComp(const Kernel& kappa, const Measure& mu);
/// mu (x)_m kappa: the measure (x,y) -> mu(x) kappa(x)(y) on X*Y.
Measure measureCompProd(const Measure& mu, const Kernel& kappa);
/// Pushforward f_* mu.
Measure map(const Measure& mu, const RandomVariable& f);
/// Product measure mu (x) nu.
Measure productMeasure(const Measure& mu, const Measure& nu);

/// A measure as a kernel from Unit, and back.
Kernel measureAsKernel(const Measure& mu);
Measure kernelAsMeasure(const Kernel& kappa);

}  // namespace mk
