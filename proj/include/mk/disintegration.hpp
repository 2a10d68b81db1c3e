#pragma once

#include <vector>

#include "mk/measure.hpp"

namespace mk {

/// A finite nonnegative value per atom of a space; for kernel densities the
/// space is Product(domain, codomain) of the kernels involved.
class DensityTable {
 public:
  DensityTable(Space space, std::vector<Scalar> values);

  static DensityTable constant(const Space& space, const Scalar& value);

  const Space& space() const noexcept { return space_; }
  const std::vector<Scalar>& values() const noexcept { return values_; }
  const Scalar& operator[](std::size_t atom) const { return values_[atom]; }

  friend bool operator==(const DensityTable& a, const DensityTable& b) = default;

 private:
  Space space_;
  std::vector<Scalar> values_;
};

struct RNDecomposition {
  DensityTable density;
  Kernel singular;
};

/// True iff fst(kappa) (x) eta == kappa exactly.
bool isCondKernel(const Kernel& kappa, const Kernel& eta);

/// Conditional kernel of kappa: X ~> Y*Z, a Markov kernel X*Y ~> Z with
/// fst(kappa) (x) result == kappa. On atoms (x,y) where fst(kappa)(x)(y) is
/// zero the row is uniform over Z. Throws EmptyCodomainZ when such a row
/// is needed and Z is empty.
Kernel condKernel(const Kernel& kappa);

/// condKernel for a measure rho on Y*Z, returned directly as Y ~> Z.
Kernel condKernelMeasure(const Measure& rho);

/// (f . eta)(x)(y) = f(x,y) eta(x)(y).
Kernel withDensity(const Kernel& eta, const DensityTable& f);

/// Kernel Radon-Nikodym derivative: kappa(x)(y) / eta(x)(y) where eta is
/// positive, zero elsewhere.
DensityTable rnDeriv(const Kernel& kappa, const Kernel& eta);
/// The part of kappa living on eta-null atoms.
Kernel singularPart(const Kernel& kappa, const Kernel& eta);
RNDecomposition rnDecompose(const Kernel& kappa, const Kernel& eta);

/// kappa(x) << eta(x) for every x.
bool absolutelyContinuous(const Kernel& kappa, const Kernel& eta);

/// Measure-level derivative d mu / d nu as a function on the atoms (zero
/// where nu vanishes).
std::vector<Scalar> rnDeriv(const Measure& mu, const Measure& nu);

}  // namespace mk
