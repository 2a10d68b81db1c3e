#include "mk/conditioning.hpp"

#include <string>

#include "mk/algebra.hpp"
#include "mk/disintegration.hpp"
#include "mk/error.hpp"

namespace mk {

namespace {

void requireOn(const Space& a, const Space& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorCode::SpaceMismatch,
                std::string(what) + ": " + a.describe() + " vs " + b.describe());
  }
}

}  // namespace

Kernel condDistrib(const RandomVariable& y, const RandomVariable& x, const Measure& mu) {
  requireOn(x.domain(), mu.space(), "condDistrib");
  requireOn(y.domain(), mu.space(), "condDistrib");
  return condKernelMeasure(map(mu, pairMaps(x, y)));
}

Kernel condExpKernel(const Measure& mu, const PartitionSigma& g) {
  requireOn(g.space(), mu.space(), "condExpKernel");
  const Space& omega = mu.space();
  std::vector<Measure> blockRows;
  blockRows.reserve(g.blocks().size());
  for (const auto& block : g.blocks()) {
    const Scalar mass = mu.massOf(block);
    std::vector<Scalar> w(omega.size());
    if (mass.isZero()) {
      blockRows.push_back(Measure::uniform(omega));
      continue;
    }
    for (std::size_t a : block) w[a] = mu[a] / mass;
    blockRows.emplace_back(omega, std::move(w));
  }
  std::vector<Measure> rows;
  rows.reserve(omega.size());
  for (std::size_t w = 0; w < omega.size(); ++w) rows.push_back(blockRows[g.blockOf(w)]);
  return Kernel(omega, omega, std::move(rows));
}

RealRV condExp(const RealRV& f, const Measure& mu, const PartitionSigma& g) {
  requireOn(f.domain(), mu.space(), "condExp");
  const Kernel k = condExpKernel(mu, g);
  std::vector<Rational> values(mu.size());
  for (std::size_t w = 0; w < values.size(); ++w) {
    Rational sum = 0;
    const Measure& row = k.row(w);
    for (std::size_t y = 0; y < row.size(); ++y) {
      if (!row[y].isZero()) sum += row[y].rational() * f[y];
    }
    values[w] = sum;
  }
  return RealRV(mu.space(), std::move(values));
}

bool kernelIndepFun(const RandomVariable& x, const RandomVariable& y, const Kernel& kappa,
                    const Measure& nu) {
  requireOn(x.domain(), kappa.codomain(), "kernelIndepFun");
  requireOn(y.domain(), kappa.codomain(), "kernelIndepFun");
  requireOn(nu.space(), kappa.domain(), "kernelIndepFun");
  const RandomVariable xy = pairMaps(x, y);
  const Space& joint = xy.codomain();
  for (std::size_t t = 0; t < nu.size(); ++t) {
    if (nu[t].isZero()) continue;
    const Measure& row = kappa.row(t);
    const Measure px = map(row, x);
    const Measure py = map(row, y);
    const Measure pxy = map(row, xy);
    for (std::size_t a = 0; a < px.size(); ++a) {
      for (std::size_t b = 0; b < py.size(); ++b) {
        if (!(pxy[joint.pair(a, b)] == px[a] * py[b])) return false;
      }
    }
  }
  return true;
}

bool indepFun(const RandomVariable& x, const RandomVariable& y, const Measure& mu) {
  mu.requireProbability("indepFun measure");
  return kernelIndepFun(x, y, constantKernel(Space::unit(), mu),
                        Measure::dirac(Space::unit(), 0));
}

bool condIndepFun(const RandomVariable& x, const RandomVariable& y, const PartitionSigma& g,
                  const Measure& mu) {
  requireOn(g.space(), mu.space(), "condIndepFun");
  return kernelIndepFun(x, y, condExpKernel(mu, g), mu);
}

CondIndepEquivalence condIndepIffCondDistrib(const RandomVariable& x, const RandomVariable& y,
                                             const RandomVariable& z, const Measure& mu) {
  CondIndepEquivalence out{};
  out.condIndep = condIndepFun(y, x, PartitionSigma::generatedBy(z), mu);

  const RandomVariable zy = pairMaps(z, y);
  const Kernel full = condDistrib(x, zy, mu);
  const Kernel lifted = prodMkRight(condDistrib(x, z, mu), y.codomain());
  const Measure weights = map(mu, zy);
  out.condDistribFactorises = true;
  for (std::size_t a = 0; a < weights.size(); ++a) {
    if (weights[a].isZero()) continue;
    if (!(full.row(a) == lifted.row(a))) {
      out.condDistribFactorises = false;
      break;
    }
  }
  return out;
}

}  // namespace mk
