#include "mk/disintegration.hpp"

#include <string>

#include "mk/algebra.hpp"
#include "mk/error.hpp"

namespace mk {

namespace {

void requireSameShape(const Kernel& a, const Kernel& b, const char* what) {
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain())) {
    throw Error(ErrorCode::SpaceMismatch,
                std::string(what) + ": " + a.domain().describe() + " -> " +
                    a.codomain().describe() + " vs " + b.domain().describe() + " -> " +
                    b.codomain().describe());
  }
}

}  // namespace

DensityTable::DensityTable(Space space, std::vector<Scalar> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(values_.size()) +
                                                  " density values for " +
                                                  std::to_string(space_.size()) + " atoms");
  }
  for (const auto& v : values_) {
    if (v.isInfinite()) throw Error(ErrorCode::InfiniteWeight, "infinite density value");
  }
}

DensityTable DensityTable::constant(const Space& space, const Scalar& value) {
  return DensityTable(space, std::vector<Scalar>(space.size(), value));
}

bool isCondKernel(const Kernel& kappa, const Kernel& eta) {
  const Space& cod = kappa.codomain();
  if (!cod.isProduct()) {
    throw Error(ErrorCode::NotAProductCodomain,
                "isCondKernel: " + cod.describe() + " is not a product");
  }
  const Space expected = Space::product(kappa.domain(), cod.left());
  if (!(eta.domain() == expected) || !(eta.codomain() == cod.right())) {
    throw Error(ErrorCode::SpaceMismatch, "isCondKernel: expected a kernel " +
                                              expected.describe() + " -> " +
                                              cod.right().describe() + ", got " +
                                              eta.domain().describe() + " -> " +
                                              eta.codomain().describe());
  }
  return compProd(fst(kappa), eta) == kappa;
}

Kernel condKernel(const Kernel& kappa) {
  const Space& cod = kappa.codomain();
  if (!cod.isProduct()) {
    throw Error(ErrorCode::NotAProductCodomain,
                "condKernel: " + cod.describe() + " is not a product");
  }
  const Space& y = cod.left();
  const Space& z = cod.right();
  const Space dom = Space::product(kappa.domain(), y);
  std::vector<Measure> rows;
  rows.reserve(dom.size());
  for (std::size_t xy = 0; xy < dom.size(); ++xy) {
    const auto [x, yi] = dom.split(xy);
    const Measure& joint = kappa.row(x);
    Scalar mass;
    for (std::size_t zi = 0; zi < z.size(); ++zi) mass += joint[cod.pair(yi, zi)];
    if (mass.isZero()) {
      if (z.size() == 0) {
        throw Error(ErrorCode::EmptyCodomainZ,
                    "condKernel needs a Markov row into the empty space " + z.describe());
      }
      rows.push_back(Measure::uniform(z));
      continue;
    }
    std::vector<Scalar> w(z.size());
    for (std::size_t zi = 0; zi < z.size(); ++zi) w[zi] = joint[cod.pair(yi, zi)] / mass;
    rows.emplace_back(z, std::move(w));
  }
  return Kernel(dom, z, std::move(rows));
}

Kernel condKernelMeasure(const Measure& rho) {
  const Kernel cond = condKernel(measureAsKernel(rho));
  return compose(cond, deterministic(leftUnitorInvMap(rho.space().left())));
}

Kernel withDensity(const Kernel& eta, const DensityTable& f) {
  const Space expected = Space::product(eta.domain(), eta.codomain());
  if (!(f.space() == expected)) {
    throw Error(ErrorCode::SpaceMismatch, "withDensity: density on " +
                                              f.space().describe() + ", expected " +
                                              expected.describe());
  }
  std::vector<Measure> rows;
  rows.reserve(eta.domain().size());
  for (std::size_t x = 0; x < eta.domain().size(); ++x) {
    std::vector<Scalar> w(eta.codomain().size());
    for (std::size_t y = 0; y < w.size(); ++y) {
      const Scalar& base = eta.at(x, y);
      if (!base.isZero()) w[y] = f[expected.pair(x, y)] * base;
    }
    rows.emplace_back(eta.codomain(), std::move(w));
  }
  return Kernel(eta.domain(), eta.codomain(), std::move(rows));
}

DensityTable rnDeriv(const Kernel& kappa, const Kernel& eta) {
  requireSameShape(kappa, eta, "rnDeriv");
  const Space s = Space::product(kappa.domain(), kappa.codomain());
  std::vector<Scalar> v(s.size());
  for (std::size_t x = 0; x < kappa.domain().size(); ++x) {
    for (std::size_t y = 0; y < kappa.codomain().size(); ++y) {
      const Scalar& ref = eta.at(x, y);
      if (!ref.isZero()) v[s.pair(x, y)] = kappa.at(x, y) / ref;
    }
  }
  return DensityTable(s, std::move(v));
}

Kernel singularPart(const Kernel& kappa, const Kernel& eta) {
  requireSameShape(kappa, eta, "singularPart");
  std::vector<Measure> rows;
  rows.reserve(kappa.domain().size());
  for (std::size_t x = 0; x < kappa.domain().size(); ++x) {
    std::vector<Scalar> w(kappa.codomain().size());
    for (std::size_t y = 0; y < w.size(); ++y) {
      if (eta.at(x, y).isZero()) w[y] = kappa.at(x, y);
    }
    rows.emplace_back(kappa.codomain(), std::move(w));
  }
  return Kernel(kappa.domain(), kappa.codomain(), std::move(rows));
}

RNDecomposition rnDecompose(const Kernel& kappa, const Kernel& eta) {
  return {rnDeriv(kappa, eta), singularPart(kappa, eta)};
}

bool absolutelyContinuous(const Kernel& kappa, const Kernel& eta) {
  requireSameShape(kappa, eta, "absolutelyContinuous");
  for (std::size_t x = 0; x < kappa.domain().size(); ++x) {
    for (std::size_t y = 0; y < kappa.codomain().size(); ++y) {
      if (eta.at(x, y).isZero() && !kappa.at(x, y).isZero()) return false;
    }
  }
  return true;
}

std::vector<Scalar> rnDeriv(const Measure& mu, const Measure& nu) {
  if (!(mu.space() == nu.space())) {
    throw Error(ErrorCode::SpaceMismatch,
                "rnDeriv: " + mu.space().describe() + " vs " + nu.space().describe());
  }
  std::vector<Scalar> v(mu.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!nu[i].isZero()) v[i] = mu[i] / nu[i];
  }
  return v;
}

}  // namespace mk
