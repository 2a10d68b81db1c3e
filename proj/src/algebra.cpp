#include "mk/algebra.hpp"

#include <string>

#include "mk/error.hpp"

namespace mk {

namespace {

void requireSame(const Space& a, const Space& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorCode::SpaceMismatch,
                std::string(what) + ": " + a.describe() + " vs " + b.describe());
  }
}

}  // namespace

Kernel deterministic(const RandomVariable& f) {
  std::vector<Measure> rows;
  rows.reserve(f.domain().size());
  for (std::size_t x = 0; x < f.domain().size(); ++x) {
    rows.push_back(Measure::dirac(f.codomain(), f(x)));
  }
  return Kernel(f.domain(), f.codomain(), std::move(rows));
}

Kernel identityKernel(const Space& space) {
  return deterministic(RandomVariable::identity(space));
}

Kernel copyKernel(const Space& space) { return deterministic(diagonalMap(space)); }

Kernel discardKernel(const Space& space) {
  return deterministic(RandomVariable::constant(space, Space::unit(), 0));
}

Kernel constantKernel(const Space& domain, const Measure& mu) {
  return Kernel(domain, mu.space(), std::vector<Measure>(domain.size(), mu));
}

Kernel zeroKernel(const Space& domain, const Space& codomain) {
  return constantKernel(domain, Measure::zero(codomain));
}

Kernel swapKernel(const Space& a, const Space& b) { return deterministic(swapMap(a, b)); }

Kernel assocKernel(const Space& a, const Space& b, const Space& c) {
  return deterministic(assocMap(a, b, c));
}

Kernel assocInvKernel(const Space& a, const Space& b, const Space& c) {
  return deterministic(assocInvMap(a, b, c));
}

Kernel fstProjKernel(const Space& a, const Space& b) { return deterministic(fstMap(a, b)); }
Kernel sndProjKernel(const Space& a, const Space& b) { return deterministic(sndMap(a, b)); }

Kernel prodMkRight(const Kernel& kappa, const Space& ignored) {
  return precompose(kappa, fstMap(kappa.domain(), ignored));
}

Kernel prodMkLeft(const Space& ignored, const Kernel& kappa) {
  return precompose(kappa, sndMap(ignored, kappa.domain()));
}

Kernel compose(const Kernel& eta, const Kernel& kappa) {
  requireSame(kappa.codomain(), eta.domain(), "compose");
  const Space& target = eta.codomain();
  std::vector<Measure> rows;
  rows.reserve(kappa.domain().size());
  for (const auto& in : kappa.rows()) {
    std::vector<Scalar> w(target.size());
    for (std::size_t y = 0; y < in.size(); ++y) {
      if (in[y].isZero()) continue;
      const Measure& out = eta.row(y);
      for (std::size_t z = 0; z < w.size(); ++z) {
        if (!out[z].isZero()) w[z] += in[y] * out[z];
      }
    }
    rows.emplace_back(target, std::move(w));
  }
  return Kernel(kappa.domain(), target, std::move(rows));
}

Kernel parallel(const Kernel& kappa, const Kernel& eta) {
  const Space dom = Space::product(kappa.domain(), eta.domain());
  const Space cod = Space::product(kappa.codomain(), eta.codomain());
  std::vector<Measure> rows;
  rows.reserve(dom.size());
  for (std::size_t xt = 0; xt < dom.size(); ++xt) {
    const auto [x, t] = dom.split(xt);
    rows.push_back(productMeasure(kappa.row(x), eta.row(t)));
  }
  return Kernel(dom, cod, std::move(rows));
}

Kernel prod(const Kernel& kappa, const Kernel& eta) {
  requireSame(kappa.domain(), eta.domain(), "prod");
  const Space cod = Space::product(kappa.codomain(), eta.codomain());
  std::vector<Measure> rows;
  rows.reserve(kappa.domain().size());
  for (std::size_t x = 0; x < kappa.domain().size(); ++x) {
    rows.push_back(productMeasure(kappa.row(x), eta.row(x)));
  }
  return Kernel(kappa.domain(), cod, std::move(rows));
}

Kernel prodViaCopy(const Kernel& kappa, const Kernel& eta) {
  requireSame(kappa.domain(), eta.domain(), "prod");
  return compose(parallel(kappa, eta), copyKernel(kappa.domain()));
}

Kernel compProd(const Kernel& kappa, const Kernel& eta) {
  const Space expected = Space::product(kappa.domain(), kappa.codomain());
  if (!(eta.domain() == expected)) {
    throw Error(ErrorCode::SpaceMismatch,
                "compProd: second kernel must start at " + expected.describe() +
                    " but starts at " + eta.domain().describe());
  }
  const Space cod = Space::product(kappa.codomain(), eta.codomain());
  std::vector<Measure> rows;
  rows.reserve(kappa.domain().size());
  for (std::size_t x = 0; x < kappa.domain().size(); ++x) {
    std::vector<Scalar> w(cod.size());
    const Measure& first = kappa.row(x);
    for (std::size_t y = 0; y < first.size(); ++y) {
      if (first[y].isZero()) continue;
      const Measure& second = eta.row(expected.pair(x, y));
      for (std::size_t z = 0; z < second.size(); ++z) {
        if (!second[z].isZero()) w[cod.pair(y, z)] = first[y] * second[z];
      }
    }
    rows.emplace_back(cod, std::move(w));
  }
  return Kernel(kappa.domain(), cod, std::move(rows));
}

Kernel compProdViaComposite(const Kernel& kappa, const Kernel& eta) {
  const Space& x = kappa.domain();
  const Space& y = kappa.codomain();
  const Space xy = Space::product(x, y);
  if (!(eta.domain() == xy)) {
    throw Error(ErrorCode::SpaceMismatch,
                "compProd: second kernel must start at " + xy.describe() +
                    " but starts at " + eta.domain().describe());
  }
  const Space& z = eta.codomain();
  Kernel k = copyKernel(x);
  k = compose(parallel(identityKernel(x), kappa), k);
  k = compose(parallel(identityKernel(x), copyKernel(y)), k);
  k = compose(assocKernel(x, y, y), k);
  k = compose(parallel(eta, identityKernel(y)), k);
  return compose(swapKernel(z, y), k);
}

Kernel fst(const Kernel& kappa) {
  const Space& cod = kappa.codomain();
  return pushforward(kappa, fstMap(cod.left(), cod.right()));
}

Kernel snd(const Kernel& kappa) {
  const Space& cod = kappa.codomain();
  return pushforward(kappa, sndMap(cod.left(), cod.right()));
}

Kernel addKernels(const Kernel& a, const Kernel& b) {
  requireSame(a.domain(), b.domain(), "add (domains)");
  requireSame(a.codomain(), b.codomain(), "add (codomains)");
  std::vector<Measure> rows;
  rows.reserve(a.domain().size());
  for (std::size_t x = 0; x < a.domain().size(); ++x) {
    std::vector<Scalar> w(a.codomain().size());
    for (std::size_t y = 0; y < w.size(); ++y) w[y] = a.at(x, y) + b.at(x, y);
    rows.emplace_back(a.codomain(), std::move(w));
  }
  return Kernel(a.domain(), a.codomain(), std::move(rows));
}

Kernel pushforward(const Kernel& kappa, const RandomVariable& f) {
  requireSame(kappa.codomain(), f.domain(), "pushforward");
  std::vector<Measure> rows;
  rows.reserve(kappa.domain().size());
  for (const auto& r : kappa.rows()) rows.push_back(map(r, f));
  return Kernel(kappa.domain(), f.codomain(), std::move(rows));
}

Kernel precompose(const Kernel& kappa, const RandomVariable& f) {
  requireSame(f.codomain(), kappa.domain(), "precompose");
  std::vector<Measure> rows;
  rows.reserve(f.domain().size());
  for (std::size_t x = 0; x < f.domain().size(); ++x) rows.push_back(kappa.row(f(x)));
  return Kernel(f.domain(), kappa.codomain(), std::move(rows));
}

Measure measureComp(const Kernel& kappa, const Measure& mu) {
  requireSame(mu.space(), kappa.domain(), "measureComp");
  std::vector<Scalar> w(kappa.codomain().size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (mu[x].isZero()) continue;
    const Measure& r = kappa.row(x);
    for (std::size_t y = 0; y < w.size(); ++y) {
      if (!r[y].isZero()) w[y] += mu[x] * r[y];
    }
  }
  return Measure(kappa.codomain(), std::move(w));
}

Measure measureCompProd(const Measure& mu, const Kernel& kappa) {
  requireSame(mu.space(), kappa.domain(), "measureCompProd");
  const Space joint = Space::product(mu.space(), kappa.codomain());
  std::vector<Scalar> w(joint.size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (mu[x].isZero()) continue;
    const Measure& r = kappa.row(x);
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (!r[y].isZero()) w[joint.pair(x, y)] = mu[x] * r[y];
    }
  }
  return Measure(joint, std::move(w));
}

Measure map(const Measure& mu, const RandomVariable& f) {
  requireSame(mu.space(), f.domain(), "map");
  std::vector<Scalar> w(f.codomain().size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (!mu[x].isZero()) w[f(x)] += mu[x];
  }
  return Measure(f.codomain(), std::move(w));
}

Measure productMeasure(const Measure& mu, const Measure& nu) {
  const Space s = Space::product(mu.space(), nu.space());
  std::vector<Scalar> w(s.size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (mu[x].isZero()) continue;
    for (std::size_t y = 0; y < nu.size(); ++y) {
      if (!nu[y].isZero()) w[s.pair(x, y)] = mu[x] * nu[y];
    }
  }
  return Measure(s, std::move(w));
}

Kernel measureAsKernel(const Measure& mu) { return constantKernel(Space::unit(), mu); }

Measure kernelAsMeasure(const Kernel& kappa) {
  requireSame(kappa.domain(), Space::unit(), "kernelAsMeasure");
  return kappa.row(0);
}

}  // namespace mk
