#include "mk/analytics.hpp"

#include <cmath>
#include <map>
#include <string>

#include "mk/algebra.hpp"
#include "mk/conditioning.hpp"
#include "mk/error.hpp"

namespace mk {

namespace {

void requireSameSpace(const Measure& mu, const Measure& nu, const char* what) {
  if (!(mu.space() == nu.space())) {
    throw Error(ErrorCode::SpaceMismatch,
                std::string(what) + ": " + mu.space().describe() + " vs " + nu.space().describe());
  }
}

double xlogx(const Scalar& p) {
  if (p.isZero()) return 0.0;
  const double v = p.toDouble();
  return v * std::log(v);
}

// Entropy of a row without the probability check.
double rowEntropy(const Measure& mu) {
  double h = 0.0;
  for (const auto& w : mu.weights()) h -= xlogx(w);
  return h;
}

ExtReal klUnchecked(const Measure& mu, const Measure& nu) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!mu[i].isZero() && nu[i].isZero()) return ExtReal::inf();
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i].isZero()) continue;
    const double ratio = (mu[i] / nu[i]).toDouble();
    sum += mu[i].toDouble() * std::log(ratio);
  }
  return ExtReal::of(sum);
}

std::vector<const Measure*> scopeRows(const SubgaussianScope& scope, const Space& space) {
  std::vector<const Measure*> rows;
  if (const auto* plain = std::get_if<PlainScope>(&scope)) {
    if (!(plain->mu.space() == space)) {
      throw Error(ErrorCode::SpaceMismatch, "variable on " + space.describe() +
                                                ", measure on " + plain->mu.space().describe());
    }
    plain->mu.requireProbability("sub-Gaussian scope measure");
    rows.push_back(&plain->mu);
    return rows;
  }
  const auto& ks = std::get<KernelScope>(scope);
  if (!(ks.kappa.codomain() == space)) {
    throw Error(ErrorCode::SpaceMismatch, "variable on " + space.describe() +
                                              ", kernel into " + ks.kappa.codomain().describe());
  }
  if (!(ks.nu.space() == ks.kappa.domain())) {
    throw Error(ErrorCode::SpaceMismatch, "scope measure on " + ks.nu.space().describe() +
                                              ", kernel from " + ks.kappa.domain().describe());
  }
  for (std::size_t t = 0; t < ks.nu.size(); ++t) {
    if (ks.nu[t].isZero()) continue;
    if (!ks.kappa.row(t).isProbability()) {
      throw Error(ErrorCode::NotMarkov, "sub-Gaussian scope kernel row " +
                                            ks.kappa.domain().atomLabel(t) + " has total " +
                                            ks.kappa.row(t).total().toString());
    }
    rows.push_back(&ks.kappa.row(t));
  }
  return rows;
}

double mgfUnchecked(const RealRV& x, const Measure& mu, const Rational& t) {
  double sum = 0.0;
  for (std::size_t w = 0; w < mu.size(); ++w) {
    if (mu[w].isZero()) continue;
    const Rational exponent = t * x[w];
    sum += mu[w].toDouble() * std::exp(exponent.get_d());
  }
  return sum;
}

// Relative slack for the MGF comparison; absorbs rounding of the sum at t
// near zero where both sides are 1.
constexpr double kMgfRelativeSlack = 1e-12;

}  // namespace

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.infinite || b.infinite) return ExtReal::inf();
  return ExtReal::of(a.value + b.value);
}

double entropy(const Measure& mu) {
  mu.requireProbability("entropy argument");
  return rowEntropy(mu);
}

double kernelEntropy(const Kernel& kappa, const Measure& mu) {
  kappa.requireMarkov("kernelEntropy kernel");
  mu.requireProbability("kernelEntropy measure");
  if (!(mu.space() == kappa.domain())) {
    throw Error(ErrorCode::SpaceMismatch, "kernelEntropy: measure on " +
                                              mu.space().describe() + ", kernel from " +
                                              kappa.domain().describe());
  }
  double h = 0.0;
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (mu[x].isZero()) continue;
    h += mu[x].toDouble() * rowEntropy(kappa.row(x));
  }
  return h;
}

double condEntropyKernelForm(const RandomVariable& x, const RandomVariable& y,
                             const Measure& mu) {
  return kernelEntropy(condDistrib(x, y, mu), map(mu, y));
}

double condEntropy(const RandomVariable& x, const RandomVariable& y, const Measure& mu) {
  mu.requireProbability("condEntropy measure");
  const Measure joint = map(mu, pairMaps(y, x));  // (y, x)
  const Measure py = map(mu, y);
  const Space& s = joint.space();
  double h = 0.0;
  for (std::size_t yi = 0; yi < py.size(); ++yi) {
    if (py[yi].isZero()) continue;
    for (std::size_t xi = 0; xi < x.codomain().size(); ++xi) {
      const Scalar& pxy = joint[s.pair(yi, xi)];
      if (pxy.isZero()) continue;
      const double cond = (pxy / py[yi]).toDouble();
      h -= py[yi].toDouble() * cond * std::log(cond);
    }
  }
  const double viaKernel = condEntropyKernelForm(x, y, mu);
  if (std::abs(h - viaKernel) > kIdentityTolerance) {
    throw Error(ErrorCode::IdentityViolation,
                "direct H(X|Y) = " + std::to_string(h) + " but kernel form gives " +
                    std::to_string(viaKernel));
  }
  return h;
}

ExtReal klDiv(const Measure& mu, const Measure& nu) {
  requireSameSpace(mu, nu, "klDiv");
  mu.requireProbability("klDiv first argument");
  nu.requireProbability("klDiv second argument");
  return klUnchecked(mu, nu);
}

ExtReal condKL(const Kernel& kappa, const Kernel& eta, const Measure& mu) {
  if (!(kappa.domain() == eta.domain()) || !(kappa.codomain() == eta.codomain()) ||
      !(mu.space() == kappa.domain())) {
    throw Error(ErrorCode::SpaceMismatch, "condKL: kernels and measure must share spaces");
  }
  kappa.requireMarkov("condKL first kernel");
  eta.requireMarkov("condKL second kernel");
  mu.requireProbability("condKL measure");
  ExtReal sum;
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (mu[x].isZero()) continue;
    const ExtReal row = klUnchecked(kappa.row(x), eta.row(x));
    if (row.infinite) return ExtReal::inf();
    sum.value += mu[x].toDouble() * row.value;
  }
  return sum;
}

ExtReal renyiDiv(const Rational& alpha, const Measure& mu, const Measure& nu) {
  if (sgn(alpha) <= 0 || alpha >= 1) {
    throw Error(ErrorCode::AlphaOutOfRange,
                "Renyi order " + rationalToString(alpha) + " outside (0, 1)");
  }
  requireSameSpace(mu, nu, "renyiDiv");
  mu.requireProbability("renyiDiv first argument");
  nu.requireProbability("renyiDiv second argument");
  const double a = alpha.get_d();
  bool overlap = false;
  double integral = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Scalar reference = mu[i] + nu[i];
    if (mu[i].isZero() || nu[i].isZero()) continue;
    overlap = true;
    const double p = (mu[i] / reference).toDouble();
    const double q = (nu[i] / reference).toDouble();
    integral += reference.toDouble() * std::pow(p, a) * std::pow(q, 1.0 - a);
  }
  if (!overlap) return ExtReal::inf();
  return ExtReal::of(std::log(integral) / (a - 1.0));
}

KLChainReport klChainRule(const Measure& mu, const Measure& nu, const Kernel& kappa,
                          const Kernel& eta) {
  kappa.requireMarkov("klChainRule first kernel");
  eta.requireMarkov("klChainRule second kernel");
  KLChainReport r;
  r.joint = klDiv(measureCompProd(mu, kappa), measureCompProd(nu, eta));
  r.marginal = klDiv(mu, nu);
  r.conditional = condKL(kappa, eta, mu);
  r.compProdForm = klDiv(measureCompProd(mu, kappa), measureCompProd(mu, eta));
  r.integralFormHolds = closeTo(r.joint, r.marginal + r.conditional, kIdentityTolerance);
  r.compProdFormHolds = closeTo(r.joint, r.marginal + r.compProdForm, kIdentityTolerance);
  return r;
}

ExtReal Divergence::operator()(const Measure& mu, const Measure& nu) const {
  return kind == Kind::KL ? klDiv(mu, nu) : renyiDiv(alpha, mu, nu);
}

std::string Divergence::name() const {
  return kind == Kind::KL ? "kl" : "renyi(" + rationalToString(alpha) + ")";
}

DataProcessingReport dataProcessing(const Divergence& d, const Kernel& kappa, const Kernel& eta,
                                    const Measure& mu, const Measure& nu) {
  kappa.requireMarkov("dataProcessing kernel");
  eta.requireMarkov("dataProcessing second kernel");
  DataProcessingReport r;
  r.pushed = d(measureComp(kappa, mu), measureComp(kappa, nu));
  r.original = d(mu, nu);
  r.dataProcessingHolds = lessOrClose(r.pushed, r.original, kIdentityTolerance);
  r.marginals = d(measureComp(kappa, mu), measureComp(eta, mu));
  r.joints = d(measureCompProd(mu, kappa), measureCompProd(mu, eta));
  r.conditioningHolds = lessOrClose(r.marginals, r.joints, kIdentityTolerance);
  return r;
}

double mgf(const RealRV& x, const Measure& mu, const Rational& t) {
  if (!(x.domain() == mu.space())) {
    throw Error(ErrorCode::SpaceMismatch, "mgf: variable on " + x.domain().describe() +
                                              ", measure on " + mu.space().describe());
  }
  mu.requireProbability("mgf measure");
  return mgfUnchecked(x, mu, t);
}

SubgaussianCertificate certifyBoundedRange(const RealRV& x, const SubgaussianScope& scope) {
  const auto rows = scopeRows(scope, x.domain());
  for (const Measure* row : rows) {
    Rational mean = 0;
    for (std::size_t w = 0; w < row->size(); ++w) {
      if (!(*row)[w].isZero()) mean += (*row)[w].rational() * x[w];
    }
    if (sgn(mean) != 0) {
      throw Error(ErrorCode::NonzeroMean, "mean " + rationalToString(mean) + " under a scope row");
    }
  }
  const Rational width = x.max() - x.min();
  SubgaussianCertificate cert{x, Rational(width * width / 4), scope,
                              SubgaussianCertificate::Method::BoundedRange, std::nullopt, true};
  cert.constant.canonicalize();
  return cert;
}

std::optional<Rational> firstGridViolation(const RealRV& x, const SubgaussianScope& scope,
                                           const Rational& c, const GridSpec& grid) {
  if (sgn(grid.step) <= 0 || sgn(grid.halfWidth) < 0) {
    throw Error(ErrorCode::InvalidArgument, "grid needs step > 0 and T >= 0");
  }
  const auto rows = scopeRows(scope, x.domain());
  for (Rational t = -grid.halfWidth; t <= grid.halfWidth; t += grid.step) {
    const Rational exponent = c * t * t / 2;
    const double bound = std::exp(exponent.get_d());
    for (const Measure* row : rows) {
      if (mgfUnchecked(x, *row, t) > bound * (1.0 + kMgfRelativeSlack)) return t;
    }
  }
  return std::nullopt;
}

SubgaussianCertificate certifyOnGrid(const RealRV& x, const SubgaussianScope& scope,
                                     const Rational& c, const GridSpec& grid) {
  if (sgn(c) < 0) throw Error(ErrorCode::InvalidArgument, "negative sub-Gaussian constant");
  if (const auto t = firstGridViolation(x, scope, c, grid)) {
    throw Error(ErrorCode::GridViolation, "mgf exceeds exp(c t^2 / 2) at t = " +
                                              rationalToString(*t));
  }
  return {x, c, scope, SubgaussianCertificate::Method::GridCheck, grid, true};
}

SubgaussianCertificate subgaussianAddCompProd(const SubgaussianCertificate& certX,
                                              const SubgaussianCertificate& certY,
                                              const GridSpec& grid) {
  if (!certX.verified || !certY.verified) {
    throw Error(ErrorCode::NotCertified, "both input certificates must be verified");
  }
  const auto* sx = std::get_if<KernelScope>(&certX.scope);
  const auto* sy = std::get_if<KernelScope>(&certY.scope);
  if (sx == nullptr || sy == nullptr) {
    throw Error(ErrorCode::ScopeMismatch, "both certificates need kernel scopes");
  }
  const Space expected = Space::product(sx->kappa.domain(), sx->kappa.codomain());
  if (!(sy->kappa.domain() == expected)) {
    throw Error(ErrorCode::ScopeMismatch, "second kernel must start at " + expected.describe() +
                                              ", starts at " + sy->kappa.domain().describe());
  }
  if (!(sy->nu == measureCompProd(sx->nu, sx->kappa))) {
    throw Error(ErrorCode::ScopeMismatch,
                "second scope measure must be the composition-product of the first scope");
  }
  const RealRV sum = sumOnProduct(certX.variable, certY.variable);
  const Rational c = certX.constant + certY.constant;
  const KernelScope combined{compProd(sx->kappa, sy->kappa), sx->nu};
  return certifyOnGrid(sum, combined, c, grid);
}

HoeffdingReport hoeffdingCheck(const SubgaussianCertificate& cert, std::size_t n,
                               const Rational& t) {
  if (!cert.verified) throw Error(ErrorCode::NotCertified, "certificate is not verified");
  const auto* plain = std::get_if<PlainScope>(&cert.scope);
  if (plain == nullptr) {
    throw Error(ErrorCode::NotCertified, "Hoeffding needs a certificate over a plain measure");
  }
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (sgn(t) <= 0) throw Error(ErrorCode::InvalidArgument, "t must be positive");

  std::map<Rational, Rational> single;
  for (std::size_t w = 0; w < plain->mu.size(); ++w) {
    if (!plain->mu[w].isZero()) single[cert.variable[w]] += plain->mu[w].rational();
  }
  std::map<Rational, Rational> dist{{Rational(0), Rational(1)}};
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Rational, Rational> next;
    for (const auto& [s, p] : dist) {
      for (const auto& [v, q] : single) next[Rational(s + v)] += p * q;
    }
    dist = std::move(next);
  }
  HoeffdingReport r;
  r.exactTail = 0;
  for (auto it = dist.lower_bound(t); it != dist.end(); ++it) r.exactTail += it->second;
  if (sgn(cert.constant) == 0) {
    r.bound = 0.0;
  } else {
    const Rational exponent = t * t / (2 * static_cast<unsigned long>(n) * cert.constant);
    r.bound = std::exp(-exponent.get_d());
  }
  r.holds = r.exactTail <= Rational(r.bound);
  return r;
}

}  // namespace mk
