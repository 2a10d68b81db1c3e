#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "mk/measure.hpp"
#include "mk/random_variable.hpp"

// Information quantities and sub-Gaussian certificates. Exact inputs,
// float64 outputs, natural logarithms. Whether a divergence is infinite is
// decided in exact arithmetic before any conversion to floating point.
namespace mk {

/// Identity checks on float results use this absolute tolerance.
inline constexpr double kIdentityTolerance = 1e-9;

struct ExtReal {
  double value = 0.0;
  bool infinite = false;

  static ExtReal inf() { return {0.0, true}; }
  static ExtReal of(double v) { return {v, false}; }

  /// a <= b + slack, with +inf the largest element.
  friend bool lessOrClose(const ExtReal& a, const ExtReal& b, double slack) {
    if (b.infinite) return true;
    if (a.infinite) return false;
    return a.value <= b.value + slack;
  }
  /// Equal infinities, or finite values within `tolerance`.
  friend bool closeTo(const ExtReal& a, const ExtReal& b, double tolerance) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return std::abs(a.value - b.value) <= tolerance;
  }
};

ExtReal operator+(const ExtReal& a, const ExtReal& b);

double entropy(const Measure& mu);
/// H_k(kappa | mu) = sum_x mu(x) H(kappa(x)).
double kernelEntropy(const Kernel& kappa, const Measure& mu);
/// H(X | Y) by the direct double sum. Also evaluates
/// kernelEntropy(condDistrib(X, Y, mu), map(mu, Y)) and throws
/// IdentityViolation if the two differ by more than kIdentityTolerance.
double condEntropy(const RandomVariable& x, const RandomVariable& y, const Measure& mu);
double condEntropyKernelForm(const RandomVariable& x, const RandomVariable& y,
                             const Measure& mu);

ExtReal klDiv(const Measure& mu, const Measure& nu);
/// KL(kappa, eta | mu) = sum_x mu(x) KL(kappa(x), eta(x)).
ExtReal condKL(const Kernel& kappa, const Kernel& eta, const Measure& mu);
/// Renyi divergence of order alpha in (0, 1). Throws AlphaOutOfRange.
ExtReal renyiDiv(const Rational& alpha, const Measure& mu, const Measure& nu);

struct KLChainReport {
  ExtReal joint;         // KL(mu (x) kappa, nu (x) eta)
  ExtReal marginal;      // KL(mu, nu)
  ExtReal conditional;   // KL(kappa, eta | mu)
  ExtReal compProdForm;  // KL(mu (x) kappa, mu (x) eta)
  bool integralFormHolds;
  bool compProdFormHolds;
};

KLChainReport klChainRule(const Measure& mu, const Measure& nu, const Kernel& kappa,
                          const Kernel& eta);

/// KL, or Renyi of a fixed order.
struct Divergence {
  enum class Kind { KL, Renyi };
  Kind kind = Kind::KL;
  Rational alpha = 0;

  static Divergence kl() { return {}; }
  static Divergence renyi(const Rational& a) { return {Kind::Renyi, a}; }
  ExtReal operator()(const Measure& mu, const Measure& nu) const;
  std::string name() const;
};

struct DataProcessingReport {
  ExtReal pushed;       // D(kappa o mu, kappa o nu)
  ExtReal original;     // D(mu, nu)
  bool dataProcessingHolds;
  ExtReal marginals;    // D(kappa o mu, eta o mu)
  ExtReal joints;       // D(mu (x) kappa, mu (x) eta)
  bool conditioningHolds;
};

/// Data-processing through kappa for (mu, nu), and "conditioning increases
/// divergence" for the kernel pair (kappa, eta) under mu. Comparisons allow
/// kIdentityTolerance slack.
DataProcessingReport dataProcessing(const Divergence& d, const Kernel& kappa, const Kernel& eta,
                                    const Measure& mu, const Measure& nu);

/// sum_w mu(w) exp(t X(w)).
double mgf(const RealRV& x, const Measure& mu, const Rational& t);

struct PlainScope {
  Measure mu;
};
/// X is sub-Gaussian under kappa(t) for nu-almost every t.
struct KernelScope {
  Kernel kappa;
  Measure nu;
};
using SubgaussianScope = std::variant<PlainScope, KernelScope>;

struct GridSpec {
  Rational halfWidth{10};
  Rational step{1, 100};
};

struct SubgaussianCertificate {
  enum class Method { BoundedRange, GridCheck };

  RealRV variable;
  Rational constant;
  SubgaussianScope scope;
  Method method;
  /// Set for GridCheck: the certificate covers only these points.
  std::optional<GridSpec> grid;
  bool verified = false;
  /// Integrability of exp(tX) is automatic for finite sums.
  bool integrabilityVacuous = true;
};

/// Hoeffding's lemma route: c = (b - a)^2 / 4 over the value range [a, b].
/// Throws NonzeroMean unless every in-scope row gives X mean zero exactly.
SubgaussianCertificate certifyBoundedRange(const RealRV& x, const SubgaussianScope& scope);

/// Checks mgf(t) <= exp(c t^2 / 2) at t = -T, -T + step, ..., up to T.
/// Throws GridViolation naming the first failing t.
SubgaussianCertificate certifyOnGrid(const RealRV& x, const SubgaussianScope& scope,
                                     const Rational& c, const GridSpec& grid);

/// First grid point where the MGF bound fails, if any.
std::optional<Rational> firstGridViolation(const RealRV& x, const SubgaussianScope& scope,
                                           const Rational& c, const GridSpec& grid);

/// X sub-Gaussian for (kappa, nu) and Y for (eta, nu (x)_m kappa) give
/// X + Y sub-Gaussian with cX + cY for (kappa (x) eta, nu); the result is
/// verified on `grid`. Throws NotCertified, ScopeMismatch, GridViolation.
SubgaussianCertificate subgaussianAddCompProd(const SubgaussianCertificate& certX,
                                              const SubgaussianCertificate& certY,
                                              const GridSpec& grid = {});

struct HoeffdingReport {
  Rational exactTail;  // P(X_1 + ... + X_n >= t), i.i.d. copies
  double bound;        // exp(-t^2 / (2 n c))
  bool holds;
};

/// Throws NotCertified unless `cert` is verified over a plain measure, and
/// InvalidArgument unless n >= 1 and t > 0.
HoeffdingReport hoeffdingCheck(const SubgaussianCertificate& cert, std::size_t n,
                               const Rational& t);

}  // namespace mk
