// Acceptance suite: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "mk/algebra.hpp"
#include "mk/analytics.hpp"
#include "mk/bayes.hpp"
#include "mk/conditioning.hpp"
#include "mk/disintegration.hpp"
#include "mk/error.hpp"
#include "mk/frontend/cli.hpp"
#include "mk/frontend/document.hpp"
#include "mk/frontend/expr.hpp"
#include "mk/frontend/laws.hpp"
#include "mk/sequential.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mk;

namespace {

const std::filesystem::path kData = MK_TEST_DATA_DIR;

// Collects the first failed expectation of a criterion.
class Verdict {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t checks() const { return checks_; }

 private:
  std::string failure_;
  std::size_t checks_ = 0;
};

struct Criterion {
  std::string name;
  double limitSeconds;
  std::function<void(Verdict&)> body;
};

const Space W = Space::base("Weather", {"good", "bad"});
const Space Sign = Space::base("Sign", {"minus", "plus"});

Kernel weather() {
  return Kernel(W, W, {Measure(W, {Scalar(4, 5), Scalar(1, 5)}),
                       Measure(W, {Scalar(2, 5), Scalar(3, 5)})});
}

std::string readFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string cliOut(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = frontend::runCli(args, out, err);
  return out.str();
}

void weatherFixture(Verdict& v) {
  const Kernel kk = compose(weather(), weather());
  v.expect(kk.at(0, 0) == Scalar(18, 25), "comp(k,k)(good)(good) = " + kk.at(0, 0).toString());
  const frontend::Document doc = frontend::parseDocument(readFile(kData / "weather.kd"));
  const auto value = frontend::evalExpr(frontend::parseExpr("comp(k,k)", doc), doc);
  v.expect(std::get<Kernel>(value).at(0, 0) == Scalar(18, 25), "frontend comp(k,k)");
}

void algebraLaws(Verdict& v) {
  testing::Gen g(1001);
  for (int i = 0; i < 1000; ++i) {
    const Space a = g.space("A", 1, 5), b = g.space("B", 1, 5), c = g.space("C", 1, 5),
                d = g.space("D", 1, 5);
    const Kernel k = g.finiteKernel(a, b, 0.3);
    const Kernel e = g.finiteKernel(b, c, 0.3);
    const Kernel x = g.finiteKernel(c, d, 0.3);
    const std::string at = " (case " + std::to_string(i) + ")";
    v.expect(frontend::associativityHolds(x, e, k), "associativity" + at);
    v.expect(frontend::unitLawsHold(k), "unit laws" + at);
    v.expect(frontend::prodViaCopyHolds(k, g.finiteKernel(a, c, 0.3)), "product via copy" + at);
    v.expect(frontend::discardLawHolds(g.markov(a, b, 0.3)), "discard law" + at);

    const Space x3 = g.space("X", 1, 3), y3 = g.space("Y", 1, 3), z3 = g.space("Z", 1, 3),
                w3 = g.space("W", 1, 3);
    const Kernel k1 = g.finiteKernel(x3, y3, 0.3);
    const Kernel k2 = g.finiteKernel(Space::product(x3, y3), z3, 0.3);
    const Kernel k3 = g.finiteKernel(Space::product(x3, Space::product(y3, z3)), w3, 0.3);
    v.expect(frontend::compProdSndHolds(k1, k2), "compProd snd" + at);
    v.expect(frontend::compProdCompositeHolds(k1, k2), "compProd composite" + at);
    v.expect(frontend::compProdAssociativityHolds(k1, k2, k3), "compProd associativity" + at);
    v.expect(oracle::sameWeights(compose(e, k), oracle::chain(oracle::matrixOf(k),
                                                             oracle::matrixOf(e), c.size())),
             "composition oracle" + at);
  }
}

// Replaces the rows of `cond` on atoms where fst(kappa) has no mass.
Kernel modifyOnNullAtoms(const Kernel& kappa, const Kernel& cond, testing::Gen& g) {
  const Kernel marginal = fst(kappa);
  const Space& y = kappa.codomain().left();
  std::vector<Measure> rows = cond.rows();
  for (std::size_t x = 0; x < kappa.domain().size(); ++x) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (marginal.at(x, j).isZero()) rows[cond.domain().pair(x, j)] = g.probability(cond.codomain());
    }
  }
  return Kernel(cond.domain(), cond.codomain(), std::move(rows));
}

void disintegration(Verdict& v) {
  testing::Gen g(1002);
  std::size_t zeros = 0, entries = 0, positiveRows = 0, perturbed = 0;
  for (int i = 0; i < 500; ++i) {
    const Space x = g.space("X", 1, 3), y = g.space("Y", 1, 3), z = g.space("Z", 1, 3);
    const Kernel k = g.finiteKernel(x, Space::product(y, z), 0.45);
    for (const Measure& row : k.rows()) {
      for (std::size_t a = 0; a < row.size(); ++a) zeros += row[a].isZero() ? 1 : 0;
      entries += row.size();
    }
    const std::string at = " (case " + std::to_string(i) + ")";
    const Kernel cond = condKernel(k);
    v.expect(cond.isMarkov(), "condKernel Markov" + at);
    v.expect(compProd(fst(k), cond) == k, "disintegration identity" + at);
    v.expect(isCondKernel(k, modifyOnNullAtoms(k, cond, g)), "null modification" + at);

    // Changing a row over a positive-mass atom must break the identity.
    const Kernel marginal = fst(k);
    for (std::size_t a = 0; a < x.size(); ++a) {
      for (std::size_t b = 0; b < y.size(); ++b) {
        if (marginal.at(a, b).isZero()) continue;
        ++positiveRows;
        const std::size_t row = cond.domain().pair(a, b);
        const Measure other = g.probability(z, 0.3);
        if (other == cond.row(row)) continue;
        std::vector<Measure> rows = cond.rows();
        rows[row] = other;
        ++perturbed;
        v.expect(!isCondKernel(k, Kernel(cond.domain(), z, rows)), "a.e. uniqueness" + at);
      }
    }
  }
  const double fraction = static_cast<double>(zeros) / static_cast<double>(entries);
  v.expect(fraction >= 0.3, "zero-atom fraction " + std::to_string(fraction));
  v.expect(perturbed > positiveRows / 2, "too few uniqueness probes");
}

void radonNikodym(Verdict& v) {
  testing::Gen g(1003);
  for (int i = 0; i < 500; ++i) {
    const Space x = g.space("X", 1, 4), y = g.space("Y", 1, 4);
    const Kernel e = g.finiteKernel(x, y, 0.3);
    const std::string at = " (case " + std::to_string(i) + ")";
    const Kernel k = g.finiteKernel(x, y, 0.3);
    v.expect(frontend::rnReconstructionHolds(k, e), "reconstruction" + at);

    // Independent recomputation of the decomposition.
    const DensityTable d = rnDeriv(k, e);
    const Kernel sing = singularPart(k, e);
    for (std::size_t a = 0; a < x.size(); ++a) {
      for (std::size_t b = 0; b < y.size(); ++b) {
        const Scalar dens = d[Space::product(x, y).pair(a, b)];
        v.expect(dens * e.at(a, b) + sing.at(a, b) == k.at(a, b), "pointwise sum" + at);
        v.expect(sing.at(a, b).isZero() || e.at(a, b).isZero(), "disjoint supports" + at);
      }
    }

    // A dominated pair kappa <= eta.
    std::vector<Measure> rows;
    for (std::size_t a = 0; a < x.size(); ++a) {
      std::vector<Scalar> w;
      for (std::size_t b = 0; b < y.size(); ++b) w.push_back(e.at(a, b) * Scalar(g.between(0, 4), 4));
      rows.emplace_back(y, w);
    }
    const Kernel dom(x, y, rows);
    v.expect(singularPart(dom, e) == zeroKernel(x, y), "dominated singular part" + at);
    const DensityTable dd = rnDeriv(dom, e);
    for (std::size_t a = 0; a < x.size(); ++a) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << y.size()); ++mask) {
        Scalar integral, direct;
        for (std::size_t b = 0; b < y.size(); ++b) {
          if (!oracle::subsetHas(mask, b)) continue;
          integral += dd[Space::product(x, y).pair(a, b)] * e.at(a, b);
          direct += dom.at(a, b);
        }
        v.expect(integral == direct, "integral identity" + at);
      }
    }
  }
}

void bayes(Verdict& v) {
  const Space coin = Space::base("Coin", {"r", "s"});
  const Space face = Space::base("Face", {"h", "t"});
  const Kernel toss(coin, face, {Measure(face, {Scalar(3, 4), Scalar(1, 4)}),
                                 Measure(face, {Scalar(1, 4), Scalar(3, 4)})});
  v.expect(posterior(toss, Measure::uniform(coin)).row(0) ==
               Measure(coin, {Scalar(3, 4), Scalar(1, 4)}),
           "coin posterior(h)");

  testing::Gen g(1004);
  for (int i = 0; i < 500; ++i) {
    const Space x = g.space("X", 1, 4), y = g.space("Y", 1, 4);
    const Kernel k = g.markov(x, y, 0.3);
    const Measure mu = g.probability(x, 0.3);
    const std::string at = " (case " + std::to_string(i) + ")";
    const Kernel post = posterior(k, mu);
    const Measure evidence = measureComp(k, mu);
    v.expect(measureCompProd(evidence, post) == map(measureCompProd(mu, k), swapMap(x, y)),
             "swap identity" + at);
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (evidence[b].isZero()) continue;
      for (std::size_t a = 0; a < x.size(); ++a) {
        v.expect(post.at(b, a) == mu[a] * k.at(a, b) / evidence[b], "Bayes formula" + at);
      }
    }
    v.expect(bayesCheck(k, mu).holds, "bayesCheck" + at);
    v.expect(posteriorInvolutionHolds(k, mu), "involution" + at);
  }
}

struct PairFixture {
  Measure mu;
  RandomVariable x, y;
};

// Either a random pair on a random space, or coordinate functions of a
// product measure (independent by construction).
PairFixture pairFixture(testing::Gen& g, const Space& a, const Space& b) {
  if (!g.chance(0.4)) {
    const Space o = g.space("O", 1, 6);
    return {g.probability(o, 0.3), g.rv(o, a), g.rv(o, b)};
  }
  const Space p = g.space("P", 1, 3), q = g.space("Q", 1, 3);
  const Space o = Space::product(p, q);
  const RandomVariable f = g.rv(p, a), h = g.rv(q, b);
  std::vector<std::size_t> xs, ys;
  for (std::size_t w = 0; w < o.size(); ++w) {
    const auto [l, r] = o.split(w);
    xs.push_back(f(l));
    ys.push_back(h(r));
  }
  return {productMeasure(g.probability(p, 0.3), g.probability(q, 0.3)), RandomVariable(o, a, xs),
          RandomVariable(o, b, ys)};
}

void independence(Verdict& v) {
  testing::Gen g(1005);
  std::size_t independentSeen = 0;
  for (int i = 0; i < 200; ++i) {
    const std::string at = " (case " + std::to_string(i) + ")";
    const auto [mu, x, y] = pairFixture(g, g.space("A", 1, 3), g.space("B", 1, 3));
    const bool fast = indepFun(x, y, mu);
    independentSeen += fast ? 1 : 0;
    v.expect(fast == oracle::independentAllRectangles(x, y, mu), "indepFun vs rectangles" + at);
  }
  v.expect(independentSeen >= 20, "too few independent cases: " + std::to_string(independentSeen));

  std::size_t condIndepSeen = 0;
  for (int i = 0; i < 200; ++i) {
    const std::string at = " (fixture " + std::to_string(i) + ")";
    const Space o = g.space("O", 1, 8);
    const Measure mu = g.probability(o, 0.3);
    const RandomVariable x = g.rv(o, g.space("A", 1, 3)), y = g.rv(o, g.space("B", 1, 3)),
                         z = g.rv(o, g.space("C", 1, 3));
    const CondIndepEquivalence e = condIndepIffCondDistrib(x, y, z, mu);
    condIndepSeen += e.condIndep ? 1 : 0;
    v.expect(e.condIndep == e.condDistribFactorises, "condIndepIffCondDistrib" + at);
    v.expect(e.condIndep == oracle::condIndependentAllRectangles(x, y, z, mu),
             "condIndep vs rectangles" + at);
  }
  v.expect(condIndepSeen >= 20, "too few conditionally independent fixtures");
}

KernelChain randomChain(testing::Gen& g, std::size_t length) {
  const Space start = g.space("S", 1, 4);
  std::vector<Kernel> steps;
  Space history = start;
  for (std::size_t i = 0; i < length; ++i) {
    const Space x = g.space("X" + std::to_string(i + 1), 1, 4);
    steps.push_back(g.markov(history, x, 0.3));
    history = Space::product(history, x);
  }
  return KernelChain(start, std::move(steps), g.probability(start));
}

void ionescuTulcea(Verdict& v) {
  testing::Gen g(1006);
  for (int i = 0; i < 100; ++i) {
    const std::string at = " (chain " + std::to_string(i) + ")";
    const std::size_t n = g.between(1, 5);
    const KernelChain c = randomChain(g, n);
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t m = 1; m <= k; ++m) {
        v.expect(projectionConsistency(c, k, m), "projection consistency" + at);
      }
    }
  }

  const Space s = Space::base("S", {"a", "b", "c"});
  const KernelChain cycle = markovChain(Measure::dirac(s, 0),
                                        deterministic(RandomVariable(s, s, {1, 2, 0})), 5);
  v.expect(trajectoryLaw(cycle, 5) ==
               Measure::dirac(cycle.trajectorySpace(5), trajectoryAtom(cycle, {1, 2, 0, 1, 2})),
           "deterministic chain is a Dirac path");
}

void sampler(Verdict& v) {
  const Space s = Space::base("S", {"a", "b", "c"});
  const Kernel step(s, s, {Measure(s, {Scalar(1, 2), Scalar(1, 4), Scalar(1, 4)}),
                           Measure(s, {Scalar(1, 5), Scalar(3, 5), Scalar(1, 5)}),
                           Measure(s, {Scalar(1, 3), Scalar(0UL), Scalar(2, 3)})});
  const KernelChain c = markovChain(Measure(s, {Scalar(1, 2), Scalar(1, 3), Scalar(1, 6)}), step, 3);
  const std::size_t count = 100000;
  const auto paths = sample(c, 3, 20261015, count);
  v.expect(paths == sample(c, 3, 20261015, count), "rerun differs");

  std::map<std::vector<std::size_t>, std::size_t> freq;
  for (const auto& p : paths) ++freq[p];
  double tv = 0;
  const Measure law = trajectoryLaw(c, 3);
  for (std::size_t atom = 0; atom < law.size(); ++atom) {
    std::vector<std::size_t> path;
    std::size_t rest = atom;
    Space sp = c.trajectorySpace(3);
    for (std::size_t k = 3; k >= 2; --k) {
      const auto [l, r] = sp.split(rest);
      path.insert(path.begin(), r);
      rest = l;
      sp = sp.left();
    }
    path.insert(path.begin(), rest);
    const double empirical = static_cast<double>(freq[path]) / static_cast<double>(count);
    tv += std::abs(empirical - law[atom].rational().get_d());
  }
  tv /= 2;
  v.expect(tv <= 0.02, "TV distance " + std::to_string(tv));
}

void information(Verdict& v) {
  const Space four = Space::base("Four", {"a", "b", "c", "d"});
  v.expect(std::abs(entropy(Measure::uniform(four)) - std::log(4.0)) <= 1e-12, "H(uniform4)");
  const double d = klDiv(Measure(W, {Scalar(1, 2), Scalar(1, 2)}),
                         Measure(W, {Scalar(1, 4), Scalar(3, 4)})).value;
  const double direct = static_cast<double>(oracle::kl({0.5L, 0.5L}, {0.25L, 0.75L}));
  v.expect(std::abs(d - 0.143841) <= 1e-6 && std::abs(d - direct) <= 1e-6, "KL(Ber(1/2),Ber(1/4))");

  testing::Gen g(1009);
  for (int i = 0; i < 500; ++i) {
    const std::string at = " (instance " + std::to_string(i) + ")";
    const Space x = g.space("X", 1, 4), y = g.space("Y", 1, 4), z = g.space("Z", 1, 3);
    const Measure mu = g.probability(x, 0.3), nu = g.probability(x, 0.3);
    const Kernel k = g.markov(x, y, 0.3), e = g.markov(x, y, 0.3);
    const Kernel eta = g.markov(Space::product(x, y), z, 0.3);
    const double lhs = kernelEntropy(compProd(k, eta), mu);
    const double rhs = kernelEntropy(k, mu) + kernelEntropy(eta, measureCompProd(mu, k));
    v.expect(std::abs(lhs - rhs) <= 1e-9, "entropy chain rule" + at);
    const double joint = static_cast<double>(oracle::entropy(oracle::floats(measureCompProd(mu, k))));
    v.expect(std::abs(joint - entropy(mu) - kernelEntropy(k, mu)) <= 1e-9, "joint entropy" + at);
    const KLChainReport r = klChainRule(mu, nu, k, e);
    v.expect(r.integralFormHolds, "KL chain rule, integral form" + at);
    v.expect(r.compProdFormHolds, "KL chain rule, composition-product form" + at);
  }

  for (int i = 0; i < 1000; ++i) {
    const std::string at = " (instance " + std::to_string(i) + ")";
    const Space x = g.space("X", 1, 4), y = g.space("Y", 1, 4);
    const Measure mu = g.probability(x, 0.3), nu = g.probability(x, 0.3);
    const Kernel k = g.markov(x, y, 0.3), e = g.markov(x, y, 0.3);
    for (const Divergence& div : {Divergence::kl(), Divergence::renyi(Rational(1, 2))}) {
      const DataProcessingReport r = dataProcessing(div, k, e, mu, nu);
      v.expect(r.dataProcessingHolds, div.name() + " data processing" + at);
      v.expect(r.conditioningHolds, div.name() + " conditioning" + at);
      v.expect(lessOrClose(div(measureComp(k, mu), measureComp(k, nu)), div(mu, nu), 1e-9),
               div.name() + " recomputed data processing" + at);
    }
  }
}

void subgaussian(Verdict& v) {
  const RealRV rad(Sign, {-1, 1});
  const Measure fair = Measure::uniform(Sign);
  const SubgaussianCertificate cert = certifyBoundedRange(rad, PlainScope{fair});
  v.expect(cert.constant == 1, "Rademacher constant " + rationalToString(cert.constant));
  v.expect(!firstGridViolation(rad, PlainScope{fair}, cert.constant, GridSpec{}).has_value(),
           "Rademacher grid check");
  v.expect(certifyOnGrid(rad, PlainScope{fair}, 1, GridSpec{}).verified, "Rademacher grid certificate");

  {
    const Space t = Space::base("T", {"t"});
    const Measure start = Measure::dirac(t, 0);
    const Kernel k = constantKernel(t, fair);
    const Kernel e = constantKernel(Space::product(t, Sign), fair);
    const auto cx = certifyBoundedRange(rad, KernelScope{k, start});
    const auto cy = certifyBoundedRange(rad, KernelScope{e, measureCompProd(start, k)});
    const auto sum = subgaussianAddCompProd(cx, cy);
    v.expect(sum.constant == cx.constant + cy.constant && sum.verified && sum.grid.has_value(),
             "independent Rademacher sum");
  }
  {
    const Space val = Space::base("V", {"m2", "m1", "p1"});
    const RealRV x(val, {-2, -1, 1});
    const Kernel k(W, val, {Measure(val, {Scalar(0UL), Scalar(1, 2), Scalar(1, 2)}),
                            Measure(val, {Scalar(1, 3), Scalar(0UL), Scalar(2, 3)})});
    const Space wv = Space::product(W, val);
    std::vector<Measure> rows;
    for (std::size_t a = 0; a < wv.size(); ++a) rows.push_back(k.row(wv.split(a).first));
    const Kernel e(wv, val, rows);
    const Measure start = Measure::uniform(W);
    const auto cx = certifyBoundedRange(x, KernelScope{k, start});
    const auto cy = certifyBoundedRange(x, KernelScope{e, measureCompProd(start, k)});
    const auto sum = subgaussianAddCompProd(cx, cy);
    v.expect(sum.constant == cx.constant + cy.constant && sum.verified && sum.grid.has_value(),
             "weather-dependent sum");
  }

  const HoeffdingReport h = hoeffdingCheck(cert, 10, Rational(4));
  v.expect(h.exactTail == Rational(11, 64), "exact tail " + rationalToString(h.exactTail));
  v.expect(h.exactTail == oracle::iidTail(rad, fair, 10, 4), "exact tail vs enumeration");
  v.expect(std::abs(h.bound - std::exp(-0.8)) <= 1e-15, "bound exp(-4/5)");
  v.expect(h.holds, "Hoeffding n=10 t=4");

  const Space lohi = Space::base("V", {"lo", "hi"});
  const RealRV asym(lohi, {-2, 1});
  const Measure asymMu(lohi, {Scalar(1, 3), Scalar(2, 3)});
  for (const auto& [x, mu] : {std::pair{rad, fair}, std::pair{asym, asymMu}}) {
    const auto c = certifyBoundedRange(x, PlainScope{mu});
    const Rational maxAbs = std::max(abs(x.min()), abs(x.max()));
    for (std::size_t n = 1; n <= 20; ++n) {
      for (Rational t(1, 4); t <= maxAbs * static_cast<long>(n); t += Rational(1, 4)) {
        const HoeffdingReport r = hoeffdingCheck(c, n, t);
        const std::string at = " (n=" + std::to_string(n) + ", t=" + rationalToString(t) + ")";
        v.expect(r.holds, "Hoeffding" + at);
        v.expect(r.exactTail == oracle::iidTailBySums(x, mu, n, t), "exact tail" + at);
      }
    }
  }
}

void frontendCriterion(Verdict& v) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kData)) {
    if (entry.path().extension() != ".kd") continue;
    ++files;
    const std::string name = entry.path().filename().string();
    const frontend::Document doc = frontend::parseDocument(readFile(entry.path()));
    const std::string once = frontend::serializeDocument(doc);
    const frontend::Document again = frontend::parseDocument(once);
    v.expect(again == doc, "round trip changes " + name);
    v.expect(frontend::serializeDocument(again) == once, "serialization unstable for " + name);
  }
  v.expect(files == 10, "corpus has " + std::to_string(files) + " documents");

  const frontend::Document products = frontend::parseDocument(readFile(kData / "products.kd"));
  try {
    frontend::parseExpr("compProd(step, bad)", products);
    v.expect(false, "bracketing mismatch accepted");
  } catch (const Error& e) {
    const std::string msg = e.what();
    v.expect(e.code() == ErrorCode::TypeError, "bracketing mismatch: " + msg);
    v.expect(msg.find("(A * (B * C))") != std::string::npos &&
                 msg.find("((A * B) * C)") != std::string::npos,
             "message lacks a space expression: " + msg);
  }

  const std::string weather = (kData / "weather.kd").string();
  const std::vector<std::vector<std::string>> runs = {
      {"eval", weather, "--expr", "comp(k,k)", "--json"},
      {"eval", weather, "--expr", "posterior(k, mu)", "--json"},
      {"eval", weather, "--expr", "law(C, 3)", "--json"},
      {"eval", weather, "--expr", "kentropy(k, mu)", "--json"},
      {"check", weather, "--json"},
      {"simulate", weather, "--chain", "C", "-n", "3", "--count", "50", "--json"},
      {"hoeffding", (kData / "rad.kd").string(), "--rv", "X", "--measure", "mu", "-n", "10", "-t",
       "4", "--json"},
  };
  for (const auto& args : runs) {
    int first = 0, second = 0;
    const std::string a = cliOut(args, first);
    const std::string b = cliOut(args, second);
    v.expect(first == 0 && second == 0, "kd " + args[0] + " exit " + std::to_string(first));
    v.expect(!a.empty() && a == b, "kd " + args[0] + " JSON differs across runs");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"Weather fixture", 1, weatherFixture},
      {"Algebra law suite", 30, algebraLaws},
      {"Disintegration suite", 30, disintegration},
      {"Radon-Nikodym suite", 30, radonNikodym},
      {"Bayes suite", 0, bayes},
      {"Independence oracle equivalence", 0, independence},
      {"Ionescu-Tulcea finite horizon", 60, ionescuTulcea},
      {"Sampler", 60, sampler},
      {"Entropy/KL", 0, information},
      {"Sub-Gaussian/Hoeffding", 60, subgaussian},
      {"Frontend", 0, frontendCriterion},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limitSeconds > 0 && seconds >= c.limitSeconds) {
      v.expect(false, "took " + std::to_string(seconds) + " s, limit " +
                          std::to_string(c.limitSeconds) + " s");
    }
    std::printf("%s %s [%zu checks, %.2f s]%s%s\n", v.ok() ? "PASS" : "FAIL", c.name.c_str(),
                v.checks(), seconds, v.ok() ? "" : ": ", v.failure().c_str());
    failed += v.ok() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
