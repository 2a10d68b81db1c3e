#include <doctest.h>

#include "mk/algebra.hpp"
#include "mk/error.hpp"
#include "mk/frontend/laws.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mk;
using mk::frontend::associativityHolds;
using mk::frontend::compProdAssociativityHolds;
using mk::frontend::compProdCompositeHolds;
using mk::frontend::compProdSndHolds;
using mk::frontend::copyDiscardCoherent;
using mk::frontend::discardLawHolds;
using mk::frontend::prodViaCopyHolds;
using mk::frontend::unitLawsHold;

namespace {

const Space W = Space::base("Weather", {"good", "bad"});
constexpr std::size_t good = 0, bad = 1;

Kernel weather() {
  return Kernel(W, W, {Measure(W, {Scalar(4, 5), Scalar(1, 5)}),
                       Measure(W, {Scalar(2, 5), Scalar(3, 5)})});
}

}  // namespace

TEST_CASE("deterministic kernels of structural maps") {
  const Space g = Space::base("G", {"g", "b"});
  CHECK(deterministic(RandomVariable::identity(g)) == identityKernel(g));
  const Kernel c = deterministic(RandomVariable::constant(g, g, 0));
  CHECK(c.row(0) == Measure::dirac(g, 0));
  CHECK(c.row(1) == Measure::dirac(g, 0));

  const Space bit = Space::base("Bit", {"0", "1"});
  CHECK(deterministic(swapMap(g, bit)) == swapKernel(g, bit));
}

TEST_CASE("copy, discard and constant kernels") {
  const Kernel copy = copyKernel(W);
  CHECK(copy.row(good) == Measure::dirac(Space::product(W, W), 0));
  const Kernel d = discardKernel(W);
  CHECK(d.row(bad) == Measure::dirac(Space::unit(), 0));
  const Space one = Space::base("One", {"x"});
  const Measure mu(W, {Scalar(1, 2), Scalar(1, 2)});
  CHECK(constantKernel(one, mu).row(0) == mu);
  CHECK(copyDiscardCoherent(W));
}

TEST_CASE("weather composition") {
  const Kernel k = weather();
  const Kernel kk = compose(k, k);
  CHECK(kk.at(good, good) == Scalar(18, 25));
  CHECK(kk.at(good, bad) == Scalar(7, 25));
  CHECK(kk.at(bad, good) == Scalar(14, 25));
  CHECK(compose(identityKernel(W), k) == k);
  CHECK(compose(discardKernel(W), k) == discardKernel(W));
}

TEST_CASE("parallel and product on weather") {
  const Kernel k = weather();
  const Space ww = Space::product(W, W);
  const Kernel par = parallel(k, k);
  CHECK(par.at(ww.pair(good, bad), ww.pair(good, good)) == Scalar(8, 25));
  CHECK(par.isMarkov());
  const Kernel pr = prod(k, k);
  CHECK(pr.at(good, ww.pair(good, bad)) == Scalar(4, 25));
  CHECK(pr.isMarkov());

  const Kernel withId = parallel(k, identityKernel(W));
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t t = 0; t < 2; ++t) {
      CHECK(withId.row(ww.pair(x, t)) == productMeasure(k.row(x), Measure::dirac(W, t)));
    }
  }
}

TEST_CASE("product with a discard lift is the kernel up to the right unitor") {
  const Kernel k = weather();
  const Kernel p = prod(k, discardKernel(W));
  const Kernel back = pushforward(p, fstMap(W, Space::unit()));
  CHECK(back == k);
}

TEST_CASE("composition-product on weather") {
  const Kernel k = weather();
  const Kernel eta = deterministic(sndMap(W, W));
  const Kernel cp = compProd(k, eta);
  const Space ww = Space::product(W, W);
  CHECK(cp.at(good, ww.pair(good, good)) == Scalar(4, 5));
  CHECK(fst(cp) == k);
  CHECK(compProdSndHolds(k, eta));
  CHECK(compProdCompositeHolds(k, eta));
}

TEST_CASE("marginals of a constant kernel") {
  const Space ab = Space::base("AB", {"a", "b"});
  const Space bit = Space::base("Bit", {"0", "1"});
  const Space one = Space::base("One", {"x"});
  const Measure rho(Space::product(ab, bit),
                    {Scalar(1, 4), Scalar(1, 4), Scalar(1, 2), Scalar(0UL)});
  const Kernel k = constantKernel(one, rho);
  CHECK(fst(k).row(0) == Measure(ab, {Scalar(1, 2), Scalar(1, 2)}));
  CHECK(snd(k).row(0) == Measure(bit, {Scalar(3, 4), Scalar(1, 4)}));
}

TEST_CASE("copy-composed kernels have equal marginals") {
  const Kernel c = compose(copyKernel(W), weather());
  CHECK(fst(c) == snd(c));
}

TEST_CASE("measure operations") {
  const Measure mu(W, {Scalar(1, 2), Scalar(1, 2)});
  CHECK(measureComp(weather(), mu) == Measure(W, {Scalar(3, 5), Scalar(2, 5)}));
  const Measure nu(W, {Scalar(1, 3), Scalar(2, 3)});
  CHECK(measureCompProd(mu, constantKernel(W, nu)) == productMeasure(mu, nu));
  CHECK(map(mu, RandomVariable::identity(W)) == mu);
}

TEST_CASE("kernel addition") {
  const Kernel k = weather();
  CHECK(addKernels(k, zeroKernel(W, W)) == k);
  CHECK_FALSE(addKernels(k, k).isMarkov());
  const Space y = Space::base("Y", {"y"});
  const Kernel a(y, y, {Measure(y, {Scalar(1, 4)})});
  const Kernel b(y, y, {Measure(y, {Scalar(1, 2)})});
  CHECK(addKernels(a, b).at(0, 0) == Scalar(3, 4));
}

TEST_CASE("copy does not commute with a non-deterministic kernel") {
  const Kernel k = weather();
  CHECK(compose(parallel(k, k), copyKernel(W)) != compose(copyKernel(W), k));
  const Kernel d = deterministic(RandomVariable(W, W, {1, 0}));
  CHECK(compose(parallel(d, d), copyKernel(W)) == compose(copyKernel(W), d));
}

TEST_CASE("shape errors") {
  const Space other = Space::base("Other", {"x", "y", "z"});
  CHECK_THROWS_AS(compose(weather(), identityKernel(other)), Error);
  CHECK_THROWS_AS(compProd(weather(), weather()), Error);
  CHECK_THROWS_AS(fst(weather()), Error);
}

TEST_CASE("composition agrees with matrix multiplication") {
  testing::Gen g(101);
  for (int i = 0; i < 200; ++i) {
    const Space a = g.space("A", 1, 5), b = g.space("B", 1, 5), c = g.space("C", 1, 5);
    const Kernel k = g.finiteKernel(a, b, 0.3);
    const Kernel e = g.finiteKernel(b, c, 0.3);
    CHECK(oracle::sameWeights(compose(e, k),
                              oracle::chain(oracle::matrixOf(k), oracle::matrixOf(e), c.size())));
  }
}

TEST_CASE("composition-product agrees with its defining sum") {
  testing::Gen g(102);
  for (int i = 0; i < 200; ++i) {
    const Space x = g.space("X", 1, 4), y = g.space("Y", 1, 4), z = g.space("Z", 1, 4);
    const Kernel k = g.finiteKernel(x, y, 0.3);
    const Kernel e = g.finiteKernel(Space::product(x, y), z, 0.3);
    CHECK(oracle::sameWeights(compProd(k, e), oracle::compProd(k, e)));
  }
}

TEST_CASE("pushforward and precompose agree with composing deterministic kernels") {
  testing::Gen g(103);
  for (int i = 0; i < 100; ++i) {
    const Space a = g.space("A", 1, 4), b = g.space("B", 1, 4), c = g.space("C", 1, 4);
    const Kernel k = g.finiteKernel(a, b, 0.2);
    const RandomVariable f = g.rv(b, c);
    const RandomVariable h = g.rv(c, a);
    CHECK(pushforward(k, f) == compose(deterministic(f), k));
    CHECK(precompose(k, h) == compose(k, deterministic(h)));
  }
}

TEST_CASE("category laws on random kernels") {
  testing::Gen g(104);
  for (int i = 0; i < 150; ++i) {
    const Space a = g.space("A", 1, 5), b = g.space("B", 1, 5), c = g.space("C", 1, 5),
                d = g.space("D", 1, 5);
    const Kernel k = g.finiteKernel(a, b, 0.3);
    const Kernel e = g.finiteKernel(b, c, 0.3);
    const Kernel x = g.finiteKernel(c, d, 0.3);
    CHECK(associativityHolds(x, e, k));
    CHECK(unitLawsHold(k));
    CHECK(discardLawHolds(g.markov(a, b, 0.3)));
    CHECK(prodViaCopyHolds(k, g.finiteKernel(a, c, 0.3)));
    CHECK(copyDiscardCoherent(a));
  }
}

TEST_CASE("composition-product associates up to the associator") {
  testing::Gen g(105);
  for (int i = 0; i < 100; ++i) {
    const Space x = g.space("X", 1, 3), y = g.space("Y", 1, 3), z = g.space("Z", 1, 3),
                w = g.space("W", 1, 3);
    const Kernel k = g.finiteKernel(x, y, 0.3);
    const Kernel e = g.finiteKernel(Space::product(x, y), z, 0.3);
    const Kernel xi = g.finiteKernel(Space::product(x, Space::product(y, z)), w, 0.3);
    CHECK(compProdAssociativityHolds(k, e, xi));
    CHECK(compProdCompositeHolds(k, e));
    CHECK(compProdSndHolds(k, e));
  }
}

TEST_CASE("Markov kernels are closed under the operations") {
  testing::Gen g(106);
  for (int i = 0; i < 100; ++i) {
    const Space a = g.space("A", 1, 4), b = g.space("B", 1, 4), c = g.space("C", 1, 4);
    const Kernel k = g.markov(a, b, 0.3);
    const Kernel e = g.markov(b, c, 0.3);
    CHECK(compose(e, k).isMarkov());
    CHECK(parallel(k, e).isMarkov());
    CHECK(prod(k, g.markov(a, c)).isMarkov());
    CHECK(compProd(k, g.markov(Space::product(a, b), c)).isMarkov());
    const Kernel f = g.finiteKernel(a, b);
    const Kernel h = g.finiteKernel(b, c);
    CHECK(compose(h, f).finiteBound() <= f.finiteBound() * h.finiteBound());
  }
}
