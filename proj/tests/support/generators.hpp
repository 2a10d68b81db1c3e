#pragma once

// Random finite objects for property tests. Every generator draws from a
// caller-owned std::mt19937_64, so a failing case is reproducible from its
// seed.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "mk/measure.hpp"
#include "mk/random_variable.hpp"

namespace mk::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Space space(const std::string& name, std::size_t minAtoms, std::size_t maxAtoms) {
    const std::size_t n = between(minAtoms, maxAtoms);
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back(name + std::to_string(i));
    return Space::base(name, atoms);
  }

  /// Probability weights with a common denominator <= maxDen; each atom is
  /// forced to zero with probability zeroFraction (one atom always survives).
  std::vector<Scalar> probabilityWeights(std::size_t n, std::size_t maxDen = 16,
                                         double zeroFraction = 0.0) {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < n; ++i) {
      if (!chance(zeroFraction)) live.push_back(i);
    }
    if (live.empty()) live.push_back(between(0, n - 1));
    const std::size_t den = between(1, maxDen);
    std::vector<std::size_t> units(n, 0);
    for (std::size_t u = 0; u < den; ++u) ++units[live[between(0, live.size() - 1)]];
    std::vector<Scalar> out;
    for (std::size_t c : units) out.emplace_back(c, den);
    return out;
  }

  /// Arbitrary finite weights p/q with q <= maxDen and p <= 2q.
  std::vector<Scalar> finiteWeights(std::size_t n, std::size_t maxDen = 16,
                                    double zeroFraction = 0.0) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (chance(zeroFraction)) {
        out.emplace_back(0UL);
        continue;
      }
      const std::size_t q = between(1, maxDen);
      out.emplace_back(between(0, 2 * q), q);
    }
    return out;
  }

  Measure probability(const Space& s, double zeroFraction = 0.0, std::size_t maxDen = 16) {
    return Measure(s, probabilityWeights(s.size(), maxDen, zeroFraction));
  }
  Measure finiteMeasure(const Space& s, double zeroFraction = 0.0, std::size_t maxDen = 16) {
    return Measure(s, finiteWeights(s.size(), maxDen, zeroFraction));
  }

  Kernel markov(const Space& dom, const Space& cod, double zeroFraction = 0.0,
                std::size_t maxDen = 16) {
    std::vector<Measure> rows;
    for (std::size_t x = 0; x < dom.size(); ++x) rows.push_back(probability(cod, zeroFraction, maxDen));
    return Kernel(dom, cod, std::move(rows));
  }
  Kernel finiteKernel(const Space& dom, const Space& cod, double zeroFraction = 0.0,
                      std::size_t maxDen = 16) {
    std::vector<Measure> rows;
    for (std::size_t x = 0; x < dom.size(); ++x) {
      rows.push_back(finiteMeasure(cod, zeroFraction, maxDen));
    }
    return Kernel(dom, cod, std::move(rows));
  }

  RandomVariable rv(const Space& dom, const Space& cod) {
    std::vector<std::size_t> table;
    for (std::size_t i = 0; i < dom.size(); ++i) table.push_back(between(0, cod.size() - 1));
    return RandomVariable(dom, cod, std::move(table));
  }

  RealRV realrv(const Space& dom, int lo, int hi, std::size_t maxDen = 4) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const long q = static_cast<long>(between(1, maxDen));
      const long p = static_cast<long>(between(0, static_cast<std::size_t>((hi - lo) * q))) + lo * q;
      values.emplace_back(p, q);
      values.back().canonicalize();
    }
    return RealRV(dom, std::move(values));
  }

  PartitionSigma partition(const Space& s) {
    const std::size_t k = between(1, s.size());
    std::vector<std::size_t> label(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) label[i] = i < k ? i : between(0, k - 1);
    std::shuffle(label.begin(), label.end(), rng_);
    std::vector<std::vector<std::size_t>> blocks(k);
    for (std::size_t i = 0; i < s.size(); ++i) blocks[label[i]].push_back(i);
    return PartitionSigma(s, std::move(blocks));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mk::testing
