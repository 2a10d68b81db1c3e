#pragma once

// Brute-force reference computations. They work on plain matrices of
// rationals and long doubles and share no code with the library beyond
// reading weights out of its objects.

#include <cmath>
#include <cstddef>
#include <map>
#include <vector>

#include "mk/measure.hpp"
#include "mk/random_variable.hpp"

namespace mk::oracle {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix matrixOf(const Kernel& k) {
  Matrix m(k.domain().size(), std::vector<Rational>(k.codomain().size()));
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < k.codomain().size(); ++y) m[x][y] = k.at(x, y).rational();
  }
  return m;
}

inline std::vector<Rational> vectorOf(const Measure& mu) {
  std::vector<Rational> v;
  for (const Scalar& w : mu.weights()) v.push_back(w.rational());
  return v;
}

inline bool sameWeights(const Kernel& k, const Matrix& m) {
  return matrixOf(k) == m;
}

inline bool sameWeights(const Measure& mu, const std::vector<Rational>& v) {
  return vectorOf(mu) == v;
}

/// First a then b: out[x][z] = sum_y a[x][y] b[y][z].
inline Matrix chain(const Matrix& a, const Matrix& b, std::size_t cols) {
  Matrix out(a.size(), std::vector<Rational>(cols));
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a[x].size(); ++y) {
      for (std::size_t z = 0; z < cols; ++z) out[x][z] += a[x][y] * b[y][z];
    }
  }
  return out;
}

/// (kappa (x) eta)(x)(y, z) = kappa(x)(y) eta(x, y)(z), atoms row-major.
inline Matrix compProd(const Kernel& kappa, const Kernel& eta) {
  const std::size_t ny = kappa.codomain().size();
  const std::size_t nz = eta.codomain().size();
  Matrix out(kappa.domain().size(), std::vector<Rational>(ny * nz));
  for (std::size_t x = 0; x < out.size(); ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t z = 0; z < nz; ++z) {
        out[x][y * nz + z] = kappa.at(x, y).rational() * eta.at(x * ny + y, z).rational();
      }
    }
  }
  return out;
}

inline long double entropy(const std::vector<long double>& p) {
  long double h = 0;
  for (long double v : p) {
    if (v > 0) h -= v * std::log(v);
  }
  return h;
}

inline long double kl(const std::vector<long double>& p, const std::vector<long double>& q) {
  long double d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (q[i] == 0) return INFINITY;
    d += p[i] * std::log(p[i] / q[i]);
  }
  return d;
}

inline std::vector<long double> floats(const Measure& mu) {
  std::vector<long double> out;
  for (const Scalar& w : mu.weights()) out.push_back(static_cast<long double>(w.toDouble()));
  return out;
}

inline bool subsetHas(std::size_t mask, std::size_t i) { return ((mask >> i) & 1U) != 0; }

/// X and Y independent under the probability mu, over all rectangle pairs.
inline bool independentAllRectangles(const RandomVariable& x, const RandomVariable& y,
                                     const Measure& mu) {
  const std::size_t nx = x.codomain().size();
  const std::size_t ny = y.codomain().size();
  for (std::size_t a = 0; a < (std::size_t{1} << nx); ++a) {
    for (std::size_t b = 0; b < (std::size_t{1} << ny); ++b) {
      Rational pa, pb, pab;
      for (std::size_t w = 0; w < mu.size(); ++w) {
        const Rational m = mu[w].rational();
        const bool inA = subsetHas(a, x(w));
        const bool inB = subsetHas(b, y(w));
        if (inA) pa += m;
        if (inB) pb += m;
        if (inA && inB) pab += m;
      }
      if (pab != pa * pb) return false;
    }
  }
  return true;
}

/// X and Y independent given the blocks of sigma(Z), over all rectangles,
/// in the multiplied-out form mu(AB G) mu(G) = mu(A G) mu(B G).
inline bool condIndependentAllRectangles(const RandomVariable& x, const RandomVariable& y,
                                         const RandomVariable& z, const Measure& mu) {
  const std::size_t nx = x.codomain().size();
  const std::size_t ny = y.codomain().size();
  for (std::size_t c = 0; c < z.codomain().size(); ++c) {
    for (std::size_t a = 0; a < (std::size_t{1} << nx); ++a) {
      for (std::size_t b = 0; b < (std::size_t{1} << ny); ++b) {
        Rational pg, pa, pb, pab;
        for (std::size_t w = 0; w < mu.size(); ++w) {
          if (z(w) != c) continue;
          const Rational m = mu[w].rational();
          const bool inA = subsetHas(a, x(w));
          const bool inB = subsetHas(b, y(w));
          pg += m;
          if (inA) pa += m;
          if (inB) pb += m;
          if (inA && inB) pab += m;
        }
        if (pab * pg != pa * pb) return false;
      }
    }
  }
  return true;
}

/// Law of (X_1..X_n) for a time-homogeneous chain, keyed by the state path.
inline std::map<std::vector<std::size_t>, Rational> pathLaw(const Measure& initial,
                                                           const Kernel& step, std::size_t n) {
  std::map<std::vector<std::size_t>, Rational> law;
  const std::size_t k = step.codomain().size();
  std::vector<std::size_t> path(n + 1, 0);
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (std::size_t i = 0; i <= n; ++i) t *= k;
    return t;
  }();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i <= n; ++i) {
      path[n - i] = c % k;
      c /= k;
    }
    Rational p = initial[path[0]].rational();
    for (std::size_t i = 1; i <= n && p != 0; ++i) p *= step.at(path[i - 1], path[i]).rational();
    law[std::vector<std::size_t>(path.begin() + 1, path.end())] += p;
  }
  return law;
}

/// P(X_1 + ... + X_n >= t) for i.i.d. copies, by enumerating all outcomes.
inline Rational iidTail(const RealRV& x, const Measure& mu, std::size_t n, const Rational& t) {
  const std::size_t k = mu.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;
  Rational tail;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    Rational sum, p = 1;
    for (std::size_t i = 0; i < n; ++i) {
      sum += x[c % k];
      p *= mu[c % k].rational();
      c /= k;
    }
    if (sum >= t) tail += p;
  }
  return tail;
}

/// Same tail by dynamic programming over the distribution of partial sums.
inline Rational iidTailBySums(const RealRV& x, const Measure& mu, std::size_t n,
                              const Rational& t) {
  std::map<Rational, Rational> dist{{Rational(0), Rational(1)}};
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Rational, Rational> next;
    for (const auto& [s, p] : dist) {
      for (std::size_t w = 0; w < mu.size(); ++w) {
        if (!mu[w].isZero()) next[s + x[w]] += p * mu[w].rational();
      }
    }
    dist = std::move(next);
  }
  Rational tail;
  for (const auto& [s, p] : dist) {
    if (s >= t) tail += p;
  }
  return tail;
}

}  // namespace mk::oracle
