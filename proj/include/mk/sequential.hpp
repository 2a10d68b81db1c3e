#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "mk/measure.hpp"
#include "mk/random_variable.hpp"

namespace mk {

/// A finite sequence of Markov kernels feeding on the whole history.
///
/// With H_0 = start and H_{i+1} = H_i * X_{i+1}, step i is a Markov kernel
/// H_i ~> X_{i+1}. Histories are left-nested products. The optional initial
/// measure on `start` is needed only for sampling and trajectory laws.
class KernelChain {
 public:
  /// Throws NotMarkov, SpaceMismatch, or NotAProbabilityMeasure.
  KernelChain(Space start, std::vector<Kernel> steps, std::optional<Measure> initial = {});

  const Space& start() const noexcept { return start_; }
  const std::vector<Kernel>& steps() const noexcept { return steps_; }
  const std::optional<Measure>& initial() const noexcept { return initial_; }
  std::size_t length() const noexcept { return steps_.size(); }

  /// H_i for 0 <= i <= length().
  const Space& historySpace(std::size_t i) const { return histories_.at(i); }
  /// X_i for 1 <= i <= length().
  const Space& stateSpace(std::size_t i) const { return steps_.at(i - 1).codomain(); }
  /// T_n = (...((X_1 * X_2) * X_3) ... * X_n), the space of trajectories
  /// of length n. The start coordinate is not part of a trajectory.
  Space trajectorySpace(std::size_t n) const;

 private:
  Space start_;
  std::vector<Kernel> steps_;
  std::optional<Measure> initial_;
  std::vector<Space> histories_;
};

/// The joint law of X_1..X_n given the start point:
/// step_0 (x) step_1' (x) ... (x) step_{n-1}', where step_k' is step_k
/// precomposed with the associator lift start * T_k -> H_k.
/// Throws HorizonOutOfRange unless 1 <= n <= length().
Kernel trajKernel(const KernelChain& chain, std::size_t n);

/// The rebracketing start * T_k -> H_k, built from associators.
RandomVariable historyLift(const KernelChain& chain, std::size_t k);

/// T_n -> T_m keeping the first m coordinates.
RandomVariable trajectoryPrefix(const KernelChain& chain, std::size_t n, std::size_t m);
/// T_n -> X_k, 1 <= k <= n.
RandomVariable trajectoryCoordinate(const KernelChain& chain, std::size_t n, std::size_t k);

/// prefix_{n->m} . trajKernel(n) == trajKernel(m), exactly.
bool projectionConsistency(const KernelChain& chain, std::size_t n, std::size_t m);

/// Chain whose every step applies `step` to the last state only.
/// Throws NotMarkov / NotAProbabilityMeasure.
KernelChain markovChain(const Measure& initial, const Kernel& step, std::size_t n);

/// Law of (X_1..X_n) on T_n: trajKernel(n) o_m initial.
Measure trajectoryLaw(const KernelChain& chain, std::size_t n);

/// Reproducible stream of uniform 64-bit words from std::mt19937_64 (the
/// output sequence is fixed by the C++ standard for a given seed).
class SampleStream {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Inverse-CDF draw over atom order. The draw u selects the first atom i
  /// with u < 2^64 * F(i), F the normalised cumulative mass, compared in
  /// exact arithmetic. Throws ZeroOverZero on the zero measure.
  std::size_t draw(const Measure& mu);

 private:
  std::mt19937_64 engine_;
};

using Trajectory = std::vector<std::size_t>;  // atom index in X_1..X_n

/// `count` trajectories of length n: the start point is drawn from the
/// chain's initial measure, then each coordinate from its step row.
/// Throws MissingInitialMeasure or HorizonOutOfRange.
std::vector<Trajectory> sample(const KernelChain& chain, std::size_t n, std::uint64_t seed,
                               std::size_t count);

/// Index of a sampled trajectory in T_n.
std::size_t trajectoryAtom(const KernelChain& chain, const Trajectory& trajectory);

}  // namespace mk
