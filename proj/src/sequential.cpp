#include "mk/sequential.hpp"

#include <string>

#include "mk/algebra.hpp"
#include "mk/error.hpp"

namespace mk {

namespace {

void requireHorizon(const KernelChain& chain, std::size_t n) {
  if (n < 1 || n > chain.length()) {
    throw Error(ErrorCode::HorizonOutOfRange,
                "horizon " + std::to_string(n) + " outside 1.." + std::to_string(chain.length()));
  }
}

}  // namespace

KernelChain::KernelChain(Space start, std::vector<Kernel> steps, std::optional<Measure> initial)
    : start_(std::move(start)), steps_(std::move(steps)), initial_(std::move(initial)) {
  histories_.push_back(start_);
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Kernel& k = steps_[i];
    if (!(k.domain() == histories_.back())) {
      throw Error(ErrorCode::SpaceMismatch, "step " + std::to_string(i) + " starts at " +
                                                k.domain().describe() + ", history is " +
                                                histories_.back().describe());
    }
    k.requireMarkov("step " + std::to_string(i));
    histories_.push_back(Space::product(histories_.back(), k.codomain()));
  }
  if (initial_) {
    if (!(initial_->space() == start_)) {
      throw Error(ErrorCode::SpaceMismatch, "initial measure on " +
                                                initial_->space().describe() +
                                                ", chain starts at " + start_.describe());
    }
    initial_->requireProbability("initial measure");
  }
}

Space KernelChain::trajectorySpace(std::size_t n) const {
  requireHorizon(*this, n);
  Space t = stateSpace(1);
  for (std::size_t k = 2; k <= n; ++k) t = Space::product(t, stateSpace(k));
  return t;
}

RandomVariable historyLift(const KernelChain& chain, std::size_t k) {
  requireHorizon(chain, k);
  RandomVariable lift = RandomVariable::identity(chain.historySpace(1));
  for (std::size_t j = 1; j < k; ++j) {
    const Space next = chain.stateSpace(j + 1);
    lift = composeMaps(productMap(lift, RandomVariable::identity(next)),
                       assocMap(chain.start(), chain.trajectorySpace(j), next));
  }
  return lift;
}

Kernel trajKernel(const KernelChain& chain, std::size_t n) {
  requireHorizon(chain, n);
  Kernel xi = chain.steps()[0];
  RandomVariable lift = RandomVariable::identity(chain.historySpace(1));
  for (std::size_t k = 1; k < n; ++k) {
    if (k > 1) {
      const Space last = chain.stateSpace(k);
      lift = composeMaps(productMap(lift, RandomVariable::identity(last)),
                         assocMap(chain.start(), chain.trajectorySpace(k - 1), last));
    }
    xi = compProd(xi, precompose(chain.steps()[k], lift));
  }
  return xi;
}

RandomVariable trajectoryPrefix(const KernelChain& chain, std::size_t n, std::size_t m) {
  requireHorizon(chain, n);
  requireHorizon(chain, m);
  if (m > n) {
    throw Error(ErrorCode::HorizonOutOfRange,
                "prefix length " + std::to_string(m) + " exceeds " + std::to_string(n));
  }
  RandomVariable f = RandomVariable::identity(chain.trajectorySpace(n));
  for (std::size_t j = n; j > m; --j) {
    f = composeMaps(fstMap(chain.trajectorySpace(j - 1), chain.stateSpace(j)), f);
  }
  return f;
}

RandomVariable trajectoryCoordinate(const KernelChain& chain, std::size_t n, std::size_t k) {
  const RandomVariable prefix = trajectoryPrefix(chain, n, k);
  if (k == 1) return prefix;
  return composeMaps(sndMap(chain.trajectorySpace(k - 1), chain.stateSpace(k)), prefix);
}

bool projectionConsistency(const KernelChain& chain, std::size_t n, std::size_t m) {
  const RandomVariable prefix = trajectoryPrefix(chain, n, m);
  return pushforward(trajKernel(chain, n), prefix) == trajKernel(chain, m);
}

KernelChain markovChain(const Measure& initial, const Kernel& step, std::size_t n) {
  step.requireMarkov("markov chain step");
  if (!(step.domain() == step.codomain())) {
    throw Error(ErrorCode::SpaceMismatch, "markov chain step maps " + step.domain().describe() +
                                              " to " + step.codomain().describe());
  }
  initial.requireProbability("initial measure");
  std::vector<Kernel> steps;
  Space previous = step.domain();  // H_{i-1}
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      steps.push_back(step);
      continue;
    }
    // The last state is the right coordinate of the left-nested history.
    steps.push_back(prodMkLeft(previous, step));
    previous = Space::product(previous, step.codomain());
  }
  return KernelChain(step.domain(), std::move(steps), initial);
}

Measure trajectoryLaw(const KernelChain& chain, std::size_t n) {
  if (!chain.initial()) {
    throw Error(ErrorCode::MissingInitialMeasure, "chain has no initial measure");
  }
  return measureComp(trajKernel(chain, n), *chain.initial());
}

std::size_t SampleStream::draw(const Measure& mu) {
  const Scalar total = mu.total();
  if (total.isZero()) throw Error(ErrorCode::ZeroOverZero, "cannot sample from the zero measure");
  const std::uint64_t u = next();
  const mpz_class word = [u] {
    mpz_class w;
    mpz_import(w.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    return w;
  }();
  mpz_class scale = 1;
  scale <<= 64;
  Scalar cumulative;
  std::size_t last = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i].isZero()) continue;
    last = i;
    cumulative += mu[i];
    const Rational f = cumulative.rational() / total.rational();
    // u < 2^64 * f  <=>  u * den(f) < num(f) * 2^64
    if (word * f.get_den() < f.get_num() * scale) return i;
  }
  return last;
}

std::vector<Trajectory> sample(const KernelChain& chain, std::size_t n, std::uint64_t seed,
                               std::size_t count) {
  if (!chain.initial()) {
    throw Error(ErrorCode::MissingInitialMeasure, "chain has no initial measure");
  }
  requireHorizon(chain, n);
  SampleStream stream(seed);
  std::vector<Trajectory> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t history = stream.draw(*chain.initial());
    Trajectory t;
    t.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t x = stream.draw(chain.steps()[k].row(history));
      t.push_back(x);
      history = chain.historySpace(k + 1).pair(history, x);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t trajectoryAtom(const KernelChain& chain, const Trajectory& trajectory) {
  requireHorizon(chain, trajectory.size());
  std::size_t index = trajectory.front();
  for (std::size_t k = 2; k <= trajectory.size(); ++k) {
    index = chain.trajectorySpace(k).pair(index, trajectory[k - 1]);
  }
  return index;
}

}  // namespace mk
