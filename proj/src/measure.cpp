#include "mk/measure.hpp"

#include <string>

#include "mk/error.hpp"

namespace mk {

Measure::Measure(Space space, std::vector<Scalar> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(weights_.size()) + " weights for " +
                    std::to_string(space_.size()) + " atoms of " + space_.describe());
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].isInfinite()) {
      throw Error(ErrorCode::InfiniteWeight,
                  "infinite weight at atom " + space_.atomLabel(i) + " of " +
                      space_.describe());
    }
  }
}

Measure Measure::zero(const Space& space) {
  return Measure(space, std::vector<Scalar>(space.size()));
}

Measure Measure::dirac(const Space& space, std::size_t atom) {
  std::vector<Scalar> w(space.size());
  w.at(atom) = Scalar(1);
  return Measure(space, std::move(w));
}

Measure Measure::uniform(const Space& space) {
  if (space.size() == 0) {
    throw Error(ErrorCode::NoMarkovIntoEmpty,
                "no probability measure on the empty space " + space.describe());
  }
  return Measure(space, std::vector<Scalar>(space.size(), Scalar(1, space.size())));
}

Scalar Measure::total() const {
  Scalar sum;
  for (const auto& w : weights_) sum += w;
  return sum;
}

Scalar Measure::massOf(std::span<const std::size_t> atoms) const {
  Scalar sum;
  for (std::size_t a : atoms) sum += weights_.at(a);
  return sum;
}

bool Measure::isProbability() const { return total() == Scalar(1); }

bool Measure::isZero() const {
  for (const auto& w : weights_) {
    if (!w.isZero()) return false;
  }
  return true;
}

std::vector<std::size_t> Measure::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!weights_[i].isZero()) out.push_back(i);
  }
  return out;
}

Measure Measure::normalized() const {
  const Scalar t = total();
  std::vector<Scalar> w;
  w.reserve(weights_.size());
  for (const auto& x : weights_) w.push_back(x / t);
  return Measure(space_, std::move(w));
}

void Measure::requireProbability(std::string_view what) const {
  if (!isProbability()) {
    throw Error(ErrorCode::NotAProbabilityMeasure,
                std::string(what) + " has total mass " + total().toString());
  }
}

Kernel::Kernel(Space domain, Space codomain, std::vector<Measure> rows)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rows_(std::move(rows)) {
  if (rows_.size() != domain_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(rows_.size()) + " rows for " +
                    std::to_string(domain_.size()) + " atoms of " + domain_.describe());
  }
  for (const auto& r : rows_) {
    if (!(r.space() == codomain_)) {
      throw Error(ErrorCode::SpaceMismatch, "row on " + r.space().describe() +
                                                " in a kernel into " + codomain_.describe());
    }
  }
}

Kernel Kernel::fromWeights(Space domain, Space codomain,
                           const std::vector<std::vector<Scalar>>& rows) {
  std::vector<Measure> measures;
  measures.reserve(rows.size());
  for (const auto& r : rows) measures.emplace_back(codomain, r);
  return Kernel(std::move(domain), std::move(codomain), std::move(measures));
}

bool Kernel::isMarkov() const {
  for (const auto& r : rows_) {
    if (!r.isProbability()) return false;
  }
  return true;
}

bool Kernel::isDeterministic() const {
  for (const auto& r : rows_) {
    const auto s = r.support();
    if (s.size() != 1 || !(r[s.front()] == Scalar(1))) return false;
  }
  return true;
}

Scalar Kernel::finiteBound() const {
  Scalar best;
  for (const auto& r : rows_) {
    const Scalar t = r.total();
    if (t > best) best = t;
  }
  return best;
}

void Kernel::requireMarkov(std::string_view what) const {
  if (domain_.size() > 0 && codomain_.size() == 0) {
    throw Error(ErrorCode::NoMarkovIntoEmpty,
                std::string(what) + " maps into the empty space " + codomain_.describe());
  }
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].isProbability()) {
      throw Error(ErrorCode::NotMarkov, std::string(what) + " row " + domain_.atomLabel(x) +
                                            " has total " + rows_[x].total().toString());
    }
  }
}

}  // namespace mk
