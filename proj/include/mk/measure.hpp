#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mk/scalar.hpp"
#include "mk/space.hpp"

namespace mk {

/// A finite measure on a finite space: one finite nonnegative weight per atom.
class Measure {
 public:
  /// Throws DimensionMismatch when the weight count differs from the atom
  /// count, InfiniteWeight when a weight is infinite.
  Measure(Space space, std::vector<Scalar> weights);

  static Measure zero(const Space& space);
  static Measure dirac(const Space& space, std::size_t atom);
  /// Throws NoMarkovIntoEmpty on an empty space.
  static Measure uniform(const Space& space);

  const Space& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return weights_.size(); }
  const std::vector<Scalar>& weights() const noexcept { return weights_; }
  const Scalar& operator[](std::size_t atom) const { return weights_[atom]; }

  Scalar total() const;
  Scalar massOf(std::span<const std::size_t> atoms) const;
  bool isProbability() const;
  bool isZero() const;
  std::vector<std::size_t> support() const;

  /// Divides every weight by the total. Throws ZeroOverZero on the zero measure.
  Measure normalized() const;

  /// Throws NotAProbabilityMeasure naming `what` unless the total is exactly 1.
  void requireProbability(std::string_view what) const;

  friend bool operator==(const Measure& a, const Measure& b) = default;

 private:
  Space space_;
  std::vector<Scalar> weights_;
};

/// A kernel between finite spaces: one measure on the codomain per domain atom.
///
/// Every kernel here is finite (finiteBound is a max over finitely many rows);
/// isMarkov holds iff every row has total exactly 1.
class Kernel {
 public:
  Kernel(Space domain, Space codomain, std::vector<Measure> rows);
  /// Convenience constructor from raw weight rows.
  static Kernel fromWeights(Space domain, Space codomain,
                            const std::vector<std::vector<Scalar>>& rows);

  const Space& domain() const noexcept { return domain_; }
  const Space& codomain() const noexcept { return codomain_; }
  const std::vector<Measure>& rows() const noexcept { return rows_; }
  const Measure& row(std::size_t x) const { return rows_[x]; }
  const Scalar& at(std::size_t x, std::size_t y) const { return rows_[x][y]; }

  bool isMarkov() const;
  bool isDeterministic() const;
  /// Max row total; zero for an empty domain.
  Scalar finiteBound() const;

  /// Throws NoMarkovIntoEmpty or NotMarkov naming `what`.
  void requireMarkov(std::string_view what) const;

  friend bool operator==(const Kernel& a, const Kernel& b) = default;

 private:
  Space domain_;
  Space codomain_;
  std::vector<Measure> rows_;
};

}  // namespace mk
