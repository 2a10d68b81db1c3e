#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mk/scalar.hpp"
#include "mk/space.hpp"

namespace mk {

/// A total map between the atoms of two finite spaces.
class RandomVariable {
 public:
  RandomVariable(Space domain, Space codomain, std::vector<std::size_t> table);

  static RandomVariable identity(const Space& space);
  static RandomVariable constant(const Space& domain, const Space& codomain, std::size_t atom);
  static RandomVariable fromFunction(const Space& domain, const Space& codomain,
                                     const std::function<std::size_t(std::size_t)>& f);

  const Space& domain() const noexcept { return domain_; }
  const Space& codomain() const noexcept { return codomain_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t operator()(std::size_t atom) const { return table_[atom]; }

  friend bool operator==(const RandomVariable& a, const RandomVariable& b) = default;

 private:
  Space domain_;
  Space codomain_;
  std::vector<std::size_t> table_;
};

/// outer after inner. Throws SpaceMismatch unless inner.codomain == outer.domain.
RandomVariable composeMaps(const RandomVariable& outer, const RandomVariable& inner);
/// omega -> (first(omega), second(omega)).
RandomVariable pairMaps(const RandomVariable& first, const RandomVariable& second);

// Structural maps between products.
RandomVariable fstMap(const Space& a, const Space& b);               // A*B -> A
RandomVariable sndMap(const Space& a, const Space& b);               // A*B -> B
RandomVariable swapMap(const Space& a, const Space& b);              // A*B -> B*A
RandomVariable assocMap(const Space& a, const Space& b, const Space& c);     // A*(B*C) -> (A*B)*C
RandomVariable assocInvMap(const Space& a, const Space& b, const Space& c);  // (A*B)*C -> A*(B*C)
RandomVariable leftUnitorInvMap(const Space& a);                     // A -> Unit*A
RandomVariable diagonalMap(const Space& a);                          // A -> A*A
/// f*g : A*B -> C*D acting coordinatewise.
RandomVariable productMap(const RandomVariable& f, const RandomVariable& g);

/// A real-valued random variable with exact signed rational values.
class RealRV {
 public:
  RealRV(Space domain, std::vector<Rational> values);

  const Space& domain() const noexcept { return domain_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t atom) const { return values_[atom]; }

  /// Smallest and largest value. Throws InvalidArgument on an empty domain.
  Rational min() const;
  Rational max() const;

  friend bool operator==(const RealRV& a, const RealRV& b) = default;

 private:
  Space domain_;
  std::vector<Rational> values_;
};

/// (x, y) -> X(x) + Y(y) on the product of the two domains.
RealRV sumOnProduct(const RealRV& x, const RealRV& y);

/// A sub-sigma-algebra of a finite discrete space, given by its atoms (blocks).
class PartitionSigma {
 public:
  /// Throws InvalidArgument unless blocks are nonempty, disjoint and cover.
  PartitionSigma(Space space, std::vector<std::vector<std::size_t>> blocks);

  static PartitionSigma trivial(const Space& space);
  static PartitionSigma discrete(const Space& space);
  /// sigma(Z): blocks are the nonempty fibres of Z, in codomain order.
  static PartitionSigma generatedBy(const RandomVariable& z);

  const Space& space() const noexcept { return space_; }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t blockOf(std::size_t atom) const { return blockOf_[atom]; }

  friend bool operator==(const PartitionSigma& a, const PartitionSigma& b) {
    return a.space_ == b.space_ && a.blocks_ == b.blocks_;
  }

 private:
  Space space_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> blockOf_;
};

}  // namespace mk
