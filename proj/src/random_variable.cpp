#include "mk/random_variable.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mk/error.hpp"

namespace mk {

RandomVariable::RandomVariable(Space domain, Space codomain, std::vector<std::size_t> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "map table has " + std::to_string(table_.size()) + " entries for " +
                    std::to_string(domain_.size()) + " atoms of " + domain_.describe());
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= codomain_.size()) {
      throw Error(ErrorCode::UnknownAtom, "image of " + domain_.atomLabel(i) +
                                              " is not an atom of " + codomain_.describe());
    }
  }
}

RandomVariable RandomVariable::identity(const Space& space) {
  std::vector<std::size_t> t(space.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return RandomVariable(space, space, std::move(t));
}

RandomVariable RandomVariable::constant(const Space& domain, const Space& codomain,
                                        std::size_t atom) {
  return RandomVariable(domain, codomain, std::vector<std::size_t>(domain.size(), atom));
}

RandomVariable RandomVariable::fromFunction(const Space& domain, const Space& codomain,
                                            const std::function<std::size_t(std::size_t)>& f) {
  std::vector<std::size_t> t(domain.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f(i);
  return RandomVariable(domain, codomain, std::move(t));
}

RandomVariable composeMaps(const RandomVariable& outer, const RandomVariable& inner) {
  if (!(inner.codomain() == outer.domain())) {
    throw Error(ErrorCode::SpaceMismatch, "cannot compose a map into " +
                                              inner.codomain().describe() +
                                              " with a map from " + outer.domain().describe());
  }
  return RandomVariable::fromFunction(inner.domain(), outer.codomain(),
                                      [&](std::size_t i) { return outer(inner(i)); });
}

RandomVariable pairMaps(const RandomVariable& first, const RandomVariable& second) {
  if (!(first.domain() == second.domain())) {
    throw Error(ErrorCode::SpaceMismatch, "cannot pair maps on " + first.domain().describe() +
                                              " and " + second.domain().describe());
  }
  const Space target = Space::product(first.codomain(), second.codomain());
  return RandomVariable::fromFunction(first.domain(), target, [&](std::size_t i) {
    return target.pair(first(i), second(i));
  });
}

RandomVariable fstMap(const Space& a, const Space& b) {
  const Space ab = Space::product(a, b);
  return RandomVariable::fromFunction(ab, a, [&](std::size_t i) { return ab.split(i).first; });
}

RandomVariable sndMap(const Space& a, const Space& b) {
  const Space ab = Space::product(a, b);
  return RandomVariable::fromFunction(ab, b, [&](std::size_t i) { return ab.split(i).second; });
}

RandomVariable swapMap(const Space& a, const Space& b) {
  const Space ab = Space::product(a, b);
  const Space ba = Space::product(b, a);
  return RandomVariable::fromFunction(ab, ba, [&](std::size_t i) {
    const auto [x, y] = ab.split(i);
    return ba.pair(y, x);
  });
}

RandomVariable assocMap(const Space& a, const Space& b, const Space& c) {
  const Space bc = Space::product(b, c);
  const Space from = Space::product(a, bc);
  const Space ab = Space::product(a, b);
  const Space to = Space::product(ab, c);
  return RandomVariable::fromFunction(from, to, [&](std::size_t i) {
    const auto [x, yz] = from.split(i);
    const auto [y, z] = bc.split(yz);
    return to.pair(ab.pair(x, y), z);
  });
}

RandomVariable assocInvMap(const Space& a, const Space& b, const Space& c) {
  const Space ab = Space::product(a, b);
  const Space from = Space::product(ab, c);
  const Space bc = Space::product(b, c);
  const Space to = Space::product(a, bc);
  return RandomVariable::fromFunction(from, to, [&](std::size_t i) {
    const auto [xy, z] = from.split(i);
    const auto [x, y] = ab.split(xy);
    return to.pair(x, bc.pair(y, z));
  });
}

RandomVariable leftUnitorInvMap(const Space& a) {
  const Space to = Space::product(Space::unit(), a);
  return RandomVariable::fromFunction(a, to, [&](std::size_t i) { return to.pair(0, i); });
}

RandomVariable diagonalMap(const Space& a) {
  const Space to = Space::product(a, a);
  return RandomVariable::fromFunction(a, to, [&](std::size_t i) { return to.pair(i, i); });
}

RandomVariable productMap(const RandomVariable& f, const RandomVariable& g) {
  const Space from = Space::product(f.domain(), g.domain());
  const Space to = Space::product(f.codomain(), g.codomain());
  return RandomVariable::fromFunction(from, to, [&](std::size_t i) {
    const auto [x, y] = from.split(i);
    return to.pair(f(x), g(y));
  });
}

RealRV::RealRV(Space domain, std::vector<Rational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(values_.size()) + " values for " +
                    std::to_string(domain_.size()) + " atoms of " + domain_.describe());
  }
  for (auto& v : values_) v.canonicalize();
}

Rational RealRV::min() const {
  if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "empty random variable");
  return *std::min_element(values_.begin(), values_.end());
}

Rational RealRV::max() const {
  if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "empty random variable");
  return *std::max_element(values_.begin(), values_.end());
}

RealRV sumOnProduct(const RealRV& x, const RealRV& y) {
  const Space s = Space::product(x.domain(), y.domain());
  std::vector<Rational> v(s.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto [a, b] = s.split(i);
    v[i] = x[a] + y[b];
  }
  return RealRV(s, std::move(v));
}

PartitionSigma::PartitionSigma(Space space, std::vector<std::vector<std::size_t>> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  blockOf_.assign(space_.size(), kUnset);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) {
      throw Error(ErrorCode::InvalidArgument, "empty block in partition of " + space_.describe());
    }
    for (std::size_t a : blocks_[b]) {
      if (a >= space_.size()) {
        throw Error(ErrorCode::UnknownAtom, "partition block refers to atom index " +
                                                std::to_string(a) + " outside " +
                                                space_.describe());
      }
      if (blockOf_[a] != kUnset) {
        throw Error(ErrorCode::InvalidArgument,
                    "atom " + space_.atomLabel(a) + " appears in two partition blocks");
      }
      blockOf_[a] = b;
    }
  }
  for (std::size_t a = 0; a < blockOf_.size(); ++a) {
    if (blockOf_[a] == kUnset) {
      throw Error(ErrorCode::InvalidArgument,
                  "atom " + space_.atomLabel(a) + " is not covered by the partition");
    }
  }
}

PartitionSigma PartitionSigma::trivial(const Space& space) {
  if (space.size() == 0) return PartitionSigma(space, {});
  std::vector<std::size_t> all(space.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return PartitionSigma(space, {std::move(all)});
}

PartitionSigma PartitionSigma::discrete(const Space& space) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < space.size(); ++i) blocks.push_back({i});
  return PartitionSigma(space, std::move(blocks));
}

PartitionSigma PartitionSigma::generatedBy(const RandomVariable& z) {
  std::vector<std::vector<std::size_t>> fibres(z.codomain().size());
  for (std::size_t i = 0; i < z.domain().size(); ++i) fibres[z(i)].push_back(i);
  std::erase_if(fibres, [](const auto& f) { return f.empty(); });
  return PartitionSigma(z.domain(), std::move(fibres));
}

}  // namespace mk
