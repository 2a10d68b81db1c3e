#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mk {

/// A finite measurable space with the discrete sigma-algebra.
///
/// A space is either a named base space with an ordered list of atom labels,
/// the one-point space Unit (atom "()"), or a binary product. Products are
/// not associative: (A * B) * C and A * (B * C) are different spaces and are
/// related only through the associator kernels. Atoms are addressed by index;
/// product atoms are enumerated row-major, left index varying slowest.
///
/// Spaces are immutable and cheap to copy (shared structure).
class Space {
 public:
  enum class Kind { Base, Unit, Product };

  /// Empty Unit-less placeholder; equal to Space::unit().
  Space();

  static Space base(std::string name, std::vector<std::string> atoms);
  static Space unit();
  static Space product(const Space& left, const Space& right);

  Kind kind() const noexcept;
  bool isProduct() const noexcept { return kind() == Kind::Product; }

  /// Name of a base space; "Unit" for the unit; empty for products.
  const std::string& name() const noexcept;
  const Space& left() const;
  const Space& right() const;

  std::size_t size() const noexcept;

  /// Row-major pairing and its inverse for product spaces.
  std::size_t pair(std::size_t leftIndex, std::size_t rightIndex) const;
  std::pair<std::size_t, std::size_t> split(std::size_t index) const;

  /// "good", "()", "(good,bad)", ...
  std::string atomLabel(std::size_t index) const;
  std::optional<std::size_t> findAtom(std::string_view label) const;
  /// Like findAtom but throws UnknownAtom.
  std::size_t atom(std::string_view label) const;

  /// Type-level rendering: "Weather", "Unit", "(A * (B * C))".
  std::string describe() const;

  friend bool operator==(const Space& a, const Space& b);

 private:
  struct Node;
  explicit Space(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace mk
