#include "mk/space.hpp"

#include <unordered_map>

#include "mk/error.hpp"

namespace mk {

struct Space::Node {
  Kind kind = Kind::Unit;
  std::string name;
  std::vector<std::string> atoms;
  std::unordered_map<std::string, std::size_t> index;
  Space left;
  Space right;
  std::size_t size = 1;
};

namespace {

const std::string kUnitName = "Unit";

// Product atoms are written "(l,r)"; the split comma is the one at depth 1.
std::optional<std::pair<std::string_view, std::string_view>> splitPairLabel(
    std::string_view label) {
  if (label.size() < 2 || label.front() != '(' || label.back() != ')') return std::nullopt;
  const std::string_view inner = label.substr(1, label.size() - 2);
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const char c = inner[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    } else if (c == ',' && depth == 0) {
      return std::make_pair(inner.substr(0, i), inner.substr(i + 1));
    }
  }
  return std::nullopt;
}

}  // namespace

Space::Space() : node_(nullptr) {}

Space Space::base(std::string name, std::vector<std::string> atoms) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Base;
  node->name = std::move(name);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!node->index.emplace(atoms[i], i).second) {
      throw Error(ErrorCode::DuplicateName,
                  "atom '" + atoms[i] + "' repeated in space " + node->name);
    }
  }
  node->atoms = std::move(atoms);
  node->size = node->atoms.size();
  return Space(std::move(node));
}

Space Space::unit() { return Space(); }

Space Space::product(const Space& left, const Space& right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  node->left = left;
  node->right = right;
  node->size = left.size() * right.size();
  return Space(std::move(node));
}

Space::Kind Space::kind() const noexcept { return node_ ? node_->kind : Kind::Unit; }

const std::string& Space::name() const noexcept {
  return node_ ? node_->name : kUnitName;
}

const Space& Space::left() const {
  if (kind() != Kind::Product) {
    throw Error(ErrorCode::NotAProductCodomain, describe() + " is not a product space");
  }
  return node_->left;
}

const Space& Space::right() const {
  if (kind() != Kind::Product) {
    throw Error(ErrorCode::NotAProductCodomain, describe() + " is not a product space");
  }
  return node_->right;
}

std::size_t Space::size() const noexcept { return node_ ? node_->size : 1; }

std::size_t Space::pair(std::size_t leftIndex, std::size_t rightIndex) const {
  return leftIndex * right().size() + rightIndex;
}

std::pair<std::size_t, std::size_t> Space::split(std::size_t index) const {
  const std::size_t n = right().size();
  return {index / n, index % n};
}

std::string Space::atomLabel(std::size_t index) const {
  switch (kind()) {
    case Kind::Unit:
      return "()";
    case Kind::Base:
      return node_->atoms.at(index);
    case Kind::Product: {
      const auto [l, r] = split(index);
      return "(" + node_->left.atomLabel(l) + "," + node_->right.atomLabel(r) + ")";
    }
  }
  return {};
}

std::optional<std::size_t> Space::findAtom(std::string_view label) const {
  switch (kind()) {
    case Kind::Unit:
      if (label == "()") return 0;
      return std::nullopt;
    case Kind::Base: {
      const auto it = node_->index.find(std::string(label));
      if (it == node_->index.end()) return std::nullopt;
      return it->second;
    }
    case Kind::Product: {
      const auto parts = splitPairLabel(label);
      if (!parts) return std::nullopt;
      const auto l = node_->left.findAtom(parts->first);
      const auto r = node_->right.findAtom(parts->second);
      if (!l || !r) return std::nullopt;
      return pair(*l, *r);
    }
  }
  return std::nullopt;
}

std::size_t Space::atom(std::string_view label) const {
  const auto found = findAtom(label);
  if (!found) {
    throw Error(ErrorCode::UnknownAtom,
                "'" + std::string(label) + "' is not an atom of " + describe());
  }
  return *found;
}

std::string Space::describe() const {
  switch (kind()) {
    case Kind::Unit:
      return "Unit";
    case Kind::Base:
      return node_->name;
    case Kind::Product:
      return "(" + node_->left.describe() + " * " + node_->right.describe() + ")";
  }
  return {};
}

bool operator==(const Space& a, const Space& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Space::Kind::Unit:
      return true;
    case Space::Kind::Base:
      return a.node_->name == b.node_->name && a.node_->atoms == b.node_->atoms;
    case Space::Kind::Product:
      return a.node_->size == b.node_->size && a.node_->left == b.node_->left &&
             a.node_->right == b.node_->right;
  }
  return false;
}

}  // namespace mk
