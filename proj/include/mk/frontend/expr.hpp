#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mk/analytics.hpp"
#include "mk/disintegration.hpp"
#include "mk/frontend/document.hpp"

namespace mk::frontend {

enum class ValueKind {
  Space,
  Measure,
  Kernel,
  RV,
  RealRV,
  Partition,
  Chain,
  Number,
  Real,
  ExtReal,
  Bool,
  Density,
};

std::string_view valueKindName(ValueKind kind);

/// Static type of an expression. Kernels and maps use dom/cod; measures,
/// densities, real variables and partitions use dom as their space; a
/// chain's dom is its start space.
struct Type {
  ValueKind kind = ValueKind::Bool;
  Space dom;
  Space cod;

  friend bool operator==(const Type& a, const Type& b) = default;
};

std::string describeType(const Type& type);

struct Expr {
  enum class Kind { Name, Number, Call, Product };

  Kind kind = Kind::Name;
  std::string text;  // name or callee
  Rational number;
  std::vector<Expr> args;
  std::size_t line = 1;
  std::size_t column = 1;
  Type type;  // set by the typechecker
};

/// Parses and typechecks `text` against `doc`. Throws SyntaxError,
/// UnknownName, ArityError or TypeError.
Expr parseExpr(std::string_view text, const Document& doc);

using Value = std::variant<Space, Measure, Kernel, RandomVariable, RealRV, PartitionSigma,
                           const KernelChain*, Rational, double, ExtReal, bool, DensityTable>;

/// Evaluates a typechecked expression.
Value evalExpr(const Expr& expr, const Document& doc);

/// The type a value actually has; agrees with the checker's prediction.
Type typeOfValue(const Value& value);

/// Human-readable rendering; kernels and measures use `.kd` syntax.
std::string formatValue(const Value& value);

/// Names of all builtins, sorted.
std::vector<std::string> builtinNames();

}  // namespace mk::frontend
