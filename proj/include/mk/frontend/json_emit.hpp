#pragma once

#include <string>

#include <json.hpp>

#include "mk/frontend/expr.hpp"

namespace mk::frontend {

using Json = nlohmann::ordered_json;

/// Rationals are emitted as "p/q" strings so that no precision is lost.
Json jsonRational(const Rational& q);
/// Floats are rounded to 12 significant digits; infinities become "inf".
Json jsonReal(double v);
Json jsonExtReal(const ExtReal& v);

Json valueToJson(const Value& value);

/// Compact single-line rendering with a trailing newline. Keys keep their
/// insertion order, so equal inputs give byte-identical text.
std::string dumpJson(const Json& json);

}  // namespace mk::frontend
