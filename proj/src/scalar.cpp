#include "mk/scalar.hpp"

#include <cctype>
#include <limits>

#include "mk/error.hpp"

namespace mk {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroOverZero: return "ZeroOverZero";
    case ErrorCode::InfiniteTimesZero: return "InfiniteTimesZero";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InfiniteWeight: return "InfiniteWeight";
    case ErrorCode::NoMarkovIntoEmpty: return "NoMarkovIntoEmpty";
    case ErrorCode::NotMarkov: return "NotMarkov";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotAProductCodomain: return "NotAProductCodomain";
    case ErrorCode::EmptyCodomainZ: return "EmptyCodomainZ";
    case ErrorCode::NotAProbabilityMeasure: return "NotAProbabilityMeasure";
    case ErrorCode::HorizonOutOfRange: return "HorizonOutOfRange";
    case ErrorCode::MissingInitialMeasure: return "MissingInitialMeasure";
    case ErrorCode::NonzeroMean: return "NonzeroMean";
    case ErrorCode::GridViolation: return "GridViolation";
    case ErrorCode::ScopeMismatch: return "ScopeMismatch";
    case ErrorCode::NotCertified: return "NotCertified";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::WeightCountMismatch: return "WeightCountMismatch";
    case ErrorCode::TypeError: return "TypeError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ArityError: return "ArityError";
  }
  return "Unknown";
}

namespace {

bool isDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!isDigits(num) || !isDigits(den)) {
    throw Error(ErrorCode::SyntaxError,
                "expected a rational p/q or an integer, got '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::ZeroOverZero, "zero denominator in '" + std::string(text) + "'");
  }
  Rational value(n, d);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string rationalToString(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Scalar::Scalar(unsigned long numerator, unsigned long denominator) {
  if (denominator == 0) {
    if (numerator == 0) throw Error(ErrorCode::ZeroOverZero, "0/0");
    infinite_ = true;
    return;
  }
  value_ = Rational(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(const Rational& value) : value_(value) {
  value_.canonicalize();
  if (sgn(value_) < 0) {
    throw Error(ErrorCode::NegativeValue, rationalToString(value_) + " is negative");
  }
}

Scalar Scalar::infinity() {
  Scalar s;
  s.infinite_ = true;
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return Scalar(parseRational(text));
}

const Rational& Scalar::rational() const {
  if (infinite_) throw Error(ErrorCode::InfiniteWeight, "value is infinite");
  return value_;
}

mpz_class Scalar::numerator() const { return rational().get_num(); }
mpz_class Scalar::denominator() const { return rational().get_den(); }

double Scalar::toDouble() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return value_.get_d();
}

std::string Scalar::toString() const {
  if (infinite_) return "inf";
  return rationalToString(value_);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += other.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (infinite_ || other.infinite_) {
    if (isZero() || other.isZero()) {
      throw Error(ErrorCode::InfiniteTimesZero, "inf * 0 is undefined");
    }
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ *= other.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.isZero()) {
    if (isZero()) throw Error(ErrorCode::ZeroOverZero, "0/0");
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  if (other.infinite_) {
    if (infinite_) throw Error(ErrorCode::InvalidArgument, "inf/inf is undefined");
    value_ = 0;
    return *this;
  }
  if (infinite_) return *this;
  value_ /= other.value_;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace mk
