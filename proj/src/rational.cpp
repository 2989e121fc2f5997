#include "lsplacto/rational.h"

#include "lsplacto/error.h"

#include <charconv>

namespace lsplacto {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::UnsupportedType:
    return "UnsupportedType";
  case ErrorCode::IndexOutOfRange:
    return "IndexOutOfRange";
  case ErrorCode::NonDominantWeight:
    return "NonDominantWeight";
  case ErrorCode::IntegralityViolation:
    return "IntegralityViolation";
  case ErrorCode::FactorBoundaryViolation:
    return "FactorBoundaryViolation";
  case ErrorCode::NonHighestSeed:
    return "NonHighestSeed";
  case ErrorCode::UnknownGenerator:
    return "UnknownGenerator";
  case ErrorCode::BudgetExceeded:
    return "BudgetExceeded";
  case ErrorCode::LetterOutOfRange:
    return "LetterOutOfRange";
  case ErrorCode::InvalidData:
    return "InvalidData";
  }
  return "UnknownError";
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw Error(ErrorCode::InvalidData, "rational with zero denominator");
  *this = reduce(num, den);
}

Rational Rational::reduce(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
  if (num < lo || num > hi || den > hi)
    throw Error(ErrorCode::InvalidData, "rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational &Rational::operator+=(const Rational &o) {
  return *this = reduce(static_cast<__int128>(num_) * o.den_ +
                            static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational &Rational::operator-=(const Rational &o) {
  return *this = reduce(static_cast<__int128>(num_) * o.den_ -
                            static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational &Rational::operator*=(const Rational &o) {
  return *this = reduce(static_cast<__int128>(num_) * o.num_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.num_ == 0)
    throw Error(ErrorCode::InvalidData, "division by zero");
  return *this = reduce(static_cast<__int128>(num_) * o.den_,
                        static_cast<__int128>(den_) * o.num_);
}

std::string to_string(const Rational &r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (!text.empty() && *first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw Error(ErrorCode::InvalidData,
                "malformed rational '" + std::string(whole) + "'");
  return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0)
    throw Error(ErrorCode::InvalidData,
                "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

bool is_integer(const Rational &r) { return r.denominator() == 1; }

std::int64_t floor(const Rational &r) {
  auto q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0)
    --q;
  return q;
}

RationalWeight
RationalWeight::from_integers(const std::vector<std::int64_t> &coords) {
  RationalWeight v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    v.coords_[i] = Rational(coords[i]);
  return v;
}

bool RationalWeight::is_zero() const {
  for (const auto &c : coords_)
    if (c != 0)
      return false;
  return true;
}

RationalWeight &RationalWeight::operator+=(const RationalWeight &other) {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] += other.coords_[i];
  return *this;
}

RationalWeight &RationalWeight::operator-=(const RationalWeight &other) {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] -= other.coords_[i];
  return *this;
}

RationalWeight &RationalWeight::operator*=(const Rational &scale) {
  for (auto &c : coords_)
    c *= scale;
  return *this;
}

std::strong_ordering operator<=>(const RationalWeight &a,
                                 const RationalWeight &b) {
  if (auto c = a.rank() <=> b.rank(); c != 0)
    return c;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i] < b[i])
      return std::strong_ordering::less;
    if (b[i] < a[i])
      return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const RationalWeight &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i)
      out += ",";
    out += is_integer(v[i]) ? std::to_string(v[i].numerator()) : to_string(v[i]);
  }
  return out + ")";
}

bool same_direction(const RationalWeight &a, const RationalWeight &b) {
  // Find a pivot coordinate of a, derive the scale, then check all coords.
  std::size_t pivot = a.rank();
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == a.rank() || b[pivot] == 0)
    return false;
  Rational scale = b[pivot] / a[pivot];
  if (scale <= 0)
    return false;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a[i] * scale != b[i])
      return false;
  return true;
}

} // namespace lsplacto
