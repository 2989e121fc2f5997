#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lsplacto {

/// Exact rational with 64-bit numerator and denominator, always reduced
/// with a positive denominator.  Arithmetic goes through 128-bit
/// intermediates and throws InvalidData when a result leaves 64 bits.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a) { return Rational(0) - a; }

  friend bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    return static_cast<__int128>(a.num_) * b.den_ <=>
           static_cast<__int128>(b.num_) * a.den_;
  }

private:
  static Rational reduce(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Serializes as "p/q" (denominator always present, sign on p).
std::string to_string(const Rational &r);

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational &r);

/// Largest integer not exceeding r.
std::int64_t floor(const Rational &r);

/// Point of X_R with rational coordinates in the basis of fundamental weights.
class RationalWeight {
public:
  RationalWeight() = default;
  explicit RationalWeight(std::size_t rank) : coords_(rank, Rational(0)) {}
  explicit RationalWeight(std::vector<Rational> coords)
      : coords_(std::move(coords)) {}
  RationalWeight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalWeight from_integers(const std::vector<std::int64_t> &coords);

  std::size_t rank() const { return coords_.size(); }
  const Rational &operator[](std::size_t i) const { return coords_[i]; }
  Rational &operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational> &coords() const { return coords_; }

  bool is_zero() const;

  RationalWeight &operator+=(const RationalWeight &other);
  RationalWeight &operator-=(const RationalWeight &other);
  RationalWeight &operator*=(const Rational &scale);

  friend RationalWeight operator+(RationalWeight a, const RationalWeight &b) {
    return a += b;
  }
  friend RationalWeight operator-(RationalWeight a, const RationalWeight &b) {
    return a -= b;
  }
  friend RationalWeight operator*(const Rational &s, RationalWeight a) {
    return a *= s;
  }
  friend RationalWeight operator-(RationalWeight a) {
    return a *= Rational(-1);
  }

  friend bool operator==(const RationalWeight &, const RationalWeight &) =
      default;
  friend std::strong_ordering operator<=>(const RationalWeight &a,
                                          const RationalWeight &b);

private:
  std::vector<Rational> coords_;
};

std::string to_string(const RationalWeight &v);

/// True when `b` is a positive rational multiple of `a` (both nonzero).
bool same_direction(const RationalWeight &a, const RationalWeight &b);

} // namespace lsplacto
