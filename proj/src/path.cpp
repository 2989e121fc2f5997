#include "lsplacto/path.h"

#include "lsplacto/error.h"

#include <cassert>

namespace lsplacto {

Path Path::trivial(std::size_t rank) {
  Path p;
  p.rank_ = rank;
  p.points_.push_back(RationalWeight(rank));
  return p;
}

Path Path::straight(const RationalWeight &end) {
  Polyline points{RationalWeight(end.rank()), end};
  return from_polyline(points);
}

Path Path::from_segments(std::size_t rank,
                         std::span<const RationalWeight> displacements) {
  Polyline points{RationalWeight(rank)};
  for (const auto &d : displacements)
    points.push_back(points.back() + d);
  return from_polyline(points);
}

Path Path::from_polyline(const Polyline &points) {
  assert(!points.empty() && points.front().is_zero());
  Path p;
  p.rank_ = points.front().rank();
  p.points_.push_back(points.front());
  RationalWeight last_dir;
  for (std::size_t j = 1; j < points.size(); ++j) {
    RationalWeight d = points[j] - p.points_.back();
    if (d.is_zero())
      continue;
    if (p.points_.size() > 1 && same_direction(last_dir, d)) {
      p.points_.back() = points[j];
      last_dir += d;
      continue;
    }
    p.points_.push_back(points[j]);
    last_dir = std::move(d);
  }
  return p;
}

std::vector<RationalWeight> Path::segments() const {
  std::vector<RationalWeight> out;
  out.reserve(points_.size() - 1);
  for (std::size_t j = 1; j < points_.size(); ++j)
    out.push_back(points_[j] - points_[j - 1]);
  return out;
}

void append_polyline(Polyline &into, const Polyline &b) {
  RationalWeight offset = into.back();
  for (std::size_t j = 1; j < b.size(); ++j)
    into.push_back(offset + b[j]);
}

Path concat(const Path &a, const Path &b) {
  Polyline points = a.breakpoints();
  append_polyline(points, b.breakpoints());
  return Path::from_polyline(points);
}

namespace {

std::size_t segment_of(const PolylinePosition &pos,
                       [[maybe_unused]] std::size_t points) {
  auto j = static_cast<std::size_t>(floor(pos));
  assert(pos >= 0 && j < points);
  return j;
}

} // namespace

RationalWeight point_at(const Polyline &points, const PolylinePosition &pos) {
  auto j = segment_of(pos, points.size());
  Rational frac = pos - Rational(static_cast<std::int64_t>(j));
  if (frac == 0)
    return points[j];
  return points[j] + frac * (points[j + 1] - points[j]);
}

std::size_t insert_breakpoint(Polyline &points, const PolylinePosition &pos) {
  auto j = segment_of(pos, points.size());
  if (pos == Rational(static_cast<std::int64_t>(j)))
    return j;
  RationalWeight p = point_at(points, pos);
  points.insert(points.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                std::move(p));
  return j + 1;
}

ScalarPL::ScalarPL(std::vector<Rational> values) : values_(std::move(values)) {
  assert(!values_.empty());
  min_ = values_.front();
  for (const auto &v : values_)
    if (v < min_)
      min_ = v;
}

Rational ScalarPL::value_at(const PolylinePosition &pos) const {
  auto j = segment_of(pos, values_.size());
  Rational frac = pos - Rational(static_cast<std::int64_t>(j));
  if (frac == 0)
    return values_[j];
  return values_[j] + frac * (values_[j + 1] - values_[j]);
}

PolylinePosition ScalarPL::first_min_position() const {
  for (std::size_t j = 0; j < values_.size(); ++j)
    if (values_[j] == min_)
      return Rational(static_cast<std::int64_t>(j));
  return 0;
}

PolylinePosition ScalarPL::last_min_position() const {
  for (std::size_t j = values_.size(); j-- > 0;)
    if (values_[j] == min_)
      return Rational(static_cast<std::int64_t>(j));
  return 0;
}

std::optional<PolylinePosition>
ScalarPL::last_crossing_before(const Rational &level,
                               const PolylinePosition &before) const {
  for (std::size_t j = values_.size() - 1; j-- > 0;) {
    Rational lo(static_cast<std::int64_t>(j));
    if (lo >= before)
      continue;
    Rational hi = std::min(lo + 1, before);
    Rational h_lo = values_[j];
    Rational h_hi = value_at(hi);
    if (h_hi == level && hi < before)
      return hi;
    if ((h_lo < level && level < h_hi) || (h_hi < level && level < h_lo))
      return lo + (level - h_lo) / (values_[j + 1] - values_[j]);
    if (h_lo == level)
      return lo;
  }
  return std::nullopt;
}

std::optional<PolylinePosition>
ScalarPL::first_crossing_after(const Rational &level,
                               const PolylinePosition &after) const {
  for (std::size_t j = 0; j + 1 < values_.size(); ++j) {
    Rational hi(static_cast<std::int64_t>(j + 1));
    if (hi <= after)
      continue;
    Rational lo = std::max(Rational(static_cast<std::int64_t>(j)), after);
    Rational h_lo = value_at(lo);
    Rational h_hi = values_[j + 1];
    if (h_lo == level && lo > after)
      return lo;
    if ((h_lo < level && level < h_hi) || (h_hi < level && level < h_lo))
      return Rational(static_cast<std::int64_t>(j)) +
             (level - values_[j]) / (values_[j + 1] - values_[j]);
    if (h_hi == level)
      return hi;
  }
  return std::nullopt;
}

ScalarPL h_function(const RootSystem &rs, const Polyline &points, int i) {
  rs.check_index(i);
  std::vector<Rational> values;
  values.reserve(points.size());
  for (const auto &p : points)
    values.push_back(rs.pairing(p, i));
  return ScalarPL(std::move(values));
}

ScalarPL h_function(const RootSystem &rs, const Path &path, int i) {
  return h_function(rs, path.breakpoints(), i);
}

namespace {

/// Splits n = m^2 * s with s square-free; returns (m, s).
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  std::int64_t m = 1, s = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      m *= p;
    }
    if (n % p == 0) {
      n /= p;
      s *= p;
    }
  }
  return {m, s * n};
}

} // namespace

ExactLength path_length(const RootSystem &rs, const Path &path) {
  ExactLength total;
  for (const auto &d : path.segments()) {
    Rational q = rs.norm_squared(d);
    // sqrt(a/b) = sqrt(a*b) / b
    auto [m, s] = split_square(q.numerator() * q.denominator());
    total[s] += Rational(m, q.denominator());
  }
  return total;
}

} // namespace lsplacto
