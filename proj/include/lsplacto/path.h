#pragma once

#include "lsplacto/rational.h"
#include "lsplacto/root_system.h"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace lsplacto {

/// Breakpoint list of a piecewise-linear path starting at the origin.  May
/// contain repeated points or collinear corners; Path::from_polyline
/// removes them.
using Polyline = std::vector<RationalWeight>;

/// Location along a polyline: j + f means fraction f of the way through
/// segment j (from breakpoint j to j + 1).  Integral positions are
/// breakpoints.
using PolylinePosition = Rational;

/// Piecewise-linear path from the origin, stored in canonical form: no
/// repeated consecutive breakpoints and no corner whose two segments point
/// in the same direction.  Two paths equal up to reparametrization have
/// identical breakpoint lists, so operator== is path equality.
class Path {
public:
  Path() = default;

  /// The trivial path (just the origin).
  static Path trivial(std::size_t rank);

  /// Straight path t -> t * end.
  static Path straight(const RationalWeight &end);

  /// Accumulates displacements from the origin, then canonicalizes.
  static Path from_segments(std::size_t rank,
                            std::span<const RationalWeight> displacements);

  static Path from_polyline(const Polyline &points);

  std::size_t rank() const { return rank_; }
  const Polyline &breakpoints() const { return points_; }
  std::size_t segment_count() const { return points_.size() - 1; }
  bool is_trivial() const { return points_.size() == 1; }

  std::vector<RationalWeight> segments() const;

  /// wt(pi) = pi(1).
  const RationalWeight &weight() const { return points_.back(); }

  friend bool operator==(const Path &, const Path &) = default;
  friend auto operator<=>(const Path &a, const Path &b) {
    return a.points_ <=> b.points_;
  }

private:
  std::size_t rank_ = 0;
  Polyline points_;
};

Path concat(const Path &a, const Path &b);

/// Breakpoints of b translated by the endpoint of `into`, appended without
/// canonicalizing.
void append_polyline(Polyline &into, const Polyline &b);

/// Point at a position along the polyline.
RationalWeight point_at(const Polyline &points, const PolylinePosition &pos);

/// Copy of `points` with a breakpoint at `pos` (no-op on breakpoints).
/// Returns the index of the breakpoint sitting at `pos`.
std::size_t insert_breakpoint(Polyline &points, const PolylinePosition &pos);

/// h(t) = <pi(t), alpha_i^vee> sampled at every breakpoint.  Between
/// breakpoints the function is the linear interpolant.
class ScalarPL {
public:
  explicit ScalarPL(std::vector<Rational> values);

  const std::vector<Rational> &values() const { return values_; }
  const Rational &min() const { return min_; }
  const Rational &final_value() const { return values_.back(); }

  Rational value_at(const PolylinePosition &pos) const;

  /// Smallest / largest position where the function equals its minimum.
  PolylinePosition first_min_position() const;
  PolylinePosition last_min_position() const;

  /// max{ t < before | h(t) = level }, if any.
  std::optional<PolylinePosition>
  last_crossing_before(const Rational &level,
                       const PolylinePosition &before) const;

  /// min{ t > after | h(t) = level }, if any.
  std::optional<PolylinePosition>
  first_crossing_after(const Rational &level,
                       const PolylinePosition &after) const;

private:
  std::vector<Rational> values_;
  Rational min_;
};

ScalarPL h_function(const RootSystem &rs, const Polyline &points, int i);
ScalarPL h_function(const RootSystem &rs, const Path &path, int i);

/// Exact length in the invariant form, as a sum  sum_s c_s * sqrt(s) over
/// distinct square-free integers s.  Square roots of distinct square-free
/// integers are linearly independent over Q, so map equality is length
/// equality.
using ExactLength = std::map<std::int64_t, Rational>;
ExactLength path_length(const RootSystem &rs, const Path &path);

} // namespace lsplacto
