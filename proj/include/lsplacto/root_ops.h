#pragma once

#include "lsplacto/path.h"
#include "lsplacto/root_system.h"

#include <optional>
#include <vector>

namespace lsplacto {

enum class Direction { Raise, Lower };

/// Portion [begin, end] of a polyline that a root operator reflects.
struct Cut {
  PolylinePosition begin;
  PolylinePosition end;
};

/// Cut points of e_i (Raise) or f_i (Lower) on an arbitrary polyline, or
/// nullopt when the operator vanishes.  Throws IntegralityViolation when the
/// minimum of h_i is not an integer.
std::optional<Cut> find_cut(const RootSystem &rs, const Polyline &points,
                            int i, Direction dir);

/// Polyline with the displacements inside `cut` replaced by their images
/// under the simple reflection s_i.  Not canonicalized.
Polyline reflect_portion(const RootSystem &rs, Polyline points, int i,
                         const Cut &cut);

std::optional<Path> apply_root_operator(const RootSystem &rs, const Path &path,
                                        int i, Direction dir);

inline std::optional<Path> apply_e(const RootSystem &rs, const Path &path,
                                   int i) {
  return apply_root_operator(rs, path, i, Direction::Raise);
}

inline std::optional<Path> apply_f(const RootSystem &rs, const Path &path,
                                   int i) {
  return apply_root_operator(rs, path, i, Direction::Lower);
}

struct Factor {
  Weight shape;
  Path path;

  friend bool operator==(const Factor &, const Factor &) = default;
  friend auto operator<=>(const Factor &, const Factor &) = default;
};

/// Ordered concatenation of L-S paths, each tagged with its shape.  Holds
/// the concatenated path alongside the factors.  Membership of each factor
/// in its crystal is checked by make_monomial (crystal.h); this type only
/// keeps the cached concatenation consistent.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t rank);
  Monomial(std::size_t rank, std::vector<Factor> factors);

  std::size_t rank() const { return rank_; }
  const std::vector<Factor> &factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const Path &concatenation() const { return concatenation_; }

  /// Sum of the factor shapes.
  Weight shape() const;
  RationalWeight weight() const { return concatenation_.weight(); }

  /// Breakpoints of all factors laid end to end (no canonicalization), with
  /// the polyline position of every factor boundary.
  Polyline raw_polyline(std::vector<std::size_t> *boundaries = nullptr) const;

  Monomial with_factor(std::size_t index, Path path) const;

  friend bool operator==(const Monomial &a, const Monomial &b) {
    return a.factors_ == b.factors_;
  }
  friend auto operator<=>(const Monomial &a, const Monomial &b) {
    return a.factors_ <=> b.factors_;
  }

private:
  std::size_t rank_ = 0;
  std::vector<Factor> factors_;
  Path concatenation_;
};

Monomial single_factor(const Weight &shape, Path path);

/// Root operator on a monomial.  The reflected portion of the concatenation
/// must lie inside one factor; that factor alone changes.  Throws
/// FactorBoundaryViolation otherwise.
std::optional<Monomial> apply_op_mono(const RootSystem &rs, const Monomial &m,
                                      int i, Direction dir);

/// Raising steps in application order.
struct OperatorLog {
  std::vector<int> entries;

  friend bool operator==(const OperatorLog &, const OperatorLog &) = default;
};

struct RaiseResult {
  Monomial highest;
  OperatorLog log;
};

enum class RaiseOrder { SmallestFirst, LargestFirst };

/// Applies e_i at the smallest (or largest) index that does not vanish until
/// every e_i vanishes.
RaiseResult raise_to_highest(const RootSystem &rs, const Monomial &m,
                             RaiseOrder order = RaiseOrder::SmallestFirst);

/// Replays `log` backwards with lowering operators; nullopt if any step
/// vanishes.
std::optional<Monomial> lower_by_log(const RootSystem &rs, const Monomial &m,
                                     const OperatorLog &log);

bool is_highest(const RootSystem &rs, const Monomial &m);

} // namespace lsplacto
