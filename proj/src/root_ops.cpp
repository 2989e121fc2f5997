#include "lsplacto/root_ops.h"

#include "lsplacto/error.h"

namespace lsplacto {

std::optional<Cut> find_cut(const RootSystem &rs, const Polyline &points,
                            int i, Direction dir) {
  ScalarPL h = h_function(rs, points, i);
  const Rational &q = h.min();
  if (!is_integer(q))
    throw Error(ErrorCode::IntegralityViolation,
                "minimum of h_" + std::to_string(i) + " is " + to_string(q));

  if (dir == Direction::Raise) {
    if (q == 0)
      return std::nullopt;
    PolylinePosition t1 = h.first_min_position();
    auto t0 = h.last_crossing_before(q + 1, t1);
    // h(0) = 0 >= q + 1, so the level is always crossed before t1.
    if (!t0)
      throw Error(ErrorCode::IntegralityViolation,
                  "no crossing of level q+1 before the minimum");
    return Cut{*t0, t1};
  }

  if (floor(h.final_value() - q) == 0)
    return std::nullopt;
  PolylinePosition p = h.last_min_position();
  auto x = h.first_crossing_after(q + 1, p);
  if (!x)
    throw Error(ErrorCode::IntegralityViolation,
                "no crossing of level q+1 after the last minimum");
  return Cut{p, *x};
}

Polyline reflect_portion(const RootSystem &rs, Polyline points, int i,
                         const Cut &cut) {
  bool begin_inserted = !is_integer(cut.begin);
  std::size_t end_index = insert_breakpoint(points, cut.end);
  std::size_t begin_index = insert_breakpoint(points, cut.begin);
  if (begin_inserted)
    ++end_index;

  Polyline out;
  out.reserve(points.size());
  out.push_back(points.front());
  for (std::size_t j = 1; j < points.size(); ++j) {
    RationalWeight d = points[j] - points[j - 1];
    if (j > begin_index && j <= end_index)
      d = rs.reflect(i, d);
    out.push_back(out.back() + d);
  }
  return out;
}

std::optional<Path> apply_root_operator(const RootSystem &rs, const Path &path,
                                        int i, Direction dir) {
  auto cut = find_cut(rs, path.breakpoints(), i, dir);
  if (!cut)
    return std::nullopt;
  return Path::from_polyline(reflect_portion(rs, path.breakpoints(), i, *cut));
}

Monomial::Monomial(std::size_t rank)
    : rank_(rank), concatenation_(Path::trivial(rank)) {}

Monomial::Monomial(std::size_t rank, std::vector<Factor> factors)
    : rank_(rank), factors_(std::move(factors)) {
  concatenation_ = Path::from_polyline(raw_polyline());
}

Weight Monomial::shape() const {
  Weight total = Weight::zero(rank_);
  for (const auto &f : factors_)
    total += f.shape;
  return total;
}

Polyline Monomial::raw_polyline(std::vector<std::size_t> *boundaries) const {
  Polyline points{RationalWeight(rank_)};
  if (boundaries) {
    boundaries->clear();
    boundaries->push_back(0);
  }
  for (const auto &f : factors_) {
    append_polyline(points, f.path.breakpoints());
    if (boundaries)
      boundaries->push_back(points.size() - 1);
  }
  return points;
}

Monomial Monomial::with_factor(std::size_t index, Path path) const {
  std::vector<Factor> factors = factors_;
  factors[index].path = std::move(path);
  return Monomial(rank_, std::move(factors));
}

Monomial single_factor(const Weight &shape, Path path) {
  std::size_t rank = shape.rank();
  return Monomial(rank, {Factor{shape, std::move(path)}});
}

std::optional<Monomial> apply_op_mono(const RootSystem &rs, const Monomial &m,
                                      int i, Direction dir) {
  std::vector<std::size_t> bounds;
  Polyline points = m.raw_polyline(&bounds);
  auto cut = find_cut(rs, points, i, dir);
  if (!cut)
    return std::nullopt;

  for (std::size_t f = 0; f < m.size(); ++f) {
    Rational lo(static_cast<std::int64_t>(bounds[f]));
    Rational hi(static_cast<std::int64_t>(bounds[f + 1]));
    if (!(lo <= cut->begin && cut->end <= hi))
      continue;

    // Reflect the same portion expressed in the factor's own polyline.
    const Path &factor = m.factors()[f].path;
    Cut local{cut->begin - lo, cut->end - lo};
    Path reflected = Path::from_polyline(
        reflect_portion(rs, factor.breakpoints(), i, local));

    // The operator applied to the factor alone must agree.
    auto alone = apply_root_operator(rs, factor, i, dir);
    if (!alone || *alone != reflected)
      throw Error(ErrorCode::FactorBoundaryViolation,
                  "operator on factor " + std::to_string(f) +
                      " disagrees with the operator on the concatenation");
    return m.with_factor(f, std::move(reflected));
  }
  throw Error(ErrorCode::FactorBoundaryViolation,
              "reflected portion [" + to_string(cut->begin) + ", " +
                  to_string(cut->end) + "] straddles a factor boundary");
}

bool is_highest(const RootSystem &rs, const Monomial &m) {
  const Polyline &points = m.concatenation().breakpoints();
  for (int i = 1; i <= rs.rank(); ++i)
    if (find_cut(rs, points, i, Direction::Raise))
      return false;
  return true;
}

RaiseResult raise_to_highest(const RootSystem &rs, const Monomial &m,
                             RaiseOrder order) {
  constexpr std::size_t kStepBudget = 100000;
  RaiseResult result{m, {}};
  const int n = rs.rank();
  for (std::size_t step = 0;; ++step) {
    if (step > kStepBudget)
      throw Error(ErrorCode::BudgetExceeded, "raise_to_highest did not stop");
    bool moved = false;
    for (int k = 0; k < n && !moved; ++k) {
      int i = order == RaiseOrder::SmallestFirst ? k + 1 : n - k;
      if (auto next = apply_op_mono(rs, result.highest, i, Direction::Raise)) {
        result.highest = std::move(*next);
        result.log.entries.push_back(i);
        moved = true;
      }
    }
    if (!moved)
      return result;
  }
}

std::optional<Monomial> lower_by_log(const RootSystem &rs, const Monomial &m,
                                     const OperatorLog &log) {
  Monomial current = m;
  for (auto it = log.entries.rbegin(); it != log.entries.rend(); ++it) {
    auto next = apply_op_mono(rs, current, *it, Direction::Lower);
    if (!next)
      return std::nullopt;
    current = std::move(*next);
  }
  return current;
}

} // namespace lsplacto
