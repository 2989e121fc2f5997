#include "doctest.h"

#include "helpers.h"
#include "lsplacto/root_ops.h"

using namespace lsplacto;
using namespace lsplacto::test;

TEST_CASE("bare path operators") {
  auto rs = a2();
  auto lambda = Path::straight(rw({1, 1}));
  CHECK_FALSE(apply_e(rs, lambda, 1).has_value());
  CHECK_FALSE(apply_e(rs, lambda, 2).has_value());

  auto pi8 = Path::straight(rw({-1, -1}));
  auto pi6 = Path::straight(rw({1, -2}));
  CHECK(apply_e(rs, pi8, 1) == pi6);

  CHECK(apply_e(rs, Path::straight(eps(rs, {2})), 1) ==
        Path::straight(eps(rs, {1})));

  auto pi2 = apply_f(rs, lambda, 1);
  REQUIRE(pi2.has_value());
  CHECK(*pi2 == Path::straight(rs.simple_root(2)));

  auto pi4 = apply_f(rs, *pi2, 2);
  REQUIRE(pi4.has_value());
  CHECK(pi4->breakpoints() ==
        Polyline{rw({0, 0}), rw({Rational(1, 2), -1}), rw({0, 0})});

  CHECK_FALSE(apply_f(rs, pi6, 2).has_value());
}

TEST_CASE("operator errors") {
  auto rs = a2();
  CHECK(error_of([&] {
          apply_f(rs, Path::straight(rw({Rational(-1, 2), 0})), 1);
        }) == ErrorCode::IntegralityViolation);
  CHECK(error_of([&] { apply_f(rs, Path::straight(rw({1, 0})), 3); }) ==
        ErrorCode::IndexOutOfRange);

  // Two half-columns: lowering reflects a stretch crossing the boundary.
  Weight w1 = Weight::fundamental(2, 1);
  Monomial halves(2, {Factor{w1, Path::straight(rw({Rational(1, 2), 0}))},
                      Factor{w1, Path::straight(rw({Rational(1, 2), 0}))}});
  CHECK(error_of([&] { apply_op_mono(rs, halves, 1, Direction::Lower); }) ==
        ErrorCode::FactorBoundaryViolation);
}

TEST_CASE("monomial operators") {
  auto rs = a2();
  auto m = mono(rs, {column(rs, 1, eps(rs, {1})), column(rs, 2, eps(rs, {1, 2}))});
  auto lowered = apply_op_mono(rs, m, 2, Direction::Lower);
  REQUIRE(lowered.has_value());
  CHECK(*lowered == mono(rs, {column(rs, 1, eps(rs, {1})),
                              column(rs, 2, eps(rs, {1, 3}))}));

  for (int i = 1; i <= 2; ++i)
    CHECK_FALSE(apply_op_mono(rs, m, i, Direction::Raise).has_value());

  auto n = mono(rs, {column(rs, 2, eps(rs, {2, 3})), column(rs, 1, eps(rs, {1}))});
  auto raised = apply_op_mono(rs, n, 1, Direction::Raise);
  REQUIRE(raised.has_value());
  CHECK(*raised == mono(rs, {column(rs, 2, eps(rs, {1, 3})),
                             column(rs, 1, eps(rs, {1}))}));
}

TEST_CASE("raising to the highest monomial") {
  auto rs = a2();
  auto d = dominant_monomial(rs, w({1, 1}));
  auto r0 = raise_to_highest(rs, d);
  CHECK(r0.highest == d);
  CHECK(r0.log.entries.empty());

  auto m = mono(rs, {column(rs, 1, eps(rs, {2})), column(rs, 1, eps(rs, {3}))});
  auto r1 = raise_to_highest(rs, m);
  CHECK(r1.highest ==
        mono(rs, {column(rs, 1, eps(rs, {1})), column(rs, 1, eps(rs, {2}))}));
  CHECK(r1.log.entries == std::vector<int>{1, 2});
  CHECK(lower_by_log(rs, r1.highest, r1.log) == m);

  auto n = mono(rs, {column(rs, 2, eps(rs, {2, 3})), column(rs, 1, eps(rs, {1}))});
  auto r2 = raise_to_highest(rs, n);
  CHECK(r2.highest ==
        mono(rs, {column(rs, 2, eps(rs, {1, 2})), column(rs, 1, eps(rs, {1}))}));
  CHECK(r2.log.entries == std::vector<int>{1, 2});
  CHECK(is_highest(rs, r2.highest));
  CHECK_FALSE(is_highest(rs, n));
}

TEST_CASE("lowering by a log") {
  auto rs = a2();
  auto d = dominant_monomial(rs, w({1, 1}));
  CHECK(lower_by_log(rs, d, OperatorLog{}) == d);
  auto out = lower_by_log(rs, d, OperatorLog{{1, 2}});
  CHECK(out == mono(rs, {column(rs, 1, eps(rs, {2})),
                         column(rs, 2, eps(rs, {1, 3}))}));
  // f_1 vanishes on pi_{w1} * pi_{w2} after f_1 f_1.
  CHECK_FALSE(lower_by_log(rs, d, OperatorLog{{1, 1, 1}}).has_value());
}
