#include "doctest.h"

#include <random>

#include "helpers.h"
#include "lsplacto/path.h"

using namespace lsplacto;
using namespace lsplacto::test;

TEST_CASE("canonical form") {
  CHECK(Path::from_segments(2, {}).breakpoints() == Polyline{rw({0, 0})});
  CHECK(Path::from_segments(2, {}).is_trivial());

  std::vector<RationalWeight> twice{rw({1, 0}), rw({1, 0})};
  CHECK(Path::from_segments(2, twice).breakpoints() ==
        Polyline{rw({0, 0}), rw({2, 0})});

  std::vector<RationalWeight> back{rw({Rational(1, 2), -1}),
                                   rw({Rational(-1, 2), 1})};
  auto pi4 = Path::from_segments(2, back);
  CHECK(pi4.breakpoints() ==
        Polyline{rw({0, 0}), rw({Rational(1, 2), -1}), rw({0, 0})});
  CHECK(pi4.weight() == rw({0, 0}));

  std::vector<RationalWeight> with_zero{rw({1, 0}), rw({0, 0}), rw({0, 1})};
  CHECK(Path::from_segments(2, with_zero).segment_count() == 2);

  // Re-canonicalizing a path's own segments is a no-op.
  auto segs = pi4.segments();
  CHECK(Path::from_segments(2, segs) == pi4);
}

TEST_CASE("equality up to reparametrization") {
  auto rs = a2();
  auto e1 = Path::straight(eps(rs, {1}));
  std::vector<RationalWeight> halves{Rational(1, 2) * eps(rs, {1}),
                                     Rational(1, 2) * eps(rs, {1})};
  CHECK(Path::from_segments(2, halves) == e1);
  CHECK(Path::trivial(2) == Path::trivial(2));
  CHECK_FALSE(e1 == Path::straight(eps(rs, {2})));
}

TEST_CASE("concatenation") {
  auto rs = a2();
  auto e1 = Path::straight(eps(rs, {1}));
  auto e2 = Path::straight(eps(rs, {2}));
  CHECK(concat(Path::trivial(2), e1) == e1);
  CHECK(concat(e1, Path::trivial(2)) == e1);
  CHECK(concat(e1, e2).breakpoints() ==
        Polyline{rw({0, 0}), rw({1, 0}), rw({0, 1})});
  CHECK(concat(e1, e1) == Path::straight(rw({2, 0})));
}

TEST_CASE("h function") {
  auto rs = a2();
  auto h = h_function(rs, Path::straight(rw({1, 1})), 1);
  CHECK(h.values() == std::vector<Rational>{0, 1});
  CHECK(h.min() == Rational(0));

  auto bent = concat(Path::straight(eps(rs, {2})), Path::straight(eps(rs, {1})));
  auto h2 = h_function(rs, bent, 1);
  CHECK(h2.values() == std::vector<Rational>{0, -1, 0});
  CHECK(h2.min() == Rational(-1));
  CHECK(h2.first_min_position() == Rational(1));
  CHECK(h2.last_min_position() == Rational(1));
  CHECK(h2.value_at(Rational(1, 2)) == Rational(-1, 2));
  CHECK(h2.last_crossing_before(0, 1) == Rational(0));
  CHECK(h2.first_crossing_after(0, 1) == Rational(2));
  CHECK_FALSE(h2.first_crossing_after(1, 0).has_value());

  std::vector<RationalWeight> back{rw({Rational(1, 2), -1}),
                                   rw({Rational(-1, 2), 1})};
  auto h3 = h_function(rs, Path::from_segments(2, back), 2);
  CHECK(h3.values() == std::vector<Rational>{0, -1, 0});
}

TEST_CASE("polyline positions") {
  Polyline p{rw({0, 0}), rw({2, 0}), rw({2, 2})};
  CHECK(point_at(p, Rational(1, 2)) == rw({1, 0}));
  CHECK(point_at(p, Rational(3, 2)) == rw({2, 1}));
  auto idx = insert_breakpoint(p, Rational(3, 2));
  CHECK(idx == 2);
  CHECK(p.size() == 4);
  CHECK(insert_breakpoint(p, Rational(1)) == 1);
  CHECK(p.size() == 4);
}

TEST_CASE("concatenation laws on random paths") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), len(0, 4);
  auto random_path = [&] {
    std::vector<RationalWeight> segs(len(rng));
    for (auto &s : segs)
      s = rw({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    return Path::from_segments(2, segs);
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_path(), b = random_path(), c = random_path();
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, b).weight() == a.weight() + b.weight());
  }
}

TEST_CASE("exact length") {
  auto rs = a2();
  // |eps_1|^2 = 2/3 in the form with (alpha_i, alpha_i) = 2.
  auto len = path_length(rs, Path::straight(eps(rs, {1})));
  CHECK(len.size() == 1);
  CHECK(len.begin()->first == 6);
  CHECK(len.begin()->second == Rational(1, 3));
  CHECK(path_length(rs, Path::trivial(2)).empty());
}
