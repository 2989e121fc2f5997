#include "doctest.h"

#include "helpers.h"
#include "lsplacto/crystal.h"

using namespace lsplacto;
using namespace lsplacto::test;

TEST_CASE("crystal of the adjoint representation of sl3") {
  auto rs = a2();
  auto g = generate_crystal(rs, straight_monomial(rs, w({1, 1})));
  REQUIRE(g.vertices.size() == 8);
  std::vector<CrystalEdge> expected{{0, 1, 1}, {0, 2, 2}, {1, 2, 3},
                                    {2, 1, 4}, {3, 2, 5}, {4, 1, 6},
                                    {5, 1, 7}, {6, 2, 7}};
  CHECK(g.edges == expected);
  CHECK(g.vertices[3].concatenation().breakpoints() ==
        Polyline{rw({0, 0}), rw({Rational(1, 2), -1}), rw({0, 0})});
  CHECK(g.vertices[5].concatenation() == Path::straight(rw({1, -2})));
  CHECK(g.vertices[7].concatenation() == Path::straight(rw({-1, -1})));
}

TEST_CASE("crystal sizes and structure") {
  auto rs = a2();
  CHECK(generate_crystal(rs, straight_monomial(rs, w({0, 1}))).vertices.size() ==
        3);
  auto c2 = build_root_system(TypeLabel::C, 2);
  auto g = generate_crystal(c2, straight_monomial(c2, w({1, 0})));
  CHECK(g.vertices.size() == 4);

  auto g2 = build_root_system(TypeLabel::G2, 2);
  auto big = generate_crystal(g2, straight_monomial(g2, w({1, 1})));
  CHECK(big.vertices.size() == 64);
  std::size_t sources = 0, sinks = 0;
  for (const auto &v : big.vertices) {
    bool any_e = false, any_f = false;
    for (int i = 1; i <= 2; ++i) {
      any_e |= apply_op_mono(g2, v, i, Direction::Raise).has_value();
      any_f |= apply_op_mono(g2, v, i, Direction::Lower).has_value();
    }
    sources += !any_e;
    sinks += !any_f;
  }
  CHECK(sources == 1);
  CHECK(sinks == 1);
  for (const auto &e : big.edges)
    CHECK(apply_op_mono(g2, big.vertices[e.to], e.index, Direction::Raise) ==
          big.vertices[e.from]);
}

TEST_CASE("generation rejects non-highest seeds") {
  auto rs = a2();
  auto seed = single_factor(Weight::fundamental(2, 1),
                            Path::straight(eps(rs, {2})));
  CHECK(error_of([&] { generate_crystal(rs, seed); }) ==
        ErrorCode::NonHighestSeed);
}

TEST_CASE("fundamental L-S paths") {
  auto rs = a2();
  auto p1 = ls_paths(rs, 1);
  CHECK(p1 == std::vector<Path>{Path::straight(eps(rs, {1})),
                                Path::straight(eps(rs, {2})),
                                Path::straight(eps(rs, {3}))});
  auto p2 = ls_paths(rs, 2);
  CHECK(p2 == std::vector<Path>{Path::straight(eps(rs, {1, 2})),
                                Path::straight(eps(rs, {1, 3})),
                                Path::straight(eps(rs, {2, 3}))});
  CHECK(ls_paths(build_root_system(TypeLabel::G2, 2), 2).size() == 14);
  CHECK(error_of([&] { ls_paths(rs, 3); }) == ErrorCode::IndexOutOfRange);

  // Every weight is w_k minus a natural combination of simple roots.
  auto c3 = build_root_system(TypeLabel::C, 3);
  for (int k = 1; k <= 3; ++k)
    for (const auto &p : ls_paths(c3, k)) {
      auto diff = c3.fundamental_weight(k).to_rational() - p.weight();
      for (const auto &x : c3.to_simple_root_coords(diff)) {
        CHECK(is_integer(x));
        CHECK(x >= Rational(0));
      }
    }
}

TEST_CASE("dominant monomials") {
  auto rs = a2();
  auto d = dominant_monomial(rs, w({1, 1}));
  REQUIRE(d.size() == 2);
  CHECK(d.factors()[0].shape == w({1, 0}));
  CHECK(d.factors()[1].shape == w({0, 1}));
  CHECK(dominant_monomial(rs, w({0, 0})).empty());
  CHECK(dominant_monomial(rs, w({0, 0})).concatenation().is_trivial());
  auto two = dominant_monomial(rs, w({2, 0}));
  CHECK(two.size() == 2);
  CHECK(two.factors()[1].shape == w({1, 0}));
  CHECK(error_of([&] { dominant_monomial(rs, w({1, -1})); }) ==
        ErrorCode::NonDominantWeight);
}

TEST_CASE("standard tableaux") {
  auto rs = a2();
  for (auto shape : dominant_weights(2, 3))
    CHECK(is_standard(rs, dominant_monomial(rs, shape)));
  CHECK(is_standard(rs, Monomial(2)));
  CHECK(is_standard(rs, mono(rs, {column(rs, 1, eps(rs, {2})),
                                  column(rs, 1, eps(rs, {1}))})));
  CHECK_FALSE(is_standard(rs, mono(rs, {column(rs, 1, eps(rs, {1})),
                                        column(rs, 1, eps(rs, {2}))})));
  // Shapes out of order are never standard.
  CHECK_FALSE(is_standard(rs, mono(rs, {column(rs, 2, eps(rs, {1, 2})),
                                        column(rs, 1, eps(rs, {1}))})));
}

TEST_CASE("monomial validation") {
  auto rs = a2();
  CHECK(error_of([&] {
          make_monomial(rs, {column(rs, 1, rw({1, 1}))});
        }) == ErrorCode::InvalidData);
  CHECK(is_ls_path(rs, Path::straight(eps(rs, {3})), w({1, 0})));
  CHECK_FALSE(is_ls_path(rs, Path::straight(eps(rs, {3})), w({0, 1})));
  CHECK(fundamental_index(w({0, 1})) == 2);
  CHECK(fundamental_index(w({1, 1})) == 0);
}

TEST_CASE("plactic equivalence") {
  auto rs = a2();
  auto m12 = mono(rs, {column(rs, 1, eps(rs, {1})), column(rs, 1, eps(rs, {2}))});
  auto m21 = mono(rs, {column(rs, 1, eps(rs, {2})), column(rs, 1, eps(rs, {1}))});
  auto col = mono(rs, {column(rs, 2, eps(rs, {1, 2}))});
  CHECK(equivalent(rs, m12, m12));
  CHECK(equivalent(rs, m12, col));
  CHECK(equivalent(rs, col, m12));
  CHECK_FALSE(equivalent(rs, m12, m21));
  CHECK_FALSE(equivalent(rs, m21, col));
}
