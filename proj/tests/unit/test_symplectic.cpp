#include "doctest.h"
#include "helpers.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/symplectic.hpp"

using namespace sumprod;

TEST_CASE("omega basics") {
  const Prime p(7);
  CHECK(omega(p, {1, 0}, {0, 1}) == 1);
  CHECK(omega(p, {0, 1}, {1, 0}) == 6);
  CHECK(direction(p, {0, 3}).is_infinity());
  CHECK(direction(p, {2, 4}).value().value == 2);
  CHECK_THROWS_AS(direction(p, {0, 0}), Error);
}

TEST_CASE("quad identity with the sign worked out") {
  const Prime p(7);
  const QuadIdentity q = quad_identity(p, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(q.lhs == p.elem(-2).value);
  CHECK(q.expanded == 2);
  CHECK(q.holds);
}

TEST_CASE("random quads satisfy the identity and the slope check") {
  const Prime p(101);
  SplitMix64 g(5);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    auto pt = [&] { return Point2{static_cast<u32>(g.below(101)), static_cast<u32>(g.below(101))}; };
    const Quad q{pt(), pt(), pt(), pt()};
    CHECK(quad_identity(p, q).holds);
    bool ok = false;
    try {
      ok = slope_cross_ratio_check(p, q);
      ++checked;
    } catch (const Error& e) {
      ok = e.kind() == ErrorKind::DegenerateQuadruple || e.kind() == ErrorKind::InvalidArgument;
    }
    CHECK(ok);
  }
  CHECK(checked > 400);
}

TEST_CASE("phi fibers have size two") {
  const Prime p(7);
  std::vector<Point2> all;
  for (u32 x = 0; x < 7; ++x)
    for (u32 y = 0; y < 7; ++y)
      if (x || y) all.push_back({x, y});
  const PointSet2D pts(p, all);
  const std::array<ProjPoint, 4> dirs{ProjPoint::finite(0), ProjPoint::finite(1),
                                      ProjPoint::finite(2), ProjPoint::infinity()};
  const PhiFibers f = phi_fibers(p, dirs, pts);
  CHECK(f.quadruples == 6u * 6 * 6 * 6);
  CHECK(f.fiber_sizes.size() == 1);
  CHECK(f.fiber_sizes.begin()->first == 2);
  CHECK(f.images == f.quadruples / 2);
  CHECK(f.sign_classes == f.images);
  CHECK(f.scaling_classes == 6u * 6 * 6);
  CHECK(f.scaling_relation);
}

TEST_CASE("omega set excludes the origin") {
  const Prime p(7);
  CHECK_THROWS_AS(omega_set(PointSet2D(p, {{0, 0}, {1, 2}})), Error);
  const FpSet w = omega_set(PointSet2D(p, {{1, 0}, {0, 1}}));
  CHECK(w == set_of(7, {1, 6}));
}

TEST_CASE("teq counts for {1,2,4} mod 7") {
  const TeqCounts t = count_teq_solutions(set_of(7, {1, 2, 4}));
  CHECK(t.n6 == 81);
  CHECK(t.second_moment == 1215);
  CHECK(t.max_pointwise == 9);
}

TEST_CASE("richness split") {
  const Prime p(11);
  std::vector<Point2> pts{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {1, 2}, {1, 3}};
  const RichnessSplit s = split_by_line_richness(PointSet2D(p, pts), 3);
  CHECK(s.rich.size() == 4);
  CHECK(s.sparse.size() == 2);
  REQUIRE(s.omega_sparse.has_value());
  CHECK(*s.omega_sparse == 2);
}
