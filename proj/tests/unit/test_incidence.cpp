#include "doctest.h"
#include "helpers.hpp"
#include "sumprod/incidence.hpp"

using namespace sumprod;

TEST_CASE("histogram p=7, A={1,2,4}") {
  const auto h = incidence_histogram(set_of(7, {1, 2, 4}));
  CHECK(h.count(0) == 11);
  CHECK(h.count(1) == 27);
  CHECK(h.count(2) == 9);
  CHECK(h.count(3) == 9);
  CHECK(rich_lines(h, 1) == 9);
  CHECK(moment(h, 1) == 8 * 9);
  CHECK(moment(h, 2) == 81 + 7 * 9);
  CHECK(scaled_deviation_sum(h) == 7u * 7 * 7 * 9 - 7 * 81);
}

TEST_CASE("histogram p=5, A={0,1}") {
  const auto h = incidence_histogram(set_of(5, {0, 1}));
  CHECK(h.count(0) == 12);
  CHECK(h.count(1) == 12);
  CHECK(h.count(2) == 6);
  CHECK(moment(h, 3) == 60);
  CHECK(falling_moment(h, 2) == 12);
}

TEST_CASE("histogram independent of jobs") {
  const FpSet a = random_set(101, 20, 4);
  const auto h1 = incidence_histogram(a, {}, 1);
  const auto h3 = incidence_histogram(a, {}, 3);
  CHECK(std::vector<u64>(h1.counts().begin(), h1.counts().end()) ==
        std::vector<u64>(h3.counts().begin(), h3.counts().end()));
}

TEST_CASE("point-line incidences") {
  const Prime p(7);
  const auto pts = PointSet2D::cartesian(set_of(7, {1, 2, 4}), set_of(7, {1, 2, 4}));
  std::vector<Line> lines{Line::non_vertical(1, 0), Line::vertical(1), Line::vertical(3)};
  CHECK(count_point_line(pts, lines) == 6);
  CHECK(Line::through(p, {0, 0}, {1, 1}) == Line::non_vertical(1, 0));
}

TEST_CASE("point-plane incidences") {
  const Prime p(5);
  std::vector<Point3> raw{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  const PointSet3D pts(p, raw);
  std::vector<Plane> planes{Plane::make(p, 0, 0, 1, 0), Plane::make(p, 0, 0, 2, 0)};
  const auto r = count_point_plane(pts, planes);
  CHECK(r.incidences == 3);  // duplicates collapse to z = 0
  CHECK(r.max_collinear == 2);
  std::vector<Point3> line{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {1, 0, 0}};
  CHECK(max_collinear(PointSet3D(p, line)) == 3);
}
