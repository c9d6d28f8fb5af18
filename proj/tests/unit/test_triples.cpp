#include "doctest.h"
#include "helpers.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/triples.hpp"

using namespace sumprod;

namespace {
const CountMethod kAll[] = {CountMethod::brute, CountMethod::ratio, CountMethod::shifted_energy,
                            CountMethod::line};
}

TEST_CASE("pinned T and Q") {
  struct Case {
    u64 p;
    std::vector<u32> a;
    u64 t, q;
  };
  for (const Case& c : {Case{5, {0, 1}, 40, 88}, Case{7, {1, 2, 4}, 279, 837},
                        Case{7, {0, 1, 3}, 279, 837}, Case{11, {0, 2, 3, 7}, 994, 3460}}) {
    const FpSet a = set_of(c.p, c.a);
    for (CountMethod m : kAll) {
      CAPTURE(to_string(m));
      CHECK(count_collinear_triples(a, m) == c.t);
      CHECK(count_collinear_quadruples(a, m) == c.q);
    }
  }
}

TEST_CASE("t function values") {
  const RepFn t = t_fn(set_of(7, {1, 2, 4}));
  CHECK(t(0) == 6);
  CHECK(t(1) == 6);
  CHECK(t(3) == 3);
  CHECK(t(5) == 3);
  CHECK(t.support_size() == 4);
  const RepFn t5 = t_fn(set_of(5, {0, 1}));
  CHECK(t5(0) == 2);
  CHECK(t5(1) == 2);
}

TEST_CASE("q totals and symmetry") {
  const FpSet a = random_set(13, 6, 2);
  const QFn q = q_fn(a);
  CHECK(q.total_mass() == 6u * 6 * 6 * 5);
  const Prime& p = a.prime();
  for (const auto& e : q.entries()) CHECK(q(p.sub(1, e.x), p.sub(1, e.y)) == e.count);
  CHECK(q_sum_squares(a) == q.sum_squares());
}

TEST_CASE("brute limits") {
  const FpSet big = random_set(31, 13, 1);
  CHECK_THROWS_AS(count_collinear_triples(big, CountMethod::brute), Error);
  CHECK_THROWS_AS(count_collinear_quadruples(random_set(31, 11, 1), CountMethod::brute), Error);
  CHECK(parse_count_method("energy") == CountMethod::shifted_energy);
}

TEST_CASE("budget guards") {
  const FpSet a = random_set(101, 30, 3);
  CHECK_THROWS_AS(count_collinear_quadruples(a, CountMethod::ratio, Budget::ops(10)), Error);
}

TEST_CASE("residuals") {
  const FpSet a = random_set(101, 20, 7);
  const Residuals r = asymptotic_residuals(a);
  CHECK(r.t_count == count_collinear_triples(a, CountMethod::line));
  REQUIRE(r.q_count.has_value());
  CHECK(*r.q_count == count_collinear_quadruples(a, CountMethod::ratio));
}
