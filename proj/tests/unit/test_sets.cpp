#include <filesystem>

#include "doctest.h"
#include "helpers.hpp"
#include "sumprod/errors.hpp"

using namespace sumprod;

TEST_CASE("FpSet dedups and sorts") {
  const FpSet a = set_of(7, {4, 1, 2, 4});
  REQUIRE(a.size() == 3);
  CHECK(a.elements()[0] == 1);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(3));
  CHECK(a.nonzero() == a);
  CHECK(set_of(5, {0, 1}).nonzero().size() == 1);
}

TEST_CASE("families") {
  const Prime p(7);
  FamilySpec f;
  f.kind = FamilyKind::subgroup;
  f.order = 3;
  CHECK(make_family(f, p) == set_of(7, {1, 2, 4}));
  f.order = 4;
  try {
    make_family(f, p);
    FAIL("expected BadOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadOrder);
  }
  FamilySpec ap;
  ap.kind = FamilyKind::ap;
  ap.size = 3;
  ap.start = 5;
  ap.step = 2;
  CHECK(make_family(ap, p) == set_of(7, {5, 0, 2}));
  FamilySpec r;
  r.kind = FamilyKind::random;
  r.size = 5;
  r.seed = 9;
  CHECK(make_family(r, p) == make_family(r, p));
  CHECK(make_family(r, p).size() == 5);
  r.size = 8;
  CHECK_THROWS_AS(make_family(r, p), Error);
}

TEST_CASE("combine") {
  const FpSet a = set_of(5, {0, 1});
  CHECK(combine(a, a, SetOp::sum) == set_of(5, {0, 1, 2}));
  CHECK(combine(a, a, SetOp::diff) == set_of(5, {0, 1, 4}));
  CHECK(combine(a, a, SetOp::prod) == set_of(5, {0, 1}));
  CHECK(combine(a, a, SetOp::ratio) == set_of(5, {0, 1}));
  CHECK_THROWS_AS(combine(a, set_of(5, {0}), SetOp::ratio), Error);
  CHECK_THROWS_AS(dilate_translate(a, Elem{0}, Elem{1}), Error);
  CHECK(invert_elements(set_of(7, {0, 3})) == set_of(7, {5}));
}

TEST_CASE("set expressions") {
  const FpSet a = set_of(7, {1, 2, 4});
  const SetExpr e = SetExpr::parse("(A-A)(A-A)");
  const FpSet d = combine(a, a, SetOp::diff);
  CHECK(e.eval(a) == combine(d, d, SetOp::prod));
  CHECK(SetExpr::parse("A+A").eval(a) == combine(a, a, SetOp::sum));
  CHECK(SetExpr::parse("inv(shift(A,1))").eval(a) ==
        invert_elements(dilate_translate(a, Elem{1}, Elem{1})));
  CHECK_THROWS_AS(SetExpr::parse("A+"), Error);
}

TEST_CASE("set file round trip") {
  const FpSet a = set_of(11, {0, 2, 3, 7});
  CHECK(set_to_json(a) == "{\"elements\":[0,2,3,7],\"p\":11}\n");
  CHECK(set_from_json(set_to_json(a)) == a);
  const auto path = std::filesystem::temp_directory_path() / "sumprod_set_test.json";
  save_set(a, path);
  CHECK(load_set(path) == a);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(set_from_json("{\"elements\":[9],\"p\":7}"), Error);
}
