#include "doctest.h"
#include "sumprod/errors.hpp"
#include "sumprod/field.hpp"

using namespace sumprod;

TEST_CASE("primality and construction") {
  CHECK(is_prime(2));
  CHECK(is_prime(2003));
  CHECK(is_prime(10007));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(Prime(12), Error);
  try {
    Prime bad(15);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("arithmetic mod 7") {
  const Prime p(7);
  CHECK(p.inv(3) == 5);
  CHECK(p.mul(3, 5) == 1);
  CHECK(p.sub(2, 5) == 4);
  CHECK(p.neg(0) == 0);
  CHECK(p.elem(-1).value == 6);
  CHECK(p.pow(3, 6) == 1);
  CHECK_THROWS_AS(p.inv(0), Error);
}

TEST_CASE("inverse table agrees with exponentiation") {
  const Prime p(101);
  for (u32 x = 1; x < 101; ++x) CHECK(p.mul(x, p.inv(x)) == 1);
}

TEST_CASE("primitive root generates the group") {
  for (u64 q : {5u, 7u, 11u, 101u, 1009u}) {
    const Prime p(q);
    const u32 g = p.primitive_root();
    u32 x = 1;
    u64 ord = 0;
    do {
      x = p.mul(x, g);
      ++ord;
    } while (x != 1);
    CHECK(ord == q - 1);
  }
}

TEST_CASE("cross ratio") {
  const Prime p(7);
  auto f = [](u32 v) { return ProjPoint::finite(v); };
  CHECK(cross_ratio(p, f(0), f(1), f(2), f(3)).value == 2);
  // [a,b,c,∞] = (a-b)/(a-c)
  CHECK(cross_ratio(p, f(0), f(1), f(2), ProjPoint::infinity()).value ==
        p.mul(p.sub(0, 1), p.inv(p.sub(0, 2))));
  CHECK_THROWS_AS(cross_ratio(p, f(1), f(1), f(1), f(2)), Error);
}
