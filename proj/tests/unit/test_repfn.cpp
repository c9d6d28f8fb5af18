#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "sumprod/repfn.hpp"

using namespace sumprod;

TEST_CASE("energies on {0,1} mod 5") {
  const FpSet a = set_of(5, {0, 1});
  CHECK(energy(a, a, EnergyKind::additive, 2) == 6);
  CHECK(energy(a, a, EnergyKind::multiplicative, 2) == 10);
  CHECK(energy(a, a, EnergyKind::additive, 3) == 10);
  const FpSet d = combine(a, a, SetOp::diff);
  CHECK(energy(a, d, EnergyKind::additive, 2) == 10);
}

TEST_CASE("rep_fn mass and lookup") {
  const FpSet a = set_of(7, {1, 2, 4});
  const RepFn r = rep_fn(a, a, SetOp::diff);
  CHECK(r.total_mass() == 9);
  CHECK(r(0) == 3);
  CHECK(r.power_sum(2) == energy(a, a, EnergyKind::additive, 2));
}

TEST_CASE("multiplicative order 3 matches brute force") {
  for (u64 seed = 0; seed < 5; ++seed) {
    const FpSet a = random_set(11, 5, seed);
    const Prime& p = a.prime();
    u64 brute = 0;
    for (u32 a1 : a.elements())
      for (u32 a2 : a.elements())
        for (u32 a3 : a.elements())
          for (u32 b1 : a.elements())
            for (u32 b2 : a.elements())
              for (u32 b3 : a.elements()) {
                auto par = [&](u32 x, u32 y, u32 u, u32 v) { return p.mul(x, v) == p.mul(u, y); };
                if (par(a1, b1, a2, b2) && par(a1, b1, a3, b3) && par(a2, b2, a3, b3)) ++brute;
              }
    CHECK(energy(a, a, EnergyKind::multiplicative, 3) == brute);
  }
}

TEST_CASE("E_{3/2} of a point mass") {
  const FpSet a = set_of(7, {3});
  CHECK(energy_three_halves(a, a) == doctest::Approx(1.0));
}

TEST_CASE("popular difference sum is at least |A|^2 on sums") {
  const FpSet a = set_of(11, {0, 1, 3, 7});
  CHECK(popular_difference_sum(a, SetOp::sum) >= 16);
}
