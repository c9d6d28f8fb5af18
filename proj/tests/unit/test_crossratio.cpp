#include "doctest.h"
#include "helpers.hpp"
#include "sumprod/crossratio.hpp"
#include "sumprod/errors.hpp"

using namespace sumprod;

TEST_CASE("pinned ratios") {
  const FpSet a = set_of(7, {1, 2, 4});
  CHECK(pinned_ratios(a) == set_of(7, {1, 3, 5}));
  CHECK(pinned_ratios(a, PinnedVariant::strict) == set_of(7, {3, 5}));
  CHECK_THROWS_AS(pinned_ratios(set_of(7, {1})), Error);
  CHECK_THROWS_AS(pinned_ratios(set_of(7, {1, 2}), PinnedVariant::strict), Error);
}

TEST_CASE("cross-ratio set") {
  CHECK(cross_ratio_set(set_of(7, {0, 1, 2, 3})) == set_of(7, {2, 4, 6}));
  CHECK_THROWS_AS(cross_ratio_set(set_of(7, {0, 1, 2})), Error);
}

TEST_CASE("energies") {
  const FpSet a = set_of(11, {0, 1, 3, 7, 9});
  CHECK(pinned_ratio_energy(a, a) == 1232);
  CHECK(cross_ratio_energy(a) == 8832);
  const auto e = cross_ratio_energies(set_of(7, {1, 2, 4}), set_of(7, {1, 2, 4}));
  CHECK(e.e_c == 72);
  CHECK(e.decomposition == 72);
}

TEST_CASE("inverted shift") {
  CHECK(inverted_shift(set_of(7, {1, 2, 4}), Elem{1}) == set_of(7, {1, 5}));
}

TEST_CASE("growth monitor regimes") {
  const auto g = ratio_growth_monitor(random_set(10007, 20, 1));
  CHECK(g.regime == "small");
  CHECK(g.ratios > 0);
  CHECK(g.c_floor > 0);
}
