#include <filesystem>

#include "doctest.h"
#include "helpers.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/experiments.hpp"

using namespace sumprod;

TEST_CASE("size expressions") {
  CHECK(eval_size_expr("20", 101) == 20);
  CHECK(eval_size_expr("p^0.5", 101) == 10);
  CHECK(eval_size_expr("2*ceil(p^(1/2))", 101) == 22);
  CHECK(eval_size_expr("floor(p/3) - 1", 100) == 32);
  CHECK(eval_size_expr("1000^(1/3)", 7) == 10);
  CHECK_THROWS_AS(eval_size_expr("q+1", 7), Error);
  CHECK_THROWS_AS(eval_size_expr("(1", 7), Error);
  CHECK_THROWS_AS(eval_size_expr("1-5", 7), Error);
}

TEST_CASE("coverage agrees with the full product") {
  for (u64 seed = 0; seed < 6; ++seed) {
    const FpSet a = random_set(101, 3 + seed % 3, seed);
    const Coverage c = fourfold_coverage(a);
    const FpSet full = fourfold_product(a);
    CHECK(c.covered_count == full.size());
    CHECK(c.covered == (full.size() == 101));
  }
}

TEST_CASE("coverage r stats exact vs sampled") {
  const FpSet a = random_set(101, 12, 1);
  const Coverage exact = fourfold_coverage(a, true, 1);
  REQUIRE(exact.r_stats.has_value());
  CHECK_FALSE(exact.r_stats->sampled);
  CHECK(exact.r_stats->mean > 0);
  const Coverage sampled = fourfold_coverage(a, true, 1, Budget::ops(100));
  CHECK(sampled.r_stats->sampled);
  CHECK(sampled.r_stats->mean == doctest::Approx(exact.r_stats->mean).epsilon(0.1));
}

TEST_CASE("measure") {
  const FpSet a = set_of(7, {1, 2, 4});
  CHECK(measure(a, "R", 0, {}).first == "3");
  CHECK(measure(a, "T", 0, {}).first == "279");
  CHECK(measure(a, "Q", 0, {}).first == "837");
  CHECK(measure(set_of(5, {0, 1}), "energy", 0, {}).first == "6");
  CHECK(measure(a, "check:line_moment_2", 0, {}).second == "pass");
  CHECK(measure(random_set(31, 8, 1), "Q", 0, Budget::ops(5)).second == "budget");
  CHECK(is_sweep_quantity("check:csest"));
  CHECK_FALSE(is_sweep_quantity("check:nope"));
}

namespace {
ExperimentSpec small_spec() {
  return ExperimentSpec::from_json(nlohmann::json::parse(R"({
    "primes": [101, 103], "families": [{"kind": "random"}, {"kind": "subgroup"}],
    "sizes": [6, "p^0.5", 14], "quantities": ["R", "sumset", "check:csest"],
    "trials": 2, "seed": 11})"));
}
}  // namespace

TEST_CASE("sweep determinism and persistence") {
  const ExperimentSpec spec = small_spec();
  const SweepResult a = run_sweep(spec, 1);
  const SweepResult b = run_sweep(spec, 4);
  CHECK(to_csv(a) == to_csv(b));
  CHECK(to_json_text(a) == to_json_text(b));
  CHECK(a.rows.size() == 2u * 2 * 3 * 2 * 3);
  const auto dir = std::filesystem::temp_directory_path();
  for (auto [fmt, name] : {std::pair{PersistFormat::csv, "sweep_rt.csv"},
                           std::pair{PersistFormat::json, "sweep_rt.json"}}) {
    const auto path = dir / name;
    persist(a, path, fmt);
    const SweepResult back = load_result(path);
    CHECK(back.spec == a.spec);
    CHECK((fmt == PersistFormat::csv ? to_csv(back) : to_json_text(back)) ==
          (fmt == PersistFormat::csv ? to_csv(a) : to_json_text(a)));
    std::filesystem::remove(path);
  }
  CHECK(ExperimentSpec::from_json(spec.to_json()).to_json() == spec.to_json());
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(ExperimentSpec::from_json(nlohmann::json::parse(
                      R"({"primes":[100],"families":[{"kind":"random"}],"sizes":[3],"quantities":["R"]})")),
                  Error);
  CHECK_THROWS_AS(ExperimentSpec::from_json(nlohmann::json::parse(
                      R"({"primes":[101],"families":[{"kind":"random"}],"sizes":[3],"quantities":["X"]})")),
                  Error);
}

TEST_CASE("exponent fit") {
  std::vector<SweepRow> rows;
  for (u64 n : {10u, 20u, 40u, 80u}) {
    rows.push_back({101, "random", n, 0, "X", std::to_string(3 * n * n), 0, "ok"});
  }
  rows.push_back({101, "random", 160, 0, "X", "100", 0, "saturated"});
  const ExponentFit f = fit_exponent(rows, "X");
  CHECK(f.points == 4);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.r2 == doctest::Approx(1.0));
  rows.resize(2);
  CHECK_THROWS_AS(fit_exponent(rows, "X"), Error);
}
