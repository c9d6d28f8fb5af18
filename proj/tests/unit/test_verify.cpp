#include "doctest.h"
#include "helpers.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/verify.hpp"

using namespace sumprod;

TEST_CASE("registry is sorted and tiered") {
  const auto& reg = check_registry();
  REQUIRE(reg.size() > 20);
  for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
  CHECK(find_check("line_moment_2").tier == Tier::exact);
  CHECK(find_check("T_asymp").tier == Tier::monitor);
  CHECK_THROWS_AS(find_check("nope"), Error);
}

TEST_CASE("exact suite passes on small instances") {
  std::vector<CheckInstance> inst;
  inst.push_back({"a", set_of(7, {1, 2, 4}), nlohmann::json::object(), 1});
  inst.push_back({"b", random_set(31, 6, 2), nlohmann::json::object(), 2});
  inst.push_back({"c", random_set(101, 9, 3), nlohmann::json::object(), 3});
  const auto res = run_suite("exact", inst);
  for (const auto& r : res) {
    CAPTURE(r.check_id);
    CAPTURE(r.reason);
    CHECK(r.status != Status::fail);
  }
}

TEST_CASE("monitors never fail") {
  std::vector<CheckInstance> inst{{"m", random_set(1009, 12, 9), nlohmann::json::object(), 4}};
  for (const auto& r : run_suite("monitors", inst)) {
    CAPTURE(r.check_id);
    CHECK(r.status != Status::fail);
    if (r.status == Status::pass) CHECK(r.implied_constant.has_value());
  }
}

TEST_CASE("jsonl schema") {
  CheckInstance inst{"x", set_of(7, {1, 2, 4}), nlohmann::json::object(), 0};
  const CheckResult r = run_check("line_moment_2", inst);
  CHECK(r.status == Status::pass);
  const auto j = to_json(r);
  for (const char* key : {"check_id", "tier", "status", "lhs", "rhs", "hypothesis_report", "p", "size"})
    CHECK(j.contains(key));
  CHECK(j["lhs"] == j["rhs"]);
  const std::string line = to_jsonl(std::span<const CheckResult>(&r, 1));
  CHECK(line.back() == '\n');
  CHECK(line.find('\n') == line.size() - 1);
}

TEST_CASE("budget turns into skipped") {
  CheckInstance inst{"x", random_set(101, 10, 1), nlohmann::json::object(), 0};
  const CheckResult r = run_check("quads_methods", inst, Budget::ops(10));
  CHECK(r.status == Status::skipped);
}

TEST_CASE("instances from config") {
  const auto cfg = nlohmann::json::parse(R"({
    "instances": [{"p": 7, "elements": [1,2,4], "params": {"M": 1}},
                  {"p": 11, "family": {"kind": "ap", "size": 4, "start": 1, "step": 2}}],
    "random": {"primes": [13, 17], "count": 3, "min_size": 3, "max_size": 5}})");
  const auto inst = instances_from_config(cfg, 5);
  REQUIRE(inst.size() == 5);
  CHECK(inst[0].params["M"] == 1);
  CHECK(inst[1].set == set_of(11, {1, 3, 5, 7}));
  CHECK(instances_from_config(cfg, 5)[4].set == inst[4].set);
}

TEST_CASE("suite results independent of jobs") {
  std::vector<CheckInstance> inst;
  for (u64 s = 0; s < 3; ++s) inst.push_back({"r", random_set(31, 5, s), nlohmann::json::object(), s});
  const auto a = to_jsonl(run_suite("all", inst, Budget::ops(100'000'000), 1));
  const auto b = to_jsonl(run_suite("all", inst, Budget::ops(100'000'000), 3));
  CHECK(a == b);
}
