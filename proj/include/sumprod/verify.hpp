#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sumprod/sets.hpp"

namespace sumprod {

enum class Tier { exact, monitor };
enum class Status { pass, fail, skipped };

std::string_view to_string(Tier t) noexcept;
std::string_view to_string(Status s) noexcept;

struct Hypothesis {
  std::string condition;
  bool holds = false;
};

/// One verification record. lhs/rhs hold integers (as decimal strings
/// beyond 64 bits) or floats.
struct CheckResult {
  std::string check_id;
  Tier tier = Tier::exact;
  Status status = Status::pass;
  std::string reason;
  nlohmann::json lhs;
  nlohmann::json rhs;
  std::optional<double> implied_constant;
  std::vector<Hypothesis> hypotheses;
  nlohmann::json extras = nlohmann::json::object();
  std::size_t instance = 0;
  std::string label;
  u64 p = 0;
  std::size_t size = 0;
};

nlohmann::json to_json(const CheckResult& r);
std::string to_jsonl(std::span<const CheckResult> results);

/// Input to a check: the set under test plus optional parameters
/// (lambda, alpha, k, shifts, M, order, quads, w, lines, points, ...).
struct CheckInstance {
  std::string label;
  FpSet set;
  nlohmann::json params = nlohmann::json::object();
  u64 seed = 0;
};

struct CheckInfo {
  std::string id;
  Tier tier;
  std::string summary;
};

// All registered checks, sorted by id.
const std::vector<CheckInfo>& check_registry();
const CheckInfo& find_check(std::string_view id);  // UnknownCheck

// Budget or size errors become status skipped; UnknownCheck propagates.
CheckResult run_check(std::string_view id, const CheckInstance& inst,
                      const Budget& budget = Budget::ops(400'000'000));

// suite in {exact, monitors, all}; results ordered by (check id, instance).
std::vector<CheckResult> run_suite(std::string_view suite,
                                   std::span<const CheckInstance> instances,
                                   const Budget& budget = Budget::ops(400'000'000),
                                   int jobs = 0);

// Instances from a config document:
//   {"instances": [{"label":..., "p": P, "elements": [...] | "family": {...},
//                   "params": {...}, "seed": S}, ...],
//    "random": {"primes": [...], "count": N, "min_size": 2, "max_size": 8}}
// Random instances draw their seeds from `seed`.
std::vector<CheckInstance> instances_from_config(const nlohmann::json& config,
                                                 u64 seed = 0);

FamilySpec family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const FamilySpec& f);

}  // namespace sumprod
