#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sumprod/sets.hpp"

namespace sumprod {

/// Representation counts of λ != 0 in (A-A)^4.
struct RStats {
  bool sampled = false;
  u64 samples = 0;     // 8-tuples drawn when sampled
  double min = 0;      // min over λ != 0
  double mean = 0;     // mean over λ != 0
  double predicted = 0;  // |A|^8 / p
};

struct Coverage {
  bool covered = false;
  double fraction = 0;
  u64 covered_count = 0;
  // Multipliers from DD consumed before the closure filled F_p (or |DD|).
  u64 steps = 0;
  std::optional<RStats> r_stats;
};

// (A-A)(A-A)(A-A)(A-A) built as DD * DD one multiplier at a time, stopping
// as soon as every residue is hit. r_stats are exact (discrete-log
// convolution) when 3(p-1)^2 fits the budget and sampled otherwise.
Coverage fourfold_coverage(const FpSet& a, bool with_r_stats = false,
                           u64 seed = 0, const Budget& budget = {});

// The same product set without early exit.
FpSet fourfold_product(const FpSet& a);

/// Sweep configuration.
///
/// {"primes": [...], "families": [{"kind": "random", ...}, ...],
///  "sizes": [20, "p^0.4", "2*ceil(p^0.6)"], "quantities": ["R", "T", ...],
///  "trials": 1, "seed": 0, "budget": 2e9, "record_timing": false}
struct ExperimentSpec {
  std::vector<u64> primes;
  std::vector<FamilySpec> families;
  std::vector<std::string> sizes;
  std::vector<std::string> quantities;
  u64 trials = 1;
  u64 seed = 0;
  u64 budget = 2'000'000'000;
  bool record_timing = false;

  static ExperimentSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Evaluates a size expression in p: numbers, p, + - * / ^, parentheses and
// ceil/floor/round. The result is floored to an integer.
u64 eval_size_expr(std::string_view expr, u64 p);

// Names accepted in ExperimentSpec::quantities ("check:<id>" included).
std::vector<std::string> sweep_quantities();
bool is_sweep_quantity(std::string_view name);

struct SweepRow {
  u64 p = 0;
  std::string family;
  u64 size = 0;
  u64 seed = 0;
  std::string quantity;
  std::string value;  // exact decimal or shortest round-trip float
  u64 runtime_ms = 0;
  std::string status;  // ok, saturated, pass, fail, skipped, budget, error
};

struct SweepResult {
  nlohmann::json spec;
  std::vector<SweepRow> rows;
};

SweepResult run_sweep(const ExperimentSpec& spec, int jobs = 0);

// Computes one named quantity for a set. Returns (value, status).
std::pair<std::string, std::string> measure(const FpSet& a, std::string_view quantity,
                                            u64 seed, const Budget& budget);

struct ExponentFit {
  std::string quantity;
  std::size_t points = 0;
  double slope = 0;
  double intercept = 0;
  double stderr_slope = 0;
  double r2 = 0;
};

// Least squares of ln(value) on ln(size) over rows of `quantity` with status
// ok and value > 0. InsufficientData below three distinct sizes.
ExponentFit fit_exponent(const std::vector<SweepRow>& rows, std::string_view quantity);

enum class PersistFormat { csv, json };

std::string to_csv(const SweepResult& r);
std::string to_json_text(const SweepResult& r);
void persist(const SweepResult& r, const std::filesystem::path& path, PersistFormat f);
SweepResult load_result(const std::filesystem::path& path);
SweepResult parse_csv(std::string_view text);

}  // namespace sumprod
