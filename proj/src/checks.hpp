#pragma once

#include <string>
#include <vector>

#include "sumprod/verify.hpp"

namespace sumprod::detail {

struct CheckContext {
  const CheckInstance& inst;
  const Budget& budget;
  CheckResult& out;

  const FpSet& set() const { return inst.set; }
  const Prime& prime() const { return inst.set.prime(); }

  template <class T>
  T param(const char* key, T fallback) const {
    const auto it = inst.params.find(key);
    return it == inst.params.end() ? fallback : it->template get<T>();
  }

  // Records a hypothesis and returns whether it holds.
  bool hypothesis(std::string condition, bool holds) {
    out.hypotheses.push_back({std::move(condition), holds});
    return holds;
  }
  void skip(std::string reason) {
    out.status = Status::skipped;
    out.reason = std::move(reason);
  }
  void require_all_hypotheses() {
    for (const auto& h : out.hypotheses)
      if (!h.holds) {
        skip("hypothesis unmet: " + h.condition);
        return;
      }
  }
  // Exact comparisons; a failure sticks once recorded.
  void expect(bool ok, const std::string& what) {
    if (!ok && out.status != Status::fail) {
      out.status = Status::fail;
      out.reason = what;
    }
  }
};

using CheckFn = void (*)(CheckContext&);

struct CheckEntry {
  const char* id;
  Tier tier;
  const char* summary;
  CheckFn fn;
};

std::vector<CheckEntry> exact_checks();
std::vector<CheckEntry> monitor_checks();

// Integer as a JSON number, or as a decimal string past 64 bits.
nlohmann::json exact_json(u128 v);
nlohmann::json exact_json(i128 v);

}  // namespace sumprod::detail
