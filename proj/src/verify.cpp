#include "sumprod/verify.hpp"

#include <algorithm>

#include "checks.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/rng.hpp"

namespace sumprod {

std::string_view to_string(Tier t) noexcept {
  return t == Tier::exact ? "exact" : "monitor";
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

namespace detail {

nlohmann::json exact_json(u128 v) {
  if (v <= std::numeric_limits<u64>::max()) return static_cast<u64>(v);
  return to_decimal(v);
}

nlohmann::json exact_json(i128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_decimal(v);
}

}  // namespace detail

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json hyps = nlohmann::json::array();
  for (const auto& h : r.hypotheses) {
    hyps.push_back({{"condition", h.condition}, {"holds", h.holds}});
  }
  nlohmann::json j{{"check_id", r.check_id},
                   {"tier", to_string(r.tier)},
                   {"status", to_string(r.status)},
                   {"reason", r.reason},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"hypothesis_report", hyps},
                   {"extras", r.extras},
                   {"instance", r.instance},
                   {"label", r.label},
                   {"p", r.p},
                   {"size", r.size}};
  j["implied_constant"] = r.implied_constant ? nlohmann::json(*r.implied_constant)
                                             : nlohmann::json(nullptr);
  return j;
}

std::string to_jsonl(std::span<const CheckResult> results) {
  std::string out;
  for (const auto& r : results) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

namespace {

struct Registry {
  std::vector<CheckInfo> infos;
  std::vector<detail::CheckEntry> entries;
};

const Registry& registry() {
  static const Registry reg = [] {
    Registry r;
    r.entries = detail::exact_checks();
    const auto mon = detail::monitor_checks();
    r.entries.insert(r.entries.end(), mon.begin(), mon.end());
    std::sort(r.entries.begin(), r.entries.end(),
              [](const auto& a, const auto& b) { return std::string_view(a.id) < b.id; });
    for (const auto& e : r.entries) r.infos.push_back({e.id, e.tier, e.summary});
    return r;
  }();
  return reg;
}

const detail::CheckEntry& find_entry(std::string_view id) {
  for (const auto& e : registry().entries)
    if (id == e.id) return e;
  throw Error(ErrorKind::UnknownCheck, "unknown check: " + std::string(id));
}

bool skippable(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::MethodUnavailable:
    case ErrorKind::TooSmall:
    case ErrorKind::EmptyDirection:
    case ErrorKind::EmptyResult:
    case ErrorKind::InsufficientData:
    case ErrorKind::InvalidArgument:
    case ErrorKind::SizeTooLarge:
    case ErrorKind::BadOrder:
      return true;
    default:
      return false;
  }
}

}  // namespace

const std::vector<CheckInfo>& check_registry() { return registry().infos; }

const CheckInfo& find_check(std::string_view id) {
  for (const auto& c : check_registry())
    if (c.id == id) return c;
  throw Error(ErrorKind::UnknownCheck, "unknown check: " + std::string(id));
}

CheckResult run_check(std::string_view id, const CheckInstance& inst,
                      const Budget& budget) {
  const auto& entry = find_entry(id);
  CheckResult out;
  out.check_id = entry.id;
  out.tier = entry.tier;
  out.label = inst.label;
  out.p = inst.set.modulus();
  out.size = inst.set.size();
  detail::CheckContext ctx{inst, budget, out};
  try {
    entry.fn(ctx);
  } catch (const Error& e) {
    if (skippable(e.kind()) || entry.tier == Tier::monitor) {
      out.status = Status::skipped;
      out.reason = e.kind() == ErrorKind::BudgetExceeded
                       ? "budget"
                       : std::string(to_string(e.kind())) + ": " + e.what();
    } else {
      out.status = Status::fail;
      out.reason = std::string(to_string(e.kind())) + ": " + e.what();
    }
  }
  return out;
}

std::vector<CheckResult> run_suite(std::string_view suite,
                                   std::span<const CheckInstance> instances,
                                   const Budget& budget, int jobs) {
  std::vector<std::string> ids;
  for (const auto& c : check_registry()) {
    if (suite == "all" || (suite == "exact" && c.tier == Tier::exact) ||
        (suite == "monitors" && c.tier == Tier::monitor)) {
      ids.push_back(c.id);
    }
  }
  if (suite != "all" && suite != "exact" && suite != "monitors") {
    throw Error(ErrorKind::UnknownCheck, "unknown suite: " + std::string(suite));
  }
  const std::size_t n = instances.size();
  std::vector<CheckResult> results(ids.size() * n);
  parallel_for(results.size(), jobs, [&](std::size_t k) {
    results[k] = run_check(ids[k / n], instances[k % n], budget);
    results[k].instance = k % n;
  });
  return results;
}

FamilySpec family_from_json(const nlohmann::json& j) {
  FamilySpec f;
  f.kind = parse_family_kind(j.value("kind", std::string("random")));
  f.size = j.value("size", j.value("len", u64{0}));
  f.order = j.value("order", u64{0});
  f.start = j.value("start", std::int64_t{0});
  f.step = j.value("step", std::int64_t{1});
  f.seed = j.value("seed", u64{0});
  if (j.contains("elements")) f.elements = j.at("elements").get<std::vector<u32>>();
  return f;
}

nlohmann::json family_to_json(const FamilySpec& f) {
  nlohmann::json j{{"kind", to_string(f.kind)}};
  switch (f.kind) {
    case FamilyKind::subgroup: j["order"] = f.order; break;
    case FamilyKind::explicit_set: j["elements"] = f.elements; break;
    case FamilyKind::random: j["size"] = f.size; j["seed"] = f.seed; break;
    default:
      j["size"] = f.size;
      j["start"] = f.start;
      j["step"] = f.step;
  }
  return j;
}

std::vector<CheckInstance> instances_from_config(const nlohmann::json& config, u64 seed) {
  std::vector<CheckInstance> out;
  try {
    if (config.contains("instances")) {
      std::size_t idx = 0;
      for (const auto& e : config.at("instances")) {
        const Prime p(e.at("p").get<u64>());
        const u64 s = e.value("seed", mix_seed(seed, idx));
        FpSet set = e.contains("elements")
                        ? FpSet(p, e.at("elements").get<std::vector<u32>>())
                        : [&] {
                            FamilySpec f = family_from_json(e.at("family"));
                            if (!e.at("family").contains("seed")) f.seed = s;
                            return make_family(f, p);
                          }();
        CheckInstance inst{e.value("label", "instance" + std::to_string(idx)),
                           std::move(set), e.value("params", nlohmann::json::object()), s};
        out.push_back(std::move(inst));
        ++idx;
      }
    }
    if (config.contains("random")) {
      const auto& r = config.at("random");
      const auto primes = r.at("primes").get<std::vector<u64>>();
      const u64 count = r.value("count", u64{20});
      const u64 lo = r.value("min_size", u64{2});
      const u64 hi = r.value("max_size", u64{8});
      const auto params = r.value("params", nlohmann::json::object());
      if (primes.empty() || lo > hi) {
        throw Error(ErrorKind::InvalidArgument, "random instances need primes and sizes");
      }
      for (u64 i = 0; i < count; ++i) {
        const u64 s = mix_seed(seed, 1'000'000 + i);
        SplitMix64 g(s);
        const Prime p(primes[g.below(primes.size())]);
        const u64 size = std::min<u64>(lo + g.below(hi - lo + 1), p.value());
        FamilySpec f;
        f.kind = FamilyKind::random;
        f.size = size;
        f.seed = g.next();
        out.push_back({"random" + std::to_string(i), make_family(f, p), params, s});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("check config: ") + e.what());
  }
  return out;
}

}  // namespace sumprod
