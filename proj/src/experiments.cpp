#include "sumprod/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sumprod/crossratio.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/repfn.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/symplectic.hpp"
#include "sumprod/triples.hpp"
#include "sumprod/verify.hpp"

namespace sumprod {

using nlohmann::json;

namespace {

FpSet dd_set(const FpSet& a) {
  const FpSet d = combine(a, a, SetOp::diff);
  return combine(d, d, SetOp::prod);
}

// Discrete log table: log[g^k] = k for k in [0, p-1).
std::vector<u32> discrete_logs(const Prime& p) {
  std::vector<u32> log(p.value(), 0);
  u32 x = 1;
  for (u32 k = 0; k + 1 < p.value(); ++k) {
    log[x] = k;
    x = p.mul(x, p.primitive_root());
  }
  return log;
}

// Cyclic convolution of two functions on Z/(p-1).
std::vector<u128> cyclic_square(const std::vector<u128>& f) {
  const std::size_t m = f.size();
  std::vector<u128> out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (f[j] == 0) continue;
      const std::size_t k = i + j < m ? i + j : i + j - m;
      out[k] += f[i] * f[j];
    }
  }
  return out;
}

RStats r_stats(const FpSet& a, u64 seed, const Budget& budget) {
  const Prime& p = a.prime();
  const double n = static_cast<double>(a.size());
  RStats s;
  s.predicted = std::pow(n, 8) / p.value();
  const u64 m = p.value() - 1;
  if (budget.allows(3.0L * m * m)) {
    const auto log = discrete_logs(p);
    std::vector<u128> f(m, 0);
    for (u32 x : a.elements())
      for (u32 y : a.elements())
        if (x != y) ++f[log[p.sub(x, y)]];
    const auto f4 = cyclic_square(cyclic_square(f));
    long double total = 0;
    u128 lo = f4[0];
    for (u128 v : f4) {
      total += static_cast<long double>(v);
      lo = std::min(lo, v);
    }
    s.min = static_cast<double>(lo);
    s.mean = static_cast<double>(total / m);
    return s;
  }
  // Monte Carlo over 8-tuples, scaled to counts.
  s.sampled = true;
  s.samples = 100'000;
  SplitMix64 g(seed);
  const auto el = a.elements();
  std::vector<u64> hits(p.value(), 0);
  for (u64 i = 0; i < s.samples; ++i) {
    u32 prod = 1;
    for (int k = 0; k < 4; ++k) {
      const u32 x = el[g.below(el.size())], y = el[g.below(el.size())];
      prod = p.mul(prod, p.sub(x, y));
    }
    ++hits[prod];
  }
  const double scale = std::pow(n, 8) / static_cast<double>(s.samples);
  u64 lo = UINT64_MAX, total = 0;
  for (u32 x = 1; x < p.value(); ++x) {
    lo = std::min(lo, hits[x]);
    total += hits[x];
  }
  s.min = static_cast<double>(lo) * scale;
  s.mean = static_cast<double>(total) * scale / static_cast<double>(m);
  return s;
}

}  // namespace

Coverage fourfold_coverage(const FpSet& a, bool with_r_stats, u64 seed, const Budget& budget) {
  const Prime& p = a.prime();
  const FpSet dd = dd_set(a);
  Coverage c;
  Bitset hit(p.value());
  std::size_t count = 0;
  if (dd.contains(0)) {
    hit.set(0);
    count = 1;
  }
  for (u32 m : dd.elements()) {
    if (count == p.value()) break;
    ++c.steps;
    if (m == 0) continue;
    for (u32 x : dd.elements()) {
      const u32 y = p.mul(m, x);
      if (!hit.test(y)) {
        hit.set(y);
        ++count;
      }
    }
  }
  c.covered_count = count;
  c.covered = count == p.value();
  c.fraction = static_cast<double>(count) / p.value();
  if (with_r_stats) c.r_stats = r_stats(a, seed, budget);
  return c;
}

FpSet fourfold_product(const FpSet& a) {
  const FpSet dd = dd_set(a);
  return combine(dd, dd, SetOp::prod);
}

// Size expressions.

namespace {

class SizeParser {
 public:
  SizeParser(std::string_view text, double p) : s_(text), p_(p) {}

  double parse() {
    const double v = expr();
    skip_ws();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                "size expression '" + std::string(s_) + "': " + what);
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char ch) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == ch) {
      ++i_;
      return true;
    }
    return false;
  }
  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const double d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  double power() {
    const double base = atom();
    if (eat('^')) return std::pow(base, unary());
    return base;
  }
  double atom() {
    skip_ws();
    if (i_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    const char ch = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      double v = 0;
      const auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
      if (ec != std::errc()) fail("bad number");
      i_ = static_cast<std::size_t>(ptr - s_.data());
      return v;
    }
    std::size_t j = i_;
    while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
    const std::string_view name = s_.substr(i_, j - i_);
    i_ = j;
    if (name == "p") return p_;
    double (*fn)(double) = nullptr;
    if (name == "ceil") fn = [](double x) { return std::ceil(x); };
    else if (name == "floor") fn = [](double x) { return std::floor(x); };
    else if (name == "round") fn = [](double x) { return std::round(x); };
    else if (name == "sqrt") fn = [](double x) { return std::sqrt(x); };
    else if (name == "log") fn = [](double x) { return std::log(x); };
    if (!fn) fail("unknown name '" + std::string(name) + "'");
    if (!eat('(')) fail("expected '(' after " + std::string(name));
    const double v = expr();
    if (!eat(')')) fail("expected ')'");
    return fn(v);
  }

  std::string_view s_;
  double p_;
  std::size_t i_ = 0;
};

}  // namespace

u64 eval_size_expr(std::string_view expr, u64 p) {
  const double v = SizeParser(expr, static_cast<double>(p)).parse();
  // Tolerate rounding just below an integer, e.g. 1000^(1/3).
  const double f = std::floor(v + 1e-9);
  if (!std::isfinite(f) || f < 0) {
    throw Error(ErrorKind::InvalidArgument, "size expression '" + std::string(expr) +
                                                "' is negative or not finite");
  }
  return static_cast<u64>(f);
}

// Spec.

ExperimentSpec ExperimentSpec::from_json(const json& j) {
  ExperimentSpec s;
  try {
    s.primes = j.at("primes").get<std::vector<u64>>();
    for (const auto& f : j.at("families")) s.families.push_back(family_from_json(f));
    if (j.contains("sizes")) {
      for (const auto& e : j.at("sizes")) {
        if (e.is_number_unsigned() || e.is_number_integer()) {
          s.sizes.push_back(std::to_string(e.get<u64>()));
        } else {
          s.sizes.push_back(e.get<std::string>());
        }
      }
    }
    s.quantities = j.at("quantities").get<std::vector<std::string>>();
    s.trials = j.value("trials", u64{1});
    s.seed = j.value("seed", u64{0});
    if (j.contains("budget")) s.budget = static_cast<u64>(j.at("budget").get<double>());
    s.record_timing = j.value("record_timing", false);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("experiment spec: ") + e.what());
  }
  for (u64 p : s.primes) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  }
  for (const auto& q : s.quantities) {
    if (!is_sweep_quantity(q)) throw Error(ErrorKind::InvalidArgument, "unknown quantity " + q);
  }
  for (const auto& e : s.sizes) eval_size_expr(e, 2);  // syntax check
  if (s.trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be positive");
  return s;
}

json ExperimentSpec::to_json() const {
  json fam = json::array();
  for (const auto& f : families) fam.push_back(family_to_json(f));
  return json{{"primes", primes},   {"families", fam}, {"sizes", sizes},
              {"quantities", quantities}, {"trials", trials}, {"seed", seed},
              {"budget", budget},   {"record_timing", record_timing}};
}

std::vector<std::string> sweep_quantities() {
  return {"R", "R_strict", "C", "T", "Q", "rho_T", "rho_Q", "omega", "DD",
          "sumset", "prodset", "energy", "mult_energy", "coverage"};
}

bool is_sweep_quantity(std::string_view name) {
  if (name.starts_with("check:")) {
    const auto id = name.substr(6);
    for (const auto& c : check_registry())
      if (c.id == id) return true;
    return false;
  }
  const auto all = sweep_quantities();
  return std::find(all.begin(), all.end(), name) != all.end();
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::pair<std::string, std::string> size_value(const FpSet& a, u64 v) {
  return {std::to_string(v), v + 1 >= a.modulus() ? "saturated" : "ok"};
}

u64 q_count(const FpSet& a, const Budget& budget) {
  const double n = static_cast<double>(a.size());
  const CountMethod m = a.modulus() * n * n < n * n * n * n ? CountMethod::line : CountMethod::ratio;
  return count_collinear_quadruples(a, m, budget, 1);
}

}  // namespace

std::pair<std::string, std::string> measure(const FpSet& a, std::string_view q, u64 seed,
                                            const Budget& budget) {
  try {
    if (q.starts_with("check:")) {
      CheckInstance inst{"sweep", a, json::object(), seed};
      const CheckResult r = run_check(q.substr(6), inst, budget);
      std::string v = r.implied_constant ? fmt_double(*r.implied_constant) : "";
      return {v, std::string(to_string(r.status))};
    }
    if (q == "R") return size_value(a, pinned_ratios(a, PinnedVariant::full, budget, 1).size());
    if (q == "R_strict") {
      return size_value(a, pinned_ratios(a, PinnedVariant::strict, budget, 1).size());
    }
    if (q == "C") return size_value(a, cross_ratio_set(a, budget).size());
    if (q == "T") {
      return {std::to_string(count_collinear_triples(a, CountMethod::ratio, budget, 1)), "ok"};
    }
    if (q == "Q") return {std::to_string(q_count(a, budget)), "ok"};
    if (q == "rho_T") {
      return {fmt_double(asymptotic_residuals(a, false, {}, budget, 1).rho_t), "ok"};
    }
    if (q == "rho_Q") {
      const auto r = asymptotic_residuals(a, true, {}, budget, 1);
      if (!r.rho_q) return {"", "skipped"};
      return {fmt_double(*r.rho_q), "ok"};
    }
    if (q == "omega") {
      std::vector<Point2> pts;
      for (u32 x : a.elements())
        for (u32 y : a.elements())
          if (x != 0 || y != 0) pts.push_back({x, y});
      return size_value(a, omega_set(PointSet2D(a.prime(), std::move(pts)), budget, 1).size());
    }
    if (q == "DD") return size_value(a, dd_set(a).size());
    if (q == "sumset") return size_value(a, combine(a, a, SetOp::sum).size());
    if (q == "prodset") return size_value(a, combine(a, a, SetOp::prod).size());
    if (q == "energy") {
      return {std::to_string(energy(a, a, EnergyKind::additive, 2)), "ok"};
    }
    if (q == "mult_energy") {
      return {std::to_string(energy(a, a, EnergyKind::multiplicative, 2)), "ok"};
    }
    if (q == "coverage") {
      const Coverage c = fourfold_coverage(a, false, seed, budget);
      return {fmt_double(c.fraction), "ok"};
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) return {"", "budget"};
    return {"", "error"};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown quantity " + std::string(q));
}

SweepResult run_sweep(const ExperimentSpec& spec, int jobs) {
  struct Task {
    std::size_t cell;
    u64 p;
    const FamilySpec* family;
    std::string size_expr;
    u64 trial;
  };
  std::vector<std::string> sizes = spec.sizes;
  if (sizes.empty()) sizes.push_back("0");
  std::vector<Task> tasks;
  std::size_t cell = 0;
  for (u64 p : spec.primes)
    for (const auto& f : spec.families)
      for (const auto& s : sizes) {
        for (u64 t = 0; t < spec.trials; ++t) tasks.push_back({cell, p, &f, s, t});
        ++cell;
      }
  const Budget budget = Budget::ops(spec.budget);
  std::vector<std::vector<SweepRow>> out(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    const Task& t = tasks[i];
    const Prime p(t.p);
    const u64 seed = mix_seed(mix_seed(spec.seed, t.cell), t.trial);
    FamilySpec f = *t.family;
    const u64 requested = eval_size_expr(t.size_expr, t.p);
    if (f.kind == FamilyKind::subgroup) {
      if (f.order == 0 || spec.sizes.size() > 0) {
        u64 best = 1;
        for (u64 d = 1; d <= std::min<u64>(requested, t.p - 1); ++d)
          if ((t.p - 1) % d == 0) best = d;
        f.order = best;
      }
    } else if (f.kind != FamilyKind::explicit_set) {
      f.size = requested;
    }
    if (f.kind == FamilyKind::random) f.seed = seed;
    const std::string label(to_string(f.kind));
    std::vector<SweepRow>& rows = out[i];
    std::optional<FpSet> set;
    try {
      set = make_family(f, p);
    } catch (const Error&) {
      for (const auto& q : spec.quantities)
        rows.push_back({t.p, label, requested, seed, q, "", 0, "error"});
      return;
    }
    for (const auto& q : spec.quantities) {
      const auto start = std::chrono::steady_clock::now();
      auto [value, status] = measure(*set, q, seed, budget);
      u64 ms = 0;
      if (spec.record_timing) {
        ms = static_cast<u64>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count());
      }
      rows.push_back({t.p, label, set->size(), seed, q, std::move(value), ms, std::move(status)});
    }
  });
  SweepResult r;
  r.spec = spec.to_json();
  for (auto& v : out)
    for (auto& row : v) r.rows.push_back(std::move(row));
  return r;
}

ExponentFit fit_exponent(const std::vector<SweepRow>& rows, std::string_view quantity) {
  std::vector<std::pair<double, double>> pts;
  std::vector<u64> sizes;
  for (const auto& r : rows) {
    if (r.quantity != quantity || r.status != "ok" || r.value.empty() || r.size == 0) continue;
    const double v = std::stod(r.value);
    if (v <= 0) continue;
    pts.emplace_back(std::log(static_cast<double>(r.size)), std::log(v));
    sizes.push_back(r.size);
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.size() < 3) {
    throw Error(ErrorKind::InsufficientData,
                "fit of " + std::string(quantity) + " needs three distinct sizes");
  }
  const double m = static_cast<double>(pts.size());
  double sx = 0, sy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  ExponentFit f;
  f.quantity = std::string(quantity);
  f.points = pts.size();
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double sse = 0;
  for (auto [x, y] : pts) {
    const double e = y - (f.intercept + f.slope * x);
    sse += e * e;
  }
  f.stderr_slope = pts.size() > 2 ? std::sqrt(sse / (m - 2) / sxx) : 0.0;
  f.r2 = syy > 0 ? 1.0 - sse / syy : 1.0;
  return f;
}

// Persistence. CSV carries the spec on a leading "# spec:" comment line so
// that a load/persist cycle reproduces the file byte for byte.

namespace {

constexpr std::string_view kCsvHeader = "p,family,size,seed,quantity,value,runtime_ms,status";

u64 parse_u64(std::string_view s) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string to_csv(const SweepResult& r) {
  std::string out = "# spec: " + r.spec.dump() + "\n";
  out += kCsvHeader;
  out += '\n';
  for (const auto& row : r.rows) {
    out += std::to_string(row.p) + ',' + row.family + ',' + std::to_string(row.size) + ',' +
           std::to_string(row.seed) + ',' + row.quantity + ',' + row.value + ',' +
           std::to_string(row.runtime_ms) + ',' + row.status + '\n';
  }
  return out;
}

std::string to_json_text(const SweepResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"p", row.p},
                    {"family", row.family},
                    {"size", row.size},
                    {"seed", row.seed},
                    {"quantity", row.quantity},
                    {"value", row.value},
                    {"runtime_ms", row.runtime_ms},
                    {"status", row.status}});
  }
  return json{{"spec", r.spec}, {"rows", rows}}.dump(2) + "\n";
}

void persist(const SweepResult& r, const std::filesystem::path& path, PersistFormat f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << (f == PersistFormat::csv ? to_csv(r) : to_json_text(r));
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

SweepResult parse_csv(std::string_view text) {
  SweepResult r;
  r.spec = json::object();
  std::size_t pos = 0;
  bool header = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with("# spec: ")) {
      try {
        r.spec = json::parse(line.substr(8));
      } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("csv spec line: ") + e.what());
      }
      continue;
    }
    if (!header) {
      if (line != kCsvHeader) throw Error(ErrorKind::ParseError, "unexpected csv header");
      header = true;
      continue;
    }
    std::vector<std::string_view> f;
    std::size_t s = 0;
    for (;;) {
      const std::size_t c = line.find(',', s);
      f.push_back(line.substr(s, c == std::string_view::npos ? std::string_view::npos : c - s));
      if (c == std::string_view::npos) break;
      s = c + 1;
    }
    if (f.size() != 8) throw Error(ErrorKind::ParseError, "csv row needs 8 fields");
    r.rows.push_back({parse_u64(f[0]), std::string(f[1]), parse_u64(f[2]), parse_u64(f[3]),
                      std::string(f[4]), std::string(f[5]), parse_u64(f[6]), std::string(f[7])});
  }
  if (!header) throw Error(ErrorKind::ParseError, "missing csv header");
  return r;
}

SweepResult load_result(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    SweepResult r;
    try {
      const json j = json::parse(text);
      r.spec = j.at("spec");
      for (const auto& e : j.at("rows")) {
        r.rows.push_back({e.at("p").get<u64>(), e.at("family").get<std::string>(),
                          e.at("size").get<u64>(), e.at("seed").get<u64>(),
                          e.at("quantity").get<std::string>(), e.at("value").get<std::string>(),
                          e.at("runtime_ms").get<u64>(), e.at("status").get<std::string>()});
      }
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("result json: ") + e.what());
    }
    return r;
  }
  return parse_csv(text);
}

}  // namespace sumprod
