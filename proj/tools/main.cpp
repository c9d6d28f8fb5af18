// sumprod command-line front end. stdout carries results only; every
// diagnostic goes to stderr.
//
// Exit codes: 0 ok, 1 an exact check failed, 2 usage error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumprod/crossratio.hpp"
#include "sumprod/experiments.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/repfn.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/symplectic.hpp"
#include "sumprod/triples.hpp"
#include "sumprod/verify.hpp"

using namespace sumprod;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct FamilyArgs {
  u64 p = 0;
  std::string family = "random";
  u64 size = 0;
  u64 order = 0;
  std::int64_t start = 0;
  std::int64_t step = 1;
  u64 len = 0;
  std::vector<u32> elements;

  void add_to(CLI::App* app, bool require_p) {
    auto* opt = app->add_option("--p", p, "prime modulus");
    if (require_p) opt->required();
    app->add_option("--family", family, "random|ap|geometric|subgroup|interval|explicit");
    app->add_option("--size", size, "set size");
    app->add_option("--order", order, "subgroup order");
    app->add_option("--start", start, "first term");
    app->add_option("--step", step, "difference or ratio");
    app->add_option("--len", len, "progression length");
    app->add_option("--elements", elements, "explicit elements");
  }

  FpSet make(u64 seed) const {
    FamilySpec f;
    f.kind = parse_family_kind(family);
    f.size = len != 0 ? len : size;
    f.order = order;
    f.start = start;
    f.step = step;
    f.elements = elements;
    f.seed = seed;
    return make_family(f, Prime(p));
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
}

// energy:add:2, energy:mult:3, energy:add:1.5 (E_{3/2})
std::string count_energy(const FpSet& a, std::string_view spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  const std::string kind = parts.size() > 1 ? parts[1] : "add";
  const std::string order = parts.size() > 2 ? parts[2] : "2";
  if (parts.size() > 3 || (kind != "add" && kind != "mult")) {
    throw Error(ErrorKind::InvalidArgument, "energy quantity is energy:{add|mult}:{2|3|1.5}");
  }
  if (order == "1.5") {
    if (kind != "add") throw Error(ErrorKind::InvalidArgument, "E_{3/2} is additive only");
    std::ostringstream os;
    os.precision(17);
    os << energy_three_halves(a, a);
    return os.str();
  }
  if (order != "2" && order != "3") throw Error(ErrorKind::InvalidArgument, "order must be 2, 3 or 1.5");
  return std::to_string(energy(a, a, kind == "add" ? EnergyKind::additive : EnergyKind::multiplicative,
                               std::stoi(order)));
}

std::string count_quantity(const FpSet& a, const std::string& q, const std::string& method,
                           const Budget& budget, int jobs) {
  const std::optional<CountMethod> m =
      method.empty() ? std::nullopt : std::optional(parse_count_method(method));
  if (q == "T") {
    return std::to_string(count_collinear_triples(a, m.value_or(CountMethod::ratio), budget, jobs));
  }
  if (q == "Q") {
    const double n = static_cast<double>(a.size());
    const CountMethod def = a.modulus() * n * n < n * n * n * n ? CountMethod::line : CountMethod::ratio;
    return std::to_string(count_collinear_quadruples(a, m.value_or(def), budget, jobs));
  }
  if (m) throw Error(ErrorKind::InvalidArgument, "--method applies to T and Q only");
  if (q == "R") return std::to_string(pinned_ratios(a, PinnedVariant::full, budget, jobs).size());
  if (q == "R_strict") {
    return std::to_string(pinned_ratios(a, PinnedVariant::strict, budget, jobs).size());
  }
  if (q == "C") return std::to_string(cross_ratio_set(a, budget).size());
  if (q == "omega") {
    std::vector<Point2> pts;
    for (u32 x : a.elements())
      for (u32 y : a.elements())
        if (x != 0 || y != 0) pts.push_back({x, y});
    return std::to_string(omega_set(PointSet2D(a.prime(), std::move(pts)), budget, jobs).size());
  }
  if (q == "E_R") return std::to_string(pinned_ratio_energy(a, a, budget));
  if (q == "E_C") return std::to_string(cross_ratio_energy(a, budget));
  if (q.rfind("energy", 0) == 0) return count_energy(a, q);
  if (q == "sumset") return std::to_string(combine(a, a, SetOp::sum).size());
  if (q == "prodset") return std::to_string(combine(a, a, SetOp::prod).size());
  if (q == "DD") {
    const FpSet d = combine(a, a, SetOp::diff);
    return std::to_string(combine(d, d, SetOp::prod).size());
  }
  throw Error(ErrorKind::InvalidArgument, "unknown quantity " + q);
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-product quantities over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 1;
  u64 seed = 0;
  double budget_ops = 4e9;
  app.add_option("--jobs", jobs, "worker threads (outputs do not depend on it)");
  app.add_option("--seed", seed, "master seed (default 0)");
  app.add_option("--budget", budget_ops, "operation budget");

  // gen
  auto* gen = app.add_subcommand("gen", "write a set file");
  FamilyArgs gen_args;
  gen_args.add_to(gen, true);
  std::string gen_out;
  gen->add_option("--out", gen_out, "output file (stdout if omitted)");

  // count
  auto* count = app.add_subcommand("count", "print one integer quantity of a set");
  std::string count_set, count_q, count_method;
  count->add_option("--set", count_set, "set file")->required();
  count->add_option("--quantity", count_q, "T|Q|R|R_strict|C|omega|E_R|E_C|energy:KIND:ORDER|sumset|prodset|DD")
      ->required();
  count->add_option("--method", count_method, "brute|ratio|shifted_energy|line");

  // check
  auto* check = app.add_subcommand("check", "run verification checks as JSONL");
  std::string check_suite = "all", check_config, check_set, check_out, check_params;
  check->add_option("--suite", check_suite, "exact|monitors|all|<check id>");
  check->add_option("--config", check_config, "instance config file");
  check->add_option("--set", check_set, "single set file");
  check->add_option("--params", check_params, "params JSON for --set");
  check->add_option("--out", check_out, "JSONL output (stdout if omitted)");
  bool check_list = false;
  check->add_flag("--list", check_list, "list registered checks");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run an experiment sweep");
  std::string sweep_spec, sweep_out, sweep_format;
  sweep->add_option("--spec", sweep_spec, "ExperimentSpec JSON")->required();
  sweep->add_option("--out", sweep_out, "output file (stdout if omitted)");
  sweep->add_option("--format", sweep_format, "csv|json (default from extension)");

  // coverage
  auto* coverage = app.add_subcommand("coverage", "(A-A)^4 coverage of F_p");
  FamilyArgs cov_args;
  cov_args.add_to(coverage, false);
  std::string cov_set;
  u64 cov_trials = 1;
  bool cov_r = false;
  coverage->add_option("--set", cov_set, "set file instead of a family");
  coverage->add_option("--trials", cov_trials, "seeded trials");
  coverage->add_flag("--r-stats", cov_r, "include representation statistics");

  // report
  auto* report = app.add_subcommand("report", "exponent fits from a sweep result");
  std::string report_in;
  std::vector<std::string> report_fit;
  report->add_option("--in", report_in, "CSV or JSON sweep result")->required();
  report->add_option("--fit", report_fit, "quantities to fit (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, std::cerr, std::cerr);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (jobs < 1) jobs = 1;
  set_default_jobs(jobs);
  const Budget budget = Budget::ops(static_cast<u64>(budget_ops));

  try {
    if (*gen) {
      write_output(gen_out, set_to_json(gen_args.make(seed)));
      return 0;
    }
    if (*count) {
      const FpSet a = load_set(count_set);
      std::cout << count_quantity(a, count_q, count_method, budget, jobs) << '\n';
      return 0;
    }
    if (*check) {
      if (check_list) {
        for (const auto& c : check_registry()) {
          std::cout << json{{"id", c.id}, {"tier", to_string(c.tier)}, {"summary", c.summary}}.dump()
                    << '\n';
        }
        return 0;
      }
      std::vector<CheckInstance> instances;
      if (!check_config.empty()) {
        instances = instances_from_config(json::parse(read_file(check_config)), seed);
      }
      if (!check_set.empty()) {
        json params = check_params.empty() ? json::object() : json::parse(check_params);
        instances.push_back({check_set, load_set(check_set), params, seed});
      }
      if (instances.empty()) throw Error(ErrorKind::InvalidArgument, "check needs --config or --set");
      std::vector<CheckResult> results;
      if (check_suite == "exact" || check_suite == "monitors" || check_suite == "all") {
        results = run_suite(check_suite, instances, budget, jobs);
      } else {
        find_check(check_suite);
        for (std::size_t i = 0; i < instances.size(); ++i) {
          results.push_back(run_check(check_suite, instances[i], budget));
          results.back().instance = i;
        }
      }
      write_output(check_out, to_jsonl(results));
      std::size_t failed = 0, skipped = 0;
      for (const auto& r : results) {
        if (r.status == Status::fail) ++failed;
        if (r.status == Status::skipped) ++skipped;
      }
      std::cerr << results.size() << " results, " << failed << " failed, " << skipped
                << " skipped\n";
      return failed > 0 ? kExitFail : 0;
    }
    if (*sweep) {
      ExperimentSpec spec = ExperimentSpec::from_json(json::parse(read_file(sweep_spec)));
      if (app.get_option("--seed")->count() > 0) spec.seed = seed;
      const SweepResult r = run_sweep(spec, jobs);
      const bool as_json = sweep_format == "json" ||
                           (sweep_format.empty() && sweep_out.size() > 5 &&
                            sweep_out.substr(sweep_out.size() - 5) == ".json");
      if (!sweep_format.empty() && sweep_format != "json" && sweep_format != "csv") {
        throw Error(ErrorKind::InvalidArgument, "--format is csv or json");
      }
      write_output(sweep_out, as_json ? to_json_text(r) : to_csv(r));
      return 0;
    }
    if (*coverage) {
      json rows = json::array();
      for (u64 t = 0; t < cov_trials; ++t) {
        const u64 s = mix_seed(seed, t);
        const FpSet a = cov_set.empty() ? cov_args.make(s) : load_set(cov_set);
        const Coverage c = fourfold_coverage(a, cov_r, s, budget);
        json row{{"trial", t},         {"seed", s},          {"p", a.modulus()},
                 {"size", a.size()},   {"covered", c.covered}, {"fraction", c.fraction},
                 {"covered_count", c.covered_count}, {"steps", c.steps}};
        if (c.r_stats) {
          row["r_stats"] = {{"sampled", c.r_stats->sampled}, {"samples", c.r_stats->samples},
                            {"min", c.r_stats->min},         {"mean", c.r_stats->mean},
                            {"predicted", c.r_stats->predicted}};
        }
        rows.push_back(row);
        std::cout << row.dump() << '\n';
      }
      return 0;
    }
    if (*report) {
      const SweepResult r = load_result(report_in);
      std::vector<std::string> quantities = report_fit;
      if (quantities.empty()) {
        for (const auto& row : r.rows)
          if (std::find(quantities.begin(), quantities.end(), row.quantity) == quantities.end())
            quantities.push_back(row.quantity);
      }
      bool any = false;
      for (const auto& q : quantities) {
        try {
          const ExponentFit f = fit_exponent(r.rows, q);
          std::cout << json{{"quantity", f.quantity}, {"points", f.points},
                            {"slope", f.slope},       {"intercept", f.intercept},
                            {"stderr_slope", f.stderr_slope}, {"r2", f.r2}}
                           .dump()
                    << '\n';
          any = true;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::InsufficientData || !report_fit.empty()) throw;
          std::cerr << "skipping " << q << ": " << e.what() << '\n';
        }
      }
      if (!any) throw Error(ErrorKind::InsufficientData, "no quantity could be fitted");
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << "error [ParseError]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
